#ifndef SWNET_BIGMATH_HPP
#define SWNET_BIGMATH_HPP

#include <gmpxx.h>

#include <cstdint>

namespace swnet {

mpz_class factorial(uint64_t n);
mpz_class binomial(uint64_t n, uint64_t r);  // 0 when r > n

// floor(log2(z)) for z >= 1.
int64_t floor_log2(const mpz_class& z);
int64_t ceil_log2(const mpz_class& z);
bool is_pow2(const mpz_class& z);

// Dyadic bracket of log2(value) with `frac_bits` fractional bits.
// round_up=true  -> smallest multiple of 2^-frac_bits that is >= log2(value)
// round_up=false -> largest  multiple of 2^-frac_bits that is <= log2(value)
// Exact (both directions coincide) when value is a power of two. value > 0.
mpq_class log2_bracket(const mpq_class& value, int frac_bits, bool round_up);

// q^e for rationals, e >= 0.
mpq_class pow_q(const mpq_class& q, uint64_t e);

mpz_class pow_z(const mpz_class& z, uint64_t e);

}  // namespace swnet

#endif
