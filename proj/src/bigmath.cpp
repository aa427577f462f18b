#include "swnet/bigmath.hpp"

#include <stdexcept>

namespace swnet {

mpz_class factorial(uint64_t n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class binomial(uint64_t n, uint64_t r) {
  if (r > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, r);
  return b;
}

int64_t floor_log2(const mpz_class& z) {
  if (z <= 0) throw std::invalid_argument("floor_log2: argument must be positive");
  return static_cast<int64_t>(mpz_sizeinbase(z.get_mpz_t(), 2)) - 1;
}

int64_t ceil_log2(const mpz_class& z) {
  return floor_log2(z) + (is_pow2(z) ? 0 : 1);
}

bool is_pow2(const mpz_class& z) {
  if (z <= 0) return false;
  return mpz_popcount(z.get_mpz_t()) == 1;
}

namespace {

// true iff P <= 2^t * Q  (all positive)
bool le_pow2(const mpz_class& p, const mpz_class& q, int64_t t) {
  mpz_class lhs = p, rhs = q;
  if (t >= 0)
    mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), static_cast<mp_bitcnt_t>(t));
  else
    mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(), static_cast<mp_bitcnt_t>(-t));
  return lhs <= rhs;
}

}  // namespace

mpq_class log2_bracket(const mpq_class& value, int frac_bits, bool round_up) {
  if (value <= 0) throw std::invalid_argument("log2_bracket: value must be positive");
  if (frac_bits < 0 || frac_bits > 24) throw std::invalid_argument("log2_bracket: bad frac_bits");
  mpq_class v = value;
  v.canonicalize();
  mpz_class p = v.get_num(), q = v.get_den();
  if (is_pow2(p) && is_pow2(q)) return mpq_class(floor_log2(p) - floor_log2(q));

  mpz_class bp, bq;
  mpz_pow_ui(bp.get_mpz_t(), p.get_mpz_t(), 1ul << frac_bits);
  mpz_pow_ui(bq.get_mpz_t(), q.get_mpz_t(), 1ul << frac_bits);

  // ceil of log2(bp/bq): smallest t with bp <= 2^t * bq.
  int64_t t = floor_log2(bp) - floor_log2(bq) + 1;
  while (!le_pow2(bp, bq, t)) ++t;
  while (le_pow2(bp, bq, t - 1)) --t;
  if (!round_up) --t;  // value is not a power of two here, so floor = ceil - 1

  mpz_class num(t);
  mpq_class out(num, mpz_class(1));
  out /= mpq_class(mpz_class(1) << frac_bits, mpz_class(1));
  out.canonicalize();
  return out;
}

mpq_class pow_q(const mpq_class& q, uint64_t e) {
  mpq_class v = q;
  v.canonicalize();
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), v.get_den().get_mpz_t(), e);
  mpq_class out(num, den);
  out.canonicalize();
  return out;
}

mpz_class pow_z(const mpz_class& z, uint64_t e) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), z.get_mpz_t(), e);
  return out;
}

}  // namespace swnet
