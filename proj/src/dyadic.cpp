#include "swnet/dyadic.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "swnet/errors.hpp"

namespace swnet {

namespace {

int64_t checked(__int128 v, const char* ctx) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw std::overflow_error(std::string("dyadic overflow in ") + ctx);
  return static_cast<int64_t>(v);
}

}  // namespace

Dyadic Dyadic::normalized(int64_t m, int32_t e) {
  if (m == 0) return Dyadic(0, 0, true);
  while (e > 0 && (m & 1) == 0) {
    m >>= 1;
    --e;
  }
  return Dyadic(m, e, true);
}

Dyadic Dyadic::ratio(int64_t mantissa, int32_t exponent) {
  if (exponent < 0 || exponent > 62) throw std::invalid_argument("dyadic exponent out of range");
  return normalized(mantissa, exponent);
}

Dyadic Dyadic::pow2(int e) {
  if (e >= 0) {
    if (e > 62) throw std::overflow_error("dyadic pow2 overflow");
    return Dyadic(int64_t{1} << e, 0, true);
  }
  if (e < -62) throw std::overflow_error("dyadic pow2 underflow");
  return Dyadic(1, -e, true);
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  int32_t e = std::max(a.exp_, b.exp_);
  if (e > 62) throw std::overflow_error("dyadic exponent overflow");
  __int128 ma = static_cast<__int128>(a.mant_) << (e - a.exp_);
  __int128 mb = static_cast<__int128>(b.mant_) << (e - b.exp_);
  return Dyadic::normalized(checked(ma + mb, "add"), e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  __int128 m = static_cast<__int128>(a.mant_) * b.mant_;
  int64_t exp = static_cast<int64_t>(a.exp_) + b.exp_;
  // reduce in 128-bit space first so e.g. (x/2^40)*(y/2^40) with even product survives
  while (exp > 0 && m != 0 && (m & 1) == 0) {
    m >>= 1;
    --exp;
  }
  if (exp > 62) throw std::overflow_error("dyadic exponent overflow");
  return Dyadic::normalized(checked(m, "mul"), static_cast<int32_t>(exp));
}

std::strong_ordering Dyadic::operator<=>(const Dyadic& o) const {
  int32_t e = std::max(exp_, o.exp_);
  __int128 ma = static_cast<__int128>(mant_) << (e - exp_);
  __int128 mb = static_cast<__int128>(o.mant_) << (e - o.exp_);
  if (ma < mb) return std::strong_ordering::less;
  if (ma > mb) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

double Dyadic::to_double() const { return std::ldexp(static_cast<double>(mant_), -exp_); }

std::string Dyadic::to_string() const {
  return std::to_string(mant_) + "/2^" + std::to_string(exp_);
}

Dyadic Dyadic::parse(std::string_view text) {
  auto pos = text.find("/2^");
  if (pos == std::string_view::npos)
    throw parse_error("dyadic must look like '<m>/2^<e>', got '" + std::string(text) + "'", 0);
  int64_t m = 0;
  int32_t e = 0;
  auto mtext = text.substr(0, pos);
  auto etext = text.substr(pos + 3);
  auto r1 = std::from_chars(mtext.data(), mtext.data() + mtext.size(), m);
  auto r2 = std::from_chars(etext.data(), etext.data() + etext.size(), e);
  if (r1.ec != std::errc{} || r1.ptr != mtext.data() + mtext.size() || r2.ec != std::errc{} ||
      r2.ptr != etext.data() + etext.size() || e < 0)
    throw parse_error("bad dyadic '" + std::string(text) + "'", 0);
  Dyadic d = ratio(m, e);
  if (d.mantissa() != m || d.exponent() != e)
    throw parse_error("dyadic not in reduced form: '" + std::string(text) + "'", 0);
  return d;
}

}  // namespace swnet
