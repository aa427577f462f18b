#ifndef SWNET_DYADIC_HPP
#define SWNET_DYADIC_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace swnet {

// Exact dyadic rational mantissa / 2^exponent, fully reduced (exponent is the
// least non-negative one, i.e. mantissa odd or exponent zero; zero is 0/2^0).
// All arithmetic is overflow-checked.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(int64_t integer) : mant_(integer), exp_(0) {}  // implicit on purpose
  static Dyadic ratio(int64_t mantissa, int32_t exponent);
  static Dyadic pow2(int e);  // 2^e, e may be negative

  int64_t mantissa() const { return mant_; }
  int32_t exponent() const { return exp_; }
  bool is_zero() const { return mant_ == 0; }
  bool is_integer() const { return exp_ == 0; }

  Dyadic operator-() const { return Dyadic(-mant_, exp_, true); }
  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
  Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }
  Dyadic& operator*=(const Dyadic& o) { return *this = *this * o; }

  bool operator==(const Dyadic&) const = default;
  std::strong_ordering operator<=>(const Dyadic& o) const;

  double to_double() const;
  std::string to_string() const;  // "<mantissa>/2^<exponent>"
  static Dyadic parse(std::string_view text);

 private:
  Dyadic(int64_t m, int32_t e, bool) : mant_(m), exp_(e) {}
  static Dyadic normalized(int64_t m, int32_t e);

  int64_t mant_ = 0;
  int32_t exp_ = 0;
};

}  // namespace swnet

#endif
