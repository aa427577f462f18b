#ifndef SWNET_CUT_FUNCTION_HPP
#define SWNET_CUT_FUNCTION_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "swnet/cut.hpp"
#include "swnet/dyadic.hpp"
#include "swnet/vertex_space.hpp"

namespace swnet {

// A function on the cuts of a space, held in the parity basis: the basis
// function e_V (V a set of interior vertices) takes value (-1)^|V ∩ L(C)| on
// cut C. Terms are sorted by V-mask with zero coefficients dropped, so
// structural equality == function equality. The basis is orthonormal under
// the normalized pair product, hence `dot` below is a plain coefficient sum.
class CutFunction {
 public:
  using Term = std::pair<uint32_t, Dyadic>;

  explicit CutFunction(int interior_count);
  static CutFunction basis(int interior_count, uint32_t v_mask, Dyadic coeff = Dyadic(1));

  int interior_count() const { return interior_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Dyadic coeff(uint32_t v_mask) const;
  void add_term(uint32_t v_mask, const Dyadic& delta);  // accumulate, drop zeros

  CutFunction operator+(const CutFunction& o) const;
  CutFunction operator-(const CutFunction& o) const;
  CutFunction negated() const;
  CutFunction scaled(const Dyadic& c) const;

  Dyadic evaluate(const Cut& c) const;

  bool operator==(const CutFunction&) const = default;
  bool operator<(const CutFunction& o) const;  // lexicographic, for canonical maps

  std::string to_string() const;  // "<mask-hex>:<dyadic>;..." ("-" when zero)
  static CutFunction parse(int interior_count, std::string_view text);

 private:
  int interior_ = 0;
  std::vector<Term> terms_;
};

// Both computed against matching interior counts.
Dyadic dot(const CutFunction& f, const CutFunction& g);             // coefficient sum
Dyadic dot_bruteforce(const CutFunction& f, const CutFunction& g);  // 2^(2-n) Σ_C f(C)g(C)

}  // namespace swnet

#endif
