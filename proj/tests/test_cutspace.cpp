#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "swnet/cut.hpp"
#include "swnet/cut_function.hpp"
#include "swnet/dyadic.hpp"
#include "swnet/errors.hpp"
#include "swnet/knowledge.hpp"
#include "swnet/rng.hpp"
#include "swnet/transitions.hpp"
#include "swnet/vertex_space.hpp"

using namespace swnet;

namespace {

CutFunction random_function(int interior, Rng& rng, int max_terms = 4) {
  CutFunction f(interior);
  int terms = static_cast<int>(rng.below(max_terms + 1));
  for (int i = 0; i < terms; ++i) {
    uint32_t mask = static_cast<uint32_t>(rng.below(uint64_t{1} << interior));
    int64_t mant = rng.below_int(17) - 8;
    int32_t exp = static_cast<int32_t>(rng.below(3));
    f.add_term(mask, Dyadic::ratio(mant, exp));
  }
  return f;
}

}  // namespace

TEST_CASE("dyadic rationals normalize, compare, and round-trip") {
  CHECK(Dyadic::ratio(6, 1) == Dyadic(3));
  CHECK(Dyadic::ratio(4, 2) == Dyadic(1));
  CHECK(Dyadic::ratio(0, 5) == Dyadic(0));
  CHECK(Dyadic::ratio(0, 5).exponent() == 0);
  Dyadic q = Dyadic::ratio(3, 2);  // 3/4
  CHECK(q.mantissa() == 3);
  CHECK(q.exponent() == 2);
  CHECK(!q.is_integer());
  CHECK(q.to_double() == 0.75);

  CHECK(q + Dyadic::ratio(1, 2) == Dyadic(1));
  CHECK(q - q == Dyadic(0));
  CHECK(q * Dyadic::ratio(1, 1) == Dyadic::ratio(3, 3));
  CHECK(-q == Dyadic::ratio(-3, 2));
  CHECK(Dyadic::pow2(3) == Dyadic(8));
  CHECK(Dyadic::pow2(-2) == Dyadic::ratio(1, 2));

  CHECK(Dyadic::ratio(1, 1) < q);
  CHECK(q < Dyadic(1));
  CHECK(Dyadic(-2) < Dyadic::ratio(-1, 1));

  CHECK(Dyadic(3).to_string() == "3/2^0");
  CHECK(q.to_string() == "3/2^2");
  CHECK(Dyadic::parse("3/2^2") == q);
  CHECK(Dyadic::parse("-5/2^1") == Dyadic::ratio(-5, 1));
  CHECK_THROWS_AS(Dyadic::parse("4/2^2"), parse_error);  // not reduced
  CHECK_THROWS_AS(Dyadic::parse("7"), parse_error);
  CHECK_THROWS_AS(Dyadic::parse("a/2^1"), parse_error);

  CHECK_THROWS_AS(Dyadic::ratio(3, -1), std::invalid_argument);
  CHECK_THROWS_AS(Dyadic::ratio(3, 63), std::invalid_argument);
  Dyadic big{int64_t{1} << 62};
  CHECK_THROWS_AS(big + big, std::overflow_error);
  CHECK_THROWS_AS(big * Dyadic(2), std::overflow_error);
  CHECK_THROWS_AS(Dyadic::ratio(1, 62) * Dyadic::ratio(1, 1), std::overflow_error);
  CHECK_THROWS_AS(Dyadic::pow2(63), std::overflow_error);
  CHECK_THROWS_AS(Dyadic::pow2(-63), std::overflow_error);
}

TEST_CASE("parity basis functions match the membership-count sign") {
  for (int n = 3; n <= 7; ++n) {
    VertexSpace sp = VertexSpace::make(n);
    const int ni = sp.interior();
    std::vector<Cut> cuts = enumerate_cuts(sp);
    for (uint32_t v = 0; v < (1u << ni); ++v) {
      CutFunction e = CutFunction::basis(ni, v);
      for (const Cut& c : cuts) {
        int parity = std::popcount(v & c.left_mask) & 1;
        CHECK(e.evaluate(c) == Dyadic(parity ? -1 : 1));
      }
    }
  }
  CHECK(CutFunction::basis(3, 0b101, Dyadic::ratio(3, 1)).coeff(0b101) == Dyadic::ratio(3, 1));
  CHECK_THROWS_AS(CutFunction::basis(3, 0b1000), std::invalid_argument);
}

TEST_CASE("term arithmetic accumulates, cancels, and stays sorted") {
  CutFunction f(3);
  CHECK(f.is_zero());
  f.add_term(0b101, Dyadic::ratio(1, 1));
  f.add_term(0b010, Dyadic(2));
  f.add_term(0b101, Dyadic::ratio(1, 1));
  CHECK(f.coeff(0b101) == Dyadic(1));
  CHECK(f.coeff(0b010) == Dyadic(2));
  CHECK(f.coeff(0b001) == Dyadic(0));
  REQUIRE(f.terms().size() == 2);
  CHECK(f.terms()[0].first == 0b010);  // sorted by mask
  CHECK(f.terms()[1].first == 0b101);

  f.add_term(0b010, Dyadic(-2));
  CHECK(f.terms().size() == 1);  // cancelled term dropped
  CHECK(f - f == CutFunction(3));
  CHECK(f.negated() == f.scaled(Dyadic(-1)));

  Rng rng{201};
  VertexSpace sp = VertexSpace::make(6);
  std::vector<Cut> cuts = enumerate_cuts(sp);
  for (int it = 0; it < 100; ++it) {
    CutFunction a = random_function(4, rng);
    CutFunction b = random_function(4, rng);
    CHECK((a + b) - b == a);
    const Cut& c = cuts[rng.below(cuts.size())];
    CHECK((a + b).evaluate(c) == a.evaluate(c) + b.evaluate(c));
    CHECK(a.scaled(Dyadic::ratio(3, 1)).evaluate(c) == a.evaluate(c) * Dyadic::ratio(3, 1));
    CHECK(CutFunction::parse(4, a.to_string()) == a);
  }

  CHECK(CutFunction(4).to_string() == "-");
  CHECK(CutFunction::parse(4, "-") == CutFunction(4));
  CHECK(CutFunction::parse(3, "2:1/2^0;5:-3/2^1").coeff(0b101) == Dyadic::ratio(-3, 1));
  CHECK_THROWS_AS(CutFunction::parse(3, "q:1/2^0"), parse_error);
  CHECK_THROWS_AS(CutFunction::parse(3, "5:1/2^0;2:1/2^0"), parse_error);
  CHECK_THROWS_AS(CutFunction::parse(3, "2:0/2^0"), parse_error);
  CHECK_THROWS(CutFunction::parse(3, "8:1/2^0"));
  CHECK_THROWS_AS(CutFunction(3) + CutFunction(4), std::invalid_argument);
}

TEST_CASE("dot is the coefficient sum and equals the cut average") {
  Rng rng{202};
  for (int it = 0; it < 500; ++it) {
    int n = 3 + static_cast<int>(rng.below(8));  // up to n = 10
    CutFunction a = random_function(n - 2, rng);
    CutFunction b = random_function(n - 2, rng);
    CHECK(dot(a, b) == dot_bruteforce(a, b));
    CHECK(dot(a, b) == dot(b, a));
  }
  // Orthonormality, straight from the cut enumeration.
  const int ni = 5;
  for (uint32_t v = 0; v < (1u << ni); ++v)
    for (uint32_t w = 0; w < (1u << ni); ++w) {
      Dyadic d = dot_bruteforce(CutFunction::basis(ni, v), CutFunction::basis(ni, w));
      CHECK(d == Dyadic(v == w ? 1 : 0));
    }
}

TEST_CASE("can_transition agrees with the uncrossed-cut definition per label shape") {
  VertexSpace sp = VertexSpace::make(6);
  Rng rng{203};
  const std::vector<Edge> shapes = {{kS, kT}, {kS, 2}, {3, kT}, {2, 4}, {2, kS}, {kT, 3}};
  for (const Edge& label : shapes) {
    for (int it = 0; it < 200; ++it) {
      CutFunction f = random_function(4, rng);
      CutFunction g = random_function(4, rng);
      bool fast = can_transition(f, g, label, sp);
      CHECK(fast == can_transition_bruteforce(f, g, label, sp));
      CHECK(fast == can_transition(g, f, label, sp));
    }
  }
  // Equal functions can sit on any edge; s->t joins anything.
  CutFunction any = random_function(4, rng);
  for (const Edge& label : shapes) CHECK(can_transition(any, any, label, sp));
  CHECK(can_transition(any, random_function(4, rng), {kS, kT}, sp));
  CHECK_THROWS_AS(can_transition(any, any, {2, 2}, sp), std::invalid_argument);
  CHECK_THROWS_AS(can_transition(any, CutFunction(3), {kS, kT}, sp), std::invalid_argument);
}

TEST_CASE("reach finds exactly the label-connected function pairs") {
  VertexSpace sp = VertexSpace::make(5);
  const int ni = 3;
  std::vector<CutFunction> h;
  h.push_back(CutFunction::basis(ni, 0, Dyadic(-1)));  // -e
  h.push_back(CutFunction::basis(ni, 0b001));          // e_{u1}
  h.push_back(CutFunction::basis(ni, 0b010));          // e_{u2}
  h.push_back(CutFunction::basis(ni, 0));              // +e
  h.push_back(CutFunction::basis(ni, 0b001, Dyadic(-1)));
  Rng rng{204};
  h.push_back(random_function(ni, rng));
  h.push_back(random_function(ni, rng));
  std::vector<Edge> labels = standard_labels(sp);

  // Oracle adjacency from the brute-force predicate, then BFS.
  const int m = static_cast<int>(h.size());
  std::vector<std::vector<int>> adj(m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (a == b) continue;
      for (const Edge& e : labels)
        if (can_transition_bruteforce(h[a], h[b], e, sp)) {
          adj[a].push_back(b);
          break;
        }
    }
  for (int from = 0; from < m; ++from) {
    std::vector<char> seen(m, 0);
    seen[from] = 1;
    std::vector<int> stack{from};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    for (int to = 0; to < m; ++to) {
      FnReachResult r = reach(h, labels, from, to, sp);
      CHECK(r.reachable == static_cast<bool>(seen[to]));
      if (r.reachable) {
        int prev = from;
        for (const auto& [idx, lab] : r.steps) {
          CHECK(can_transition(h[prev], h[idx], lab, sp));
          prev = idx;
        }
        CHECK(prev == to);
      }
    }
  }
  // The crafted chain -e -> e_{u1} -> +e must come out reachable.
  CHECK(reach(h, labels, 0, 3, sp).reachable);
  CHECK_THROWS_AS(reach(h, labels, 0, m, sp), std::invalid_argument);
}
