#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <vector>

#include "swnet/bigmath.hpp"
#include "swnet/cut.hpp"
#include "swnet/digraph.hpp"
#include "swnet/errors.hpp"
#include "swnet/family.hpp"
#include "swnet/rng.hpp"

using namespace swnet;

TEST_CASE("vertex naming and parsing round-trip") {
  VertexSpace sp = VertexSpace::make(5);
  CHECK(sp.interior() == 3);
  CHECK(sp.vertex_name(kS) == "s");
  CHECK(sp.vertex_name(kT) == "t");
  CHECK(sp.vertex_name(2) == "u1");
  CHECK(sp.vertex_name(4) == "u3");
  for (int v = 0; v < sp.n; ++v) CHECK(sp.parse_vertex(sp.vertex_name(v)) == v);
  CHECK_THROWS_AS(sp.parse_vertex("u4"), parse_error);
  CHECK_THROWS_AS(sp.parse_vertex("x"), parse_error);
  CHECK(sp.interior_vertex(0) == 2);
  CHECK(VertexSpace::interior_index(4) == 2);
}

TEST_CASE("edge naming and parsing round-trip") {
  VertexSpace sp = VertexSpace::make(4);
  Edge e{kS, 3};
  CHECK(sp.edge_name(e) == "s->u2");
  CHECK(sp.parse_edge("s->u2") == e);
  CHECK(sp.parse_edge("u1->t") == Edge{2, kT});
  CHECK_THROWS_AS(sp.parse_edge("u1"), parse_error);
  CHECK_THROWS_AS(sp.parse_edge("u1->u9"), parse_error);
}

TEST_CASE("input graphs are canonical edge sets without loops") {
  VertexSpace sp = VertexSpace::make(4);
  InputGraph g = InputGraph::make(sp, {{2, 3}, {kS, 2}, {2, 3}, {3, kT}});
  CHECK(g.edges.size() == 3);  // duplicate dropped
  CHECK(std::is_sorted(g.edges.begin(), g.edges.end()));
  CHECK(g.has_edge({2, 3}));
  CHECK_FALSE(g.has_edge({3, 2}));
  CHECK_THROWS_AS(InputGraph::make(sp, {{2, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(InputGraph::make(sp, {{2, 9}}), std::invalid_argument);
}

TEST_CASE("path graph layout and s-t reachability") {
  InputGraph p2 = make_path_graph(2);
  CHECK(p2.space.n == 4);
  CHECK(p2.edges == std::vector<Edge>{{kS, 2}, {2, 3}, {3, kT}});
  CHECK(has_st_path(p2));

  InputGraph p0 = make_path_graph(0);
  CHECK(p0.edges == std::vector<Edge>{{kS, kT}});
  CHECK(has_st_path(p0));

  VertexSpace sp = VertexSpace::make(4);
  CHECK_FALSE(has_st_path(InputGraph::make(sp, {{kS, 2}, {3, kT}})));
  CHECK_FALSE(has_st_path(InputGraph::make(sp, {{kT, kS}})));
  // Reachability must follow directions through cycles.
  CHECK(has_st_path(InputGraph::make(sp, {{kS, 2}, {2, 3}, {3, 2}, {3, kT}})));
}

TEST_CASE("factorial and binomial against a Pascal-triangle oracle") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == mpz_class("2432902008176640000"));
  std::vector<std::vector<mpz_class>> pascal(41);
  for (unsigned n = 0; n <= 40; ++n) {
    pascal[n].assign(n + 1, 1);
    for (unsigned r = 1; r < n; ++r) pascal[n][r] = pascal[n - 1][r - 1] + pascal[n - 1][r];
    for (unsigned r = 0; r <= n; ++r) CHECK(binomial(n, r) == pascal[n][r]);
  }
  CHECK(binomial(5, 9) == 0);
}

TEST_CASE("integer log2 helpers") {
  CHECK(floor_log2(1) == 0);
  CHECK(floor_log2(2) == 1);
  CHECK(floor_log2(3) == 1);
  CHECK(floor_log2(64) == 6);
  CHECK(ceil_log2(mpz_class(1)) == 0);
  CHECK(ceil_log2(mpz_class(3)) == 2);
  CHECK(ceil_log2(mpz_class(64)) == 6);
  CHECK(ceil_log2(mpz_class(65)) == 7);
  for (int v = 1; v <= 64; ++v) {
    CHECK((1 << floor_log2(v)) <= v);
    CHECK(((mpz_class(1) << ceil_log2(mpz_class(v))) >= v));
    CHECK(is_pow2(v) == ((v & (v - 1)) == 0));
  }
}

TEST_CASE("fractional log2 brackets the true value exactly") {
  // log2_bracket returns a/2^b; cross-check 2^a vs value^(2^b) in integers.
  for (int value : {3, 11, 40, 1000}) {
    for (int bits : {4, 8, 16}) {
      mpq_class up = log2_bracket(mpq_class(value), bits, true);
      mpq_class dn = log2_bracket(mpq_class(value), bits, false);
      CHECK(up >= dn);
      CHECK(up - dn <= mpq_class(1, 1) / (mpz_class(1) << bits));
      mpz_class scale = mpz_class(1) << bits;
      mpz_class a_up(up * scale), a_dn(dn * scale);
      CHECK(mpq_class(up * scale).get_den() == 1);
      uint64_t e = scale.get_ui();
      CHECK(pow_z(2, a_up.get_ui()) >= pow_z(value, e));
      CHECK(pow_z(2, a_dn.get_ui()) <= pow_z(value, e));
    }
  }
  // Exact on powers of two: both roundings agree.
  CHECK(log2_bracket(mpq_class(64), 16, true) == 6);
  CHECK(log2_bracket(mpq_class(64), 16, false) == 6);
}

TEST_CASE("rational powers") {
  CHECK(pow_q(mpq_class(2, 3), 3) == mpq_class(8, 27));
  CHECK(pow_q(mpq_class(5), 0) == 1);
  CHECK(pow_z(7, 3) == 343);
  CHECK(pow_z(2, 70) == mpz_class(1) << 70);
}

TEST_CASE("seeded rng is reproducible with distinct substreams") {
  Rng a(99), b(99);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  for (int i = 0; i < 1000; ++i) {
    uint64_t v = a.below(17);
    CHECK(v < 17);
  }
  std::vector<int> perm(10);
  for (int i = 0; i < 10; ++i) perm[i] = i;
  Rng c(7);
  c.shuffle(perm);
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 10; ++i) CHECK(sorted[i] == i);
  std::set<uint64_t> streams;
  for (uint64_t s = 0; s < 100; ++s) streams.insert(Rng::substream(12345, s));
  CHECK(streams.size() == 100);
}

TEST_CASE("cut index round-trip and membership") {
  VertexSpace sp = VertexSpace::make(8);
  for (uint64_t i = 0; i < cut_count(sp); ++i) {
    Cut c = cut_from_index(sp, i);
    CHECK(c.index() == i);
    CHECK(c.left_contains(kS));
    CHECK_FALSE(c.left_contains(kT));
  }
  Cut c = cut_from_index(sp, 0b101);
  CHECK(c.left_contains(sp.interior_vertex(0)));
  CHECK_FALSE(c.left_contains(sp.interior_vertex(1)));
  CHECK(c.left_contains(sp.interior_vertex(2)));
}

TEST_CASE("edge crossing truth table") {
  VertexSpace sp = VertexSpace::make(5);
  Cut c = cut_from_index(sp, 0b001);  // left = {s, u1}
  CHECK(crosses({kS, 3}, c));         // s -> u2 leaves the left side
  CHECK_FALSE(crosses({kS, 2}, c));
  CHECK(crosses({2, kT}, c));
  CHECK_FALSE(crosses({3, kT}, c));
  CHECK_FALSE(crosses({3, 2}, c));  // right to left never crosses
}

TEST_CASE("s->t crosses every cut; same-vertex feeders are complementary, "
          "cross-vertex feeders are not") {
  for (int n = 3; n <= 10; ++n) {
    VertexSpace sp = VertexSpace::make(n);
    for (const Cut& c : enumerate_cuts(sp)) {
      CHECK(crosses({kS, kT}, c));
      // v sits on exactly one side, so s->v and v->t cross complementarily.
      for (int i = 0; i < sp.interior(); ++i) {
        int v = sp.interior_vertex(i);
        CHECK(crosses({kS, v}, c) == !crosses({v, kT}, c));
      }
    }
  }
  // The pairing breaks across distinct vertices: s->u1 and u2->t can both
  // cross (or both not) depending on where u1 and u2 fall.
  VertexSpace sp = VertexSpace::make(5);
  bool same = false, differ = false;
  for (const Cut& c : enumerate_cuts(sp)) {
    if (crosses({kS, 2}, c) == crosses({3, kT}, c)) same = true;
    if (crosses({kS, 2}, c) != crosses({3, kT}, c)) differ = true;
  }
  CHECK(same);
  CHECK(differ);
}

TEST_CASE("cut enumeration is ordered and capped") {
  VertexSpace sp = VertexSpace::make(6);
  std::vector<Cut> cuts = enumerate_cuts(sp);
  CHECK(cuts.size() == 16);
  for (size_t i = 0; i < cuts.size(); ++i) CHECK(cuts[i].index() == i);
  CHECK_THROWS_AS(enumerate_cuts(sp, 8), limit_error);
}

TEST_CASE("family counts match the closed form") {
  auto perms = [](int n, int k) {
    uint64_t r = 1;
    for (int i = 0; i < k; ++i) r *= static_cast<uint64_t>(n - i);
    return r;
  };
  struct Case {
    int k, n;
    bool left, right;
  };
  for (Case c : std::vector<Case>{{1, 8, true, false},
                                  {2, 8, true, false},
                                  {2, 12, true, false},
                                  {3, 10, true, false},
                                  {2, 8, true, true},
                                  {1, 5, true, true},
                                  {2, 6, false, true}}) {
    VertexSpace sp = VertexSpace::make(c.n);
    InputFamily fam = enumerate_family(make_path_graph(c.k), sp, c.left, c.right);
    uint64_t want = perms(c.n - 2, c.k);
    if (c.left && c.right) want <<= (c.n - 2 - c.k);
    CHECK(fam.members.size() == want);
  }
  // Frozen desk-scale counts.
  VertexSpace sp8 = VertexSpace::make(8);
  CHECK(enumerate_family(make_path_graph(1), sp8, true, false).members.size() == 6);
  CHECK(enumerate_family(make_path_graph(2), sp8, true, false).members.size() == 30);
  CHECK(enumerate_family(make_path_graph(2), sp8, true, true).members.size() == 480);
  CHECK(enumerate_family(make_path_graph(3), VertexSpace::make(10), true, false).members.size() ==
        336);
  CHECK(enumerate_family(make_path_graph(2), VertexSpace::make(12), true, false).members.size() ==
        90);
  CHECK(enumerate_family(make_path_graph(1), VertexSpace::make(5), true, true).members.size() ==
        12);
}

TEST_CASE("every planted member keeps an s-t path") {
  for (int k : {1, 2}) {
    InputFamily fam = enumerate_family(make_path_graph(k), VertexSpace::make(6), true, true);
    for (const FamilyMember& m : fam.members) {
      CHECK(has_st_path(m.graph));
      CHECK(m.v0.size() == static_cast<size_t>(k));
    }
  }
}

TEST_CASE("planted member edges are the translated base plus feeders") {
  VertexSpace sp = VertexSpace::make(5);
  // k=1, v0 = (u2), leftovers u1 left and u3 right.
  InputGraph g = build_augmented_input(make_path_graph(1), sp, {3}, 0b001, 0b100);
  CHECK(g.edges == std::vector<Edge>{{kS, 2}, {kS, 3}, {3, kT}, {4, kT}});
  // Forcing every leftover left gives feeders from s only.
  InputFamily fam = enumerate_family(make_path_graph(1), sp, true, false);
  for (const FamilyMember& m : fam.members) {
    CHECK(m.right_mask == 0);
    for (Edge e : m.graph.edges) CHECK((e.from == kS || e.to == kT));
  }
}

TEST_CASE("family enumeration order is lexicographic in the planted tuple") {
  InputFamily fam = enumerate_family(make_path_graph(2), VertexSpace::make(5), true, false);
  REQUIRE(fam.members.size() == 6);
  CHECK(fam.members[0].v0 == std::vector<int>{2, 3});
  CHECK(fam.members[1].v0 == std::vector<int>{2, 4});
  CHECK(fam.members[2].v0 == std::vector<int>{3, 2});
  CHECK(fam.members.back().v0 == std::vector<int>{4, 3});
}

TEST_CASE("family files round-trip the member edge sets") {
  InputFamily fam = enumerate_family(make_path_graph(2), VertexSpace::make(6), true, true);
  std::ostringstream out;
  write_family(out, fam);
  std::istringstream in(out.str());
  LoadedFamily loaded = read_family(in);
  CHECK(loaded.name == fam.name);
  CHECK(loaded.space.n == 6);
  CHECK(loaded.k == 2);
  REQUIRE(loaded.graphs.size() == fam.members.size());
  for (size_t i = 0; i < loaded.graphs.size(); ++i)
    CHECK(loaded.graphs[i].edges == fam.members[i].graph.edges);
}

TEST_CASE("family limits and flag validation") {
  VertexSpace sp = VertexSpace::make(12);
  CHECK_THROWS_AS(enumerate_family(make_path_graph(2), sp, true, true, 100), limit_error);
  // Both sides disallowed only works when nothing is left over.
  CHECK_THROWS_AS(enumerate_family(make_path_graph(1), VertexSpace::make(5), false, false),
                  std::invalid_argument);
  InputFamily tight = enumerate_family(make_path_graph(3), VertexSpace::make(5), false, false);
  CHECK(tight.members.size() == 6);
}
