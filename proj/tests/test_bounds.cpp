#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "swnet/bigmath.hpp"
#include "swnet/bounds.hpp"
#include "swnet/ck_network.hpp"
#include "swnet/digraph.hpp"
#include "swnet/errors.hpp"
#include "swnet/family.hpp"
#include "swnet/parallel.hpp"
#include "swnet/vertex_space.hpp"

using namespace swnet;

namespace {

// Straight enumeration of k-subsets of the interior against the first x
// marked vertices.
mpq_class tail_by_enumeration(int x, int k, int m, int n) {
  const int interior = n - 2;
  mpz_class hit = 0, total = 0;
  std::vector<int> pick(k);
  auto rec = [&](auto&& self, int depth, int from) -> void {
    if (depth == k) {
      int overlap = 0;
      for (int v : pick)
        if (v < x) ++overlap;
      if (overlap >= m) ++hit;
      ++total;
      return;
    }
    for (int v = from; v < interior; ++v) {
      pick[depth] = v;
      self(self, depth + 1, v + 1);
    }
  };
  rec(rec, 0, 0);
  mpq_class ratio(hit, total);
  ratio.canonicalize();
  return ratio;
}

}  // namespace

TEST_CASE("hypergeometric tail matches subset enumeration") {
  for (int n = 6; n <= 12; n += 2)
    for (int k = 1; k <= 3; ++k)
      for (int x = 0; x <= n - 2; ++x)
        for (int m = 0; m <= k; ++m) {
          mpq_class got = exact_overlap_tail(x, k, m, n);
          CHECK(got == tail_by_enumeration(x, k, m, n));
          if (m == 0) CHECK(got == 1);
          if (m > 0) CHECK(got <= exact_overlap_tail(x, k, m - 1, n));
        }
  CHECK(exact_overlap_tail(4, 2, 2, 40) == mpq_class(6, 703));
  CHECK(exact_overlap_tail(2, 2, 2, 40) == mpq_class(1, 703));
}

TEST_CASE("closed-form usefulness bound is frozen and shrinks with n") {
  mpq_class b40 = useful_prob_bound({40, 2, 2});
  CHECK(b40 == mpq_class(mpz_class("74361472249"), mpz_class("53687091200")));
  CHECK(std::abs(b40.get_d() - 1.385090) < 1e-5);
  mpq_class b64 = useful_prob_bound({64, 2, 2});
  mpq_class b128 = useful_prob_bound({128, 2, 2});
  CHECK(b64 < b40);
  CHECK(b128 < b64);
  CHECK(useful_prob_bound({1024, 2, 2}) < mpq_class(1, 50));
  CHECK_THROWS_AS(useful_prob_bound({39, 2, 2}), std::invalid_argument);
}

TEST_CASE("usefulness requires shape, coverage, and non-acceptance") {
  VertexSpace sp = VertexSpace::make(8);
  MemberShape shape;
  shape.v0 = {2, 3};             // u1, u2 play the path
  shape.left_mask = 0b001100;    // u3, u4 fed from s
  shape.right_mask = 0b110000;   // u5, u6 feed t
  const int m = 2;

  auto useful = [&](std::vector<Edge> edges) {
    return is_useful(KnowledgeSet::make(sp, std::move(edges)), sp, shape, m);
  };

  CHECK(useful({{kS, 2}, {2, 3}}));
  CHECK(useful({{kS, 2}, {2, 3}, {kS, 4}}));   // plus a left feeder
  CHECK(useful({{kS, 2}, {2, 3}, {6, kT}}));   // plus a right feeder
  CHECK(!useful({{kS, 2}}));                   // covers one planted vertex only
  CHECK(!useful({}));
  CHECK(!useful({{kS, 2}, {2, 3}, {3, kT}}));  // accepts already: s->u1->u2->t
  CHECK(!useful({{kS, 2}, {2, 4}}));           // planted-to-left edge, wrong shape
  CHECK(!useful({{kS, 6}, {kS, 2}, {2, 3}}));  // s into a right vertex, wrong shape
  CHECK(!useful({{4, kT}, {kS, 2}, {2, 3}}));  // left vertex into t, wrong shape
  // An edge between the two planted vertices in either direction is fine.
  CHECK(useful({{3, 2}, {kS, 3}}));
}

TEST_CASE("member shapes carry the planting parameters unchanged") {
  VertexSpace sp = VertexSpace::make(8);
  InputFamily fam = enumerate_family(make_path_graph(2), sp, true, true);
  REQUIRE(!fam.members.empty());
  for (size_t i = 0; i < fam.members.size(); i += 37) {
    const FamilyMember& mem = fam.members[i];
    MemberShape s = shape_of(mem);
    CHECK(s.v0 == mem.v0);
    CHECK(s.left_mask == mem.left_mask);
    CHECK(s.right_mask == mem.right_mask);
  }
}

TEST_CASE("monte carlo usefulness is deterministic and near the exact rate") {
  VertexSpace sp = VertexSpace::make(40);
  KnowledgeSet ks = KnowledgeSet::make(
      sp, {{kS, sp.interior_vertex(0)}, {sp.interior_vertex(0), sp.interior_vertex(1)}});
  McResult r = mc_useful_prob(ks, sp, 2, 2, 100000, 777);
  CHECK(r.samples == 100000);
  CHECK(r.hits == 129);
  CHECK(r.estimate == doctest::Approx(0.00129).epsilon(1e-12));

  // This knowledge set is useful exactly when both endpoints are planted.
  double exact = mpq_class(1, 703).get_d();
  CHECK(std::abs(r.estimate - exact) <= 3 * r.stderr_ + 1e-12);

  McResult again = mc_useful_prob(ks, sp, 2, 2, 100000, 777);
  CHECK(again.hits == r.hits);
  set_workers(2);
  McResult two = mc_useful_prob(ks, sp, 2, 2, 100000, 777);
  set_workers(1);
  CHECK(two.hits == r.hits);
  McResult other = mc_useful_prob(ks, sp, 2, 2, 100000, 778);
  CHECK(other.hits != r.hits);  // seed actually feeds the stream

  VertexSpace wide = VertexSpace::make(67);
  CHECK_THROWS_AS(mc_useful_prob(KnowledgeSet::make(67, {}), wide, 2, 2, 10, 1), limit_error);
}

TEST_CASE("audit finds the useful vertices carrying the acceptance") {
  VertexSpace sp = VertexSpace::make(5);
  CkNetwork ck = build_basic_ck(sp, 1);
  InputFamily fam = enumerate_family(make_path_graph(1), sp, true, true);
  REQUIRE(fam.members.size() == 12);
  for (const FamilyMember& mem : fam.members)
    CHECK(audit_useful_vertex(ck.net, ck.description, mem, 1));

  // Demanding two covered vertices leaves nothing to remove: the walk stays.
  CHECK(!audit_useful_vertex(ck.net, ck.description, fam.members[0], 2));

  // A network that rejects the member cannot be audited.
  CkNetwork trivial = build_basic_ck(sp, 0);
  CHECK_THROWS_AS(audit_useful_vertex(trivial.net, trivial.description, fam.members[0], 1),
                  not_applicable);
}

TEST_CASE("closed-form size bounds are frozen") {
  CHECK(eval_bound(BoundKind::kThm1, {16, 1, 0}) == 128);
  CHECK(eval_bound(BoundKind::kThm1, {8, 2, 0}) == 192);
  CHECK(eval_bound(BoundKind::kThm2, {8, 2, 2}) == mpz_class("3221225472"));
  CHECK(eval_bound(BoundKind::kThm2, {40, 2, 2}) == mpz_class("714297344000"));
  CHECK(eval_bound(BoundKind::kThm3, {4096, 2, 2}) == mpq_class(524288, 225));
  mpq_class weak = eval_bound(BoundKind::kThm3, {40, 2, 2});
  CHECK(weak < 1);  // vacuous at this size: no useful statement
  CHECK(weak > 0);
  CHECK_THROWS_AS(eval_bound(BoundKind::kThm3, {39, 2, 2}), std::invalid_argument);
}

TEST_CASE("crossover table rows are frozen and the trend flags hold") {
  CrossoverReport sparse = crossover_report({16, 25, 36, 49, 64});
  REQUIRE(sparse.rows.size() == 5);
  const int expect[5][6] = {
      {16, 4, 16, 5, 148, 24},
      {25, 5, 32, 6, 213, 77},
      {36, 6, 64, 7, 290, 153},
      {49, 7, 128, 8, 378, 263},
      {64, 8, 256, 9, 478, 413},
  };
  for (int i = 0; i < 5; ++i) {
    const CrossoverRow& r = sparse.rows[i];
    CHECK(r.p == expect[i][0]);
    CHECK(r.q == expect[i][1]);
    CHECK(r.k == expect[i][2]);
    CHECK(r.m == expect[i][3]);
    CHECK(r.upper_log2 == expect[i][4]);
    CHECK(r.lower_log2 == expect[i][5]);
    CHECK(!r.vacuous);
  }
  CHECK(sparse.poly_c == 10);
  CHECK(sparse.m_growing);
  CHECK(sparse.slope_growing);

  // Dense sweep: m plateaus between squares but never drops, slopes rise.
  std::vector<int> dense;
  for (int p = 16; p <= 64; ++p) dense.push_back(p);
  CrossoverReport rep = crossover_report(dense);
  CHECK(rep.rows.size() == dense.size());
  CHECK(rep.poly_c == 12);
  CHECK(rep.m_growing);
  CHECK(rep.slope_growing);
  for (size_t i = 1; i < rep.rows.size(); ++i)
    CHECK(rep.rows[i].m >= rep.rows[i - 1].m);

  CrossoverReport tiny = crossover_report({2});
  REQUIRE(tiny.rows.size() == 1);
  CHECK(tiny.rows[0].vacuous);
}
