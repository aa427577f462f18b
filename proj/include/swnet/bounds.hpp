#ifndef SWNET_BOUNDS_HPP
#define SWNET_BOUNDS_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "swnet/ck_network.hpp"
#include "swnet/family.hpp"
#include "swnet/knowledge.hpp"

namespace swnet {

struct BoundParams {
  int n = 0;  // ground-set size
  int k = 0;  // interior length of the base path
  int m = 0;  // level parameter
};

// Planting parameters without the materialized input graph. 64-bit side
// masks, so usable well past the cut-enumeration sizes (interior <= 64).
struct MemberShape {
  std::vector<int> v0;  // ordered interior vertex ids
  uint64_t left_mask = 0;
  uint64_t right_mask = 0;
};

MemberShape shape_of(const FamilyMember& member);

// A knowledge set helps accept the planted input when every edge runs from
// {s} ∪ V0 to {t} ∪ V0 or is a feeder edge (s into L, R into t), its endpoints
// cover at least m planted vertices, and it is not already the accepting set.
bool is_useful(const KnowledgeSet& k_set, const VertexSpace& space, const MemberShape& shape,
               int m);

// P[|V0 ∩ V| >= m] for a uniformly planted k-tuple against x marked interior
// vertices: the hypergeometric tail, exact.
mpq_class exact_overlap_tail(int x, int k, int m, int n);

// 2·(2k(k + lg kN)/N)^m with lg rounded up (never understates). n >= 10k².
mpq_class useful_prob_bound(const BoundParams& params);

struct McResult {
  double estimate = 0;
  double stderr_ = 0;
  uint64_t hits = 0;
  uint64_t samples = 0;
};

// Monte Carlo frequency of is_useful over uniform plantings. Chunked with
// per-chunk derived seeds: byte-identical for any worker count.
McResult mc_useful_prob(const KnowledgeSet& k_set, const VertexSpace& space, int k, int m,
                        uint64_t samples, uint64_t seed);

// True iff removing every vertex whose knowledge set is useful for the member
// disconnects s' from t' in the member-consistent subnetwork. Throws
// not_applicable when the network does not accept the member.
bool audit_useful_vertex(const SwitchingNetwork& net, const CkDescription& d,
                         const FamilyMember& member, int m);

enum class BoundKind { kThm1, kThm2, kThm3 };

// Closed forms: thm1 upper 2N·k!·k·lg N, thm2 upper 2^(5m+3)k^(3m+2)N³·lg N,
// thm3 lower ½(N/(2k(k+lg kN)))^m. lg is rounded so the reported value stays
// a true bound (up for the uppers, down overall for the lower).
mpq_class eval_bound(BoundKind which, const BoundParams& params);

struct CrossoverRow {
  int p = 0;  // N = 2^p
  int q = 0;  // k = 2^q with q = ceil(sqrt(p)), so m = 1 + q
  int64_t k = 0;
  int m = 0;
  int64_t upper_log2 = 0;  // simplified upper form 2^8 k^(3 lg k + 10) N³ lg N, rounded up
  int64_t lower_log2 = 0;  // lower bound, rounded down
  bool vacuous = false;    // lower bound <= 1
};

struct CrossoverReport {
  std::vector<CrossoverRow> rows;
  int poly_c = 0;            // least integer c with upper <= N^c on every row
  bool m_growing = false;    // m never decreases, and ends above where it started
  bool slope_growing = false;  // lower_log2 / p strictly increases along the sweep
};

// One row per exponent p (N = 2^p), exact integer log2 arithmetic throughout.
CrossoverReport crossover_report(const std::vector<int>& p_values);

}  // namespace swnet

#endif
