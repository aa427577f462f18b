#ifndef SWNET_ORDERING_BUILDER_HPP
#define SWNET_ORDERING_BUILDER_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "swnet/ck_network.hpp"
#include "swnet/family.hpp"

namespace swnet {

// Sufficient acceptance test for one chain ordering: the planted path
// vertices must appear in path order. (The built network can accept more
// members than this test reports; the cover loop only relies on "true".)
bool ordering_accepts(const std::vector<int>& ordering, const FamilyMember& member);

struct OrderingOptions {
  uint64_t family_limit = kDefaultFamilyLimit;
  int batch = 32;          // candidates drawn before settling for best-of-batch
  uint64_t sample_cap = 0; // 0 = derived from k and N
};

struct OrderingBuild {
  CkNetwork ck;
  uint64_t seed = 0;
  int orderings_kept = 0;
  uint64_t samples_drawn = 0;
  mpz_class size_bound; // 2·N·k!·k·⌊lg N⌋
};

// Certain-knowledge network covering every planting of the length-(k+1) path
// with the complement fed from s. Greedy seeded cover: keep an ordering when
// it newly accepts at least a 1/k! share of the uncovered members, otherwise
// fall back to the best candidate of the batch. Chain vertices K_{V_1}..K_{V_{N-2}}
// of kept orderings are pooled, then every knowledge-consistent edge is added.
OrderingBuild build_thm1_network(const VertexSpace& space, int k, uint64_t seed,
                                 const OrderingOptions& options = {});

}  // namespace swnet

#endif
