#ifndef SWNET_FOURIER_BUILDER_HPP
#define SWNET_FOURIER_BUILDER_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "swnet/digraph.hpp"
#include "swnet/network.hpp"
#include "swnet/partition.hpp"

namespace swnet {

struct Thm2Options {
  GhMode mode = GhMode::kConstructive;
  uint64_t function_limit = uint64_t{1} << 22;
  uint64_t cover_round_cap = 0; // 0 = partition-cover default
};

struct Thm2Build {
  SwitchingNetwork net;
  PartitionCover cover;
  int k = 0;
  int m = 0; // computed level: least basic-CK level accepting every base member
  uint64_t seed = 0;
  uint64_t functions_raw = 0; // function requests before dedup
  uint64_t edges_raw = 0;     // chain-step edges before canonicalization
  mpz_class size_bound;       // 2^(5m+3) k^(3m+2) N^3 ⌊lg N⌋
};

// Monotone network for every planting of the base members into `space`,
// assembled from cut-function chains instead of knowledge sets: base
// functions for every (partition, index set, sign pattern), growth chains
// that build one block up from its anchor vertex, relay chains that enter a
// fresh block through an edge between two anchors, and hybrid chains that
// interpolate between two partitions. Sign patterns are enumerated blindly;
// inputs later select the variant they can follow.
Thm2Build build_thm2_network(const VertexSpace& base_space, const std::vector<InputGraph>& i0,
                             const VertexSpace& space, uint64_t seed,
                             const Thm2Options& options = {});

}  // namespace swnet

#endif
