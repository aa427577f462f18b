#ifndef SWNET_KERNELS_HPP
#define SWNET_KERNELS_HPP

#include <cstdint>
#include <vector>

#include "swnet/knowledge.hpp"
#include "swnet/network.hpp"

namespace swnet {

// Data-parallel inner loops (OpenMP, worker count via swnet::set_workers).
// Each writes preallocated slots indexed by the loop variable, so results are
// byte-identical for any worker count. swnet::serial holds independent
// single-threaded reference implementations used by tests and the benchmark.

// Flag per cut index: 1 iff s' and t' are disconnected in the subnetwork of
// edges whose labels do not cross that cut.
std::vector<uint8_t> cut_disconnect_flags(const SwitchingNetwork& net, uint64_t cut_limit);

// All edges (u, v, label) with u < v and step_valid(K_u, K_v, label).
std::vector<NetEdge> condition_edges(const std::vector<KnowledgeSet>& knowledge,
                                     const std::vector<Edge>& labels, const VertexSpace& space);

// Flag per network edge: can_transition holds between its endpoint functions.
// Requires every vertex to carry a CutFunction annotation.
std::vector<uint8_t> transition_flags(const SwitchingNetwork& net);

namespace serial {
std::vector<uint8_t> cut_disconnect_flags(const SwitchingNetwork& net, uint64_t cut_limit);
std::vector<NetEdge> condition_edges(const std::vector<KnowledgeSet>& knowledge,
                                     const std::vector<Edge>& labels, const VertexSpace& space);
std::vector<uint8_t> transition_flags(const SwitchingNetwork& net);
}  // namespace serial

}  // namespace swnet

#endif
