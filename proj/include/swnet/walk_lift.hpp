#ifndef SWNET_WALK_LIFT_HPP
#define SWNET_WALK_LIFT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "swnet/family.hpp"
#include "swnet/network.hpp"
#include "swnet/partition.hpp"

namespace swnet {

struct LiftReport {
  bool ok = true;
  std::string reason;          // first failure, empty when ok
  uint64_t chains = 0;         // chains spliced into the lifted walk
  uint64_t edges_checked = 0;  // labeled steps matched against network edges
};

// Follow an accepting walk of the small knowledge network, step by step,
// inside the function network built for `member`'s space. Each knowledge step
// becomes a chain (growth, relay, retire, or partition switch) whose
// functions must all be network vertices, whose labeled steps must all be
// network edges, and whose labels must all be edges of the member input.
// `walk` is AcceptResult::walk for the base input on `small_net`.
LiftReport lift_walk(const SwitchingNetwork& net, const PartitionCover& cover,
                     const SwitchingNetwork& small_net,
                     const std::vector<std::pair<int, Label>>& walk, const FamilyMember& member);

}  // namespace swnet

#endif
