#pragma once

#include <iosfwd>
#include <string>

#include "swnet/network.hpp"

namespace swnet {

// Line-oriented text format, byte-deterministic:
//   SWNET v1
//   N <n>
//   SPRIME <id>
//   TPRIME <id>
//   VERT <id> [KSET <edges|-> | FOUR <terms|->]
//   EDGE <u> <v> <label>
// Vertices ascending by id, edges in the network's sorted order.
std::string serialize(const SwitchingNetwork& net);
SwitchingNetwork deserialize(const std::string& text);

void write_network(const std::string& path, const SwitchingNetwork& net);
SwitchingNetwork read_network(const std::string& path);

}  // namespace swnet
