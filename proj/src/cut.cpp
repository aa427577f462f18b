#include "swnet/cut.hpp"

#include <stdexcept>

#include "swnet/errors.hpp"

namespace swnet {

Cut cut_from_index(const VertexSpace& space, uint64_t index) {
  if (space.interior() > 31)
    throw std::invalid_argument("cut indexing needs interior <= 31");
  if (index >= cut_count(space))
    throw std::invalid_argument("cut index out of range");
  return Cut{static_cast<uint32_t>(index), space.interior()};
}

bool crosses(Edge e, const Cut& c) {
  return c.left_contains(e.from) && !c.left_contains(e.to);
}

uint64_t cut_count(const VertexSpace& space) {
  if (space.interior() > 62) throw std::invalid_argument("too many cuts to count");
  return uint64_t{1} << space.interior();
}

std::vector<Cut> enumerate_cuts(const VertexSpace& space, uint64_t limit) {
  if (space.interior() > 31)
    throw std::invalid_argument("cut enumeration needs interior <= 31");
  uint64_t count = cut_count(space);
  if (count > limit)
    throw limit_error("cut enumeration would produce " + std::to_string(count) +
                      " cuts, over the limit of " + std::to_string(limit));
  std::vector<Cut> cuts;
  cuts.reserve(count);
  for (uint64_t i = 0; i < count; ++i)
    cuts.push_back(Cut{static_cast<uint32_t>(i), space.interior()});
  return cuts;
}

}  // namespace swnet
