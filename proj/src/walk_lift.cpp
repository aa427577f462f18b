#include "swnet/walk_lift.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "swnet/chains.hpp"

namespace swnet {

namespace {

bool same_fn(const CutFunction& a, const CutFunction& b) { return !(a < b) && !(b < a); }

uint32_t knowledge_mask(const KnowledgeSet& k) {
  uint32_t mask = 0;
  for (Edge e : k.edges) {
    if (e.from != kS || e.to == kT) throw std::invalid_argument("not a reachable-set vertex");
    mask |= uint32_t{1} << VertexSpace::interior_index(e.to);
  }
  return mask;
}

}  // namespace

LiftReport lift_walk(const SwitchingNetwork& net, const PartitionCover& cover,
                     const SwitchingNetwork& small_net,
                     const std::vector<std::pair<int, Label>>& walk, const FamilyMember& member) {
  const VertexSpace& space = net.space;
  LiftReport rep;
  auto fail = [&](std::string why) {
    if (rep.ok) {
      rep.ok = false;
      rep.reason = std::move(why);
    }
    return false;
  };

  std::vector<int> tuple;
  for (int vert : member.v0) tuple.push_back(VertexSpace::interior_index(vert));

  std::map<CutFunction, int> ids;
  for (size_t i = 0; i < net.annotations.size(); ++i) {
    const auto* fn = std::get_if<CutFunction>(&net.annotations[i]);
    if (fn == nullptr) {
      fail("network vertex carries no function");
      return rep;
    }
    ids.emplace(*fn, static_cast<int>(i));
  }

  CutFunction cur = CutFunction::basis(space.interior(), 0, Dyadic(-1));
  const CutFunction accept_fn = CutFunction::basis(space.interior(), 0, Dyadic(1));

  auto edge_exists = [&](int u, int v, Edge e) {
    NetEdge probe{std::min(u, v), std::max(u, v), Label{e, false}};
    return std::binary_search(net.edges.begin(), net.edges.end(), probe);
  };

  // Verify one chain and advance the seam. `reversed` walks it end-first.
  auto splice = [&](const ChainSpec& spec, bool reversed) {
    std::vector<ChainStep> steps;
    try {
      steps = gen_chain(spec);
    } catch (const std::exception& ex) {
      return fail(std::string("chain generation failed: ") + ex.what());
    }
    for (size_t i = 0; i < steps.size(); ++i) {
      auto it = ids.find(steps[i].fn);
      if (it == ids.end()) return fail("chain function is not a network vertex");
      if (i == 0) continue;
      if (steps[i].label) {
        Edge e = *steps[i].label;
        if (!member.graph.has_edge(e)) {
          return fail("chain label " + space.edge_name(e) + " is not a member edge");
        }
        int u = ids.find(steps[i - 1].fn)->second;
        int v = it->second;
        if (u != v && !edge_exists(u, v, e)) {
          return fail("chain step " + space.edge_name(e) + " is not a network edge");
        }
        ++rep.edges_checked;
      } else if (!same_fn(steps[i].fn, steps[i - 1].fn)) {
        return fail("label-free chain step changed the function");
      }
    }
    const CutFunction& head = reversed ? steps.back().fn : steps.front().fn;
    const CutFunction& tail = reversed ? steps.front().fn : steps.back().fn;
    if (!same_fn(head, cur)) return fail("chain does not continue from the current function");
    cur = tail;
    ++rep.chains;
    return true;
  };

  auto first_cover = [&](uint32_t i_mask) {
    for (size_t r = 0; r < cover.partitions.size(); ++r) {
      if (covers(cover.partitions[r], tuple, i_mask)) return static_cast<int>(r);
    }
    fail("no partition in the cover fits the planted tuple and index set");
    return -1;
  };
  auto spec_for = [&](int r, uint32_t i_mask) {
    ChainSpec s;
    s.space = space;
    s.q1 = cover.partitions[r];
    s.i_mask = i_mask;
    s.left_mask = member.left_mask;
    s.right_mask = member.right_mask;
    return s;
  };

  uint32_t cur_mask = 0;
  int cur_r = -1;
  for (const auto& [vertex, label] : walk) {
    if (!rep.ok) break;
    if (label.negated) {
      fail("negated label in a monotone lift");
      break;
    }
    const Edge se = label.edge;  // edge in the small space
    const bool to_accept = vertex == small_net.t_prime;
    uint32_t next_mask = 0;
    if (!to_accept) {
      const auto* k = std::get_if<KnowledgeSet>(&small_net.annotations[vertex]);
      if (k == nullptr) {
        fail("small network vertex carries no knowledge set");
        break;
      }
      next_mask = knowledge_mask(*k);
    }

    if (se.from != kS && se.to == kT) {
      // w_l -> t: retire down to the accepting function, and climb back up
      // when the walk continues at another knowledge set containing l.
      int l = VertexSpace::interior_index(se.from);
      if (!(cur_mask >> l & 1)) {
        fail("exit label leaves a block outside the current index set");
        break;
      }
      ChainSpec down = spec_for(cur_r, cur_mask);
      down.kind = ChainKind::kEnd;
      down.grown_block = l;
      down.vstar_grown = tuple[l];
      if (!splice(down, false)) break;
      if (to_accept) {
        cur_mask = 0;
        continue;
      }
      if (!(next_mask >> l & 1)) {
        fail("re-entry label leaves a block outside the next index set");
        break;
      }
      int r2 = first_cover(next_mask);
      if (r2 < 0) break;
      ChainSpec up = spec_for(r2, next_mask);
      up.kind = ChainKind::kEnd;
      up.grown_block = l;
      up.vstar_grown = tuple[l];
      if (!splice(up, true)) break;
      cur_mask = next_mask;
      cur_r = r2;
      continue;
    }

    if (to_accept) {
      fail("accepting step with an unusable label");
      break;
    }
    const uint32_t added = next_mask & ~cur_mask;
    const uint32_t removed = cur_mask & ~next_mask;
    if (std::popcount(added) + std::popcount(removed) != 1) {
      fail("knowledge step changes more than one index");
      break;
    }

    if (added) {
      int j = std::countr_zero(added);
      int r2 = first_cover(next_mask);
      if (r2 < 0) break;
      if (cur_mask != 0 && r2 != cur_r) {
        ChainSpec sw = spec_for(cur_r, cur_mask);
        sw.kind = ChainKind::kSwitch;
        sw.q2 = cover.partitions[r2];
        if (!splice(sw, false)) break;
      }
      cur_r = r2;
      ChainSpec grow = spec_for(cur_r, next_mask);
      grow.grown_block = j;
      grow.vstar_grown = tuple[j];
      if (se.from == kS) {
        if (VertexSpace::interior_index(se.to) != j) {
          fail("entry label does not match the added index");
          break;
        }
        grow.kind = ChainKind::kStart;
      } else {
        int l = VertexSpace::interior_index(se.from);
        if (VertexSpace::interior_index(se.to) != j || !(cur_mask >> l & 1)) {
          fail("relay label does not match the added index");
          break;
        }
        grow.kind = ChainKind::kProgress;
        grow.helper_block = l;
        grow.vstar_helper = tuple[l];
      }
      if (!splice(grow, false)) break;
      cur_mask = next_mask;
      continue;
    }

    // removal: the same chain runs backwards under the current partition
    int j = std::countr_zero(removed);
    ChainSpec shrink = spec_for(cur_r, cur_mask);
    shrink.grown_block = j;
    shrink.vstar_grown = tuple[j];
    if (se.from == kS) {
      if (VertexSpace::interior_index(se.to) != j) {
        fail("entry label does not match the removed index");
        break;
      }
      shrink.kind = ChainKind::kStart;
    } else {
      int l = VertexSpace::interior_index(se.from);
      if (VertexSpace::interior_index(se.to) != j || !(next_mask >> l & 1)) {
        fail("relay label does not match the removed index");
        break;
      }
      shrink.kind = ChainKind::kProgress;
      shrink.helper_block = l;
      shrink.vstar_helper = tuple[l];
    }
    if (!splice(shrink, true)) break;
    cur_mask = next_mask;
  }

  if (rep.ok && !same_fn(cur, accept_fn)) fail("lifted walk did not end at the accepting function");
  return rep;
}

}  // namespace swnet
