#include "swnet/chains.hpp"

#include <bit>
#include <stdexcept>

namespace swnet {

int theta(uint32_t v_mask, uint32_t left_mask) {
  return (std::popcount(v_mask & left_mask) & 1) ? -1 : 1;
}

namespace {

// Coefficient -2^{1-size} * (-1)^{parity}, i.e. the generic term weight of the
// subset expansions below. size = 0 only happens for the empty-set expansion
// (weight -2).
Dyadic term_weight(int size, int parity) {
  const int sgn = parity ? 1 : -1;
  return size == 0 ? Dyadic(2 * sgn) : Dyadic::ratio(sgn, size - 1);
}

uint32_t union_of(const Partition& q, uint32_t j_mask) {
  uint32_t w = 0;
  for (uint32_t rest = j_mask; rest; rest &= rest - 1)
    w |= q.blocks[std::countr_zero(rest)];
  return w;
}

bool same_fn(const CutFunction& a, const CutFunction& b) { return !(a < b) && !(b < a); }

}  // namespace

CutFunction embed_knowledge(const VertexSpace& space, uint32_t v_mask) {
  CutFunction f(space.interior());
  if ((v_mask >> space.interior()) != 0)
    throw std::invalid_argument("vertex set outside the interior");
  f.add_term(0, Dyadic(1));
  const int size = std::popcount(v_mask);
  for (uint32_t u = v_mask;; u = (u - 1) & v_mask) {
    f.add_term(u, term_weight(size, std::popcount(u) & 1));
    if (u == 0) break;
  }
  return f;
}

CutFunction base_function(const VertexSpace& space, const Partition& q, uint32_t i_mask,
                          uint32_t minus_mask) {
  if (i_mask >> q.k()) throw std::invalid_argument("block index out of range");
  CutFunction f(space.interior());
  f.add_term(0, Dyadic(1));
  const int size = std::popcount(i_mask);
  minus_mask &= i_mask;
  for (uint32_t j = i_mask;; j = (j - 1) & i_mask) {
    const int parity = (std::popcount(j) + std::popcount(j & minus_mask)) & 1;
    f.add_term(union_of(q, j), term_weight(size, parity));
    if (j == 0) break;
  }
  return f;
}

uint32_t grown_set(uint32_t block_mask, int vstar, int n) {
  const uint32_t low = (n >= 32) ? ~0u : ((1u << n) - 1);
  return (1u << vstar) | (block_mask & low);
}

CutFunction growth_function(const VertexSpace& space, const Partition& q, uint32_t i_mask, int j,
                            int vstar_j, uint32_t minus_mask, int sigma, int n) {
  if (i_mask >> q.k()) throw std::invalid_argument("block index out of range");
  if (!(i_mask >> j & 1)) throw std::invalid_argument("grown block not in the block set");
  CutFunction f(space.interior());
  f.add_term(0, Dyadic(1));
  const int size = std::popcount(i_mask);
  const uint32_t red = i_mask & ~(1u << j);
  const uint32_t grown = grown_set(q.blocks[j], vstar_j, n);
  minus_mask &= red;
  for (uint32_t sub = red;; sub = (sub - 1) & red) {
    const int parity = (std::popcount(sub) + std::popcount(sub & minus_mask)) & 1;
    const Dyadic c = term_weight(size, parity);
    const uint32_t w = union_of(q, sub);
    f.add_term(w, c);
    f.add_term(w | grown, sigma < 0 ? c : -c);
    if (sub == 0) break;
  }
  return f;
}

CutFunction relay_function(const VertexSpace& space, const Partition& q, uint32_t i_mask, int j,
                           int l, int vstar_j, int vstar_l, uint32_t minus_mask, int sigma,
                           int n) {
  if (i_mask >> q.k()) throw std::invalid_argument("block index out of range");
  if (!(i_mask >> j & 1) || !(i_mask >> l & 1) || j == l)
    throw std::invalid_argument("relay needs two distinct blocks in the block set");
  const uint32_t red = i_mask & ~(1u << j);
  CutFunction f = base_function(space, q, red, minus_mask);
  const int size = std::popcount(i_mask);
  const uint32_t core = red & ~(1u << l);
  const uint32_t grown = grown_set(q.blocks[l], vstar_l, n);
  const uint32_t vj = 1u << vstar_j;
  minus_mask &= core;
  for (uint32_t sub = core;; sub = (sub - 1) & core) {
    const int parity = (std::popcount(sub) + std::popcount(sub & minus_mask)) & 1;
    // Same magnitude as term_weight but with the opposite overall sign.
    const Dyadic c = -term_weight(size, parity);
    const uint32_t w = union_of(q, sub);
    f.add_term(w, c);
    f.add_term(w | grown, sigma < 0 ? c : -c);
    f.add_term(w | vj, c);
    f.add_term(w | grown | vj, sigma < 0 ? c : -c);
    if (sub == 0) break;
  }
  return f;
}

CutFunction hybrid_function(const VertexSpace& space, const Partition& q1, const Partition& q2,
                            uint32_t i_mask, uint32_t minus_mask, int n) {
  if (q1.k() != q2.k()) throw std::invalid_argument("partitions have different block counts");
  if (i_mask >> q1.k()) throw std::invalid_argument("block index out of range");
  const uint32_t low = (n >= 32) ? ~0u : ((1u << n) - 1);
  CutFunction f(space.interior());
  f.add_term(0, Dyadic(1));
  const int size = std::popcount(i_mask);
  minus_mask &= i_mask;
  for (uint32_t j = i_mask;; j = (j - 1) & i_mask) {
    const int parity = (std::popcount(j) + std::popcount(j & minus_mask)) & 1;
    uint32_t w = 0;
    for (uint32_t rest = j; rest; rest &= rest - 1) {
      const int i = std::countr_zero(rest);
      w |= (q2.blocks[i] & low) | (q1.blocks[i] & ~low);
    }
    f.add_term(w, term_weight(size, parity));
    if (j == 0) break;
  }
  return f;
}

namespace {

uint32_t semantic_minus(const Partition& q, uint32_t i_mask, uint32_t left) {
  uint32_t m = 0;
  for (uint32_t rest = i_mask; rest; rest &= rest - 1) {
    const int i = std::countr_zero(rest);
    if (theta(q.blocks[i], left) < 0) m |= 1u << i;
  }
  return m;
}

void check_common(const ChainSpec& s) {
  if (s.i_mask == 0) throw std::invalid_argument("chain needs a nonempty block set");
  if (s.i_mask >> s.q1.k()) throw std::invalid_argument("block index out of range");
  if (s.left_mask & s.right_mask)
    throw std::invalid_argument("a vertex cannot be on both sides");
}

// Checks one walked block: its distinguished vertex belongs to it and carries
// no side; every other vertex of the block carries exactly one side.
void check_walked(const ChainSpec& s, int block, int vstar) {
  if (block < 0 || !(s.i_mask >> block & 1))
    throw std::invalid_argument("walked block not in the block set");
  if (vstar < 0 || vstar >= s.space.interior() || !(s.q1.blocks[block] >> vstar & 1))
    throw std::invalid_argument("distinguished vertex not in its block");
  const uint32_t sides = s.left_mask | s.right_mask;
  if (sides >> vstar & 1)
    throw std::invalid_argument("distinguished vertex cannot carry a side");
  const uint32_t rest = s.q1.blocks[block] & ~(1u << vstar);
  if (rest & ~sides) throw std::invalid_argument("walked block vertex has no side");
}

// Label for the step that moves interior vertex vi, when vi lies in the walked
// set; empty otherwise.
std::optional<Edge> side_label(const ChainSpec& s, uint32_t walked, int vi) {
  if (!(walked >> vi & 1)) return std::nullopt;
  const int v = s.space.interior_vertex(vi);
  if (s.left_mask >> vi & 1) return Edge{kS, v};
  return Edge{v, kT};
}

}  // namespace

std::vector<ChainStep> gen_chain(const ChainSpec& spec) {
  check_common(spec);
  const VertexSpace& space = spec.space;
  const int interior = space.interior();
  std::vector<ChainStep> out;

  switch (spec.kind) {
    case ChainKind::kStart: {
      check_walked(spec, spec.grown_block, spec.vstar_grown);
      const int j = spec.grown_block;
      const uint32_t red = spec.i_mask & ~(1u << j);
      const uint32_t minus = semantic_minus(spec.q1, red, spec.left_mask);
      const uint32_t walk = spec.q1.blocks[j] & ~(1u << spec.vstar_grown);
      out.push_back({base_function(space, spec.q1, red, minus), std::nullopt});
      for (int n = 0; n <= interior; ++n) {
        const int sigma =
            theta(grown_set(spec.q1.blocks[j], spec.vstar_grown, n), spec.left_mask);
        CutFunction h =
            growth_function(space, spec.q1, spec.i_mask, j, spec.vstar_grown, minus, sigma, n);
        std::optional<Edge> lab;
        if (n == 0)
          lab = Edge{kS, space.interior_vertex(spec.vstar_grown)};
        else
          lab = side_label(spec, walk, n - 1);
        out.push_back({std::move(h), lab});
      }
      const uint32_t full_minus =
          minus | (theta(spec.q1.blocks[j], spec.left_mask) < 0 ? (1u << j) : 0);
      if (!same_fn(out.back().fn, base_function(space, spec.q1, spec.i_mask, full_minus)))
        throw std::logic_error("growth chain endpoint mismatch");
      break;
    }
    case ChainKind::kEnd: {
      check_walked(spec, spec.grown_block, spec.vstar_grown);
      const int l = spec.grown_block;
      const uint32_t red = spec.i_mask & ~(1u << l);
      const uint32_t minus = semantic_minus(spec.q1, red, spec.left_mask);
      const uint32_t walk = spec.q1.blocks[l] & ~(1u << spec.vstar_grown);
      for (int n = interior; n >= 0; --n) {
        const int sigma =
            theta(grown_set(spec.q1.blocks[l], spec.vstar_grown, n), spec.left_mask);
        CutFunction h =
            growth_function(space, spec.q1, spec.i_mask, l, spec.vstar_grown, minus, sigma, n);
        std::optional<Edge> lab;
        if (n < interior) lab = side_label(spec, walk, n);
        out.push_back({std::move(h), lab});
      }
      CutFunction unit(interior);
      unit.add_term(0, Dyadic(1));
      out.push_back({std::move(unit), Edge{space.interior_vertex(spec.vstar_grown), kT}});
      const uint32_t full_minus =
          minus | (theta(spec.q1.blocks[l], spec.left_mask) < 0 ? (1u << l) : 0);
      if (!same_fn(out.front().fn, base_function(space, spec.q1, spec.i_mask, full_minus)))
        throw std::logic_error("retire chain endpoint mismatch");
      break;
    }
    case ChainKind::kProgress: {
      check_walked(spec, spec.grown_block, spec.vstar_grown);
      check_walked(spec, spec.helper_block, spec.vstar_helper);
      const int j = spec.grown_block, l = spec.helper_block;
      if (j == l) throw std::invalid_argument("relay blocks must differ");
      const uint32_t red = spec.i_mask & ~(1u << j);
      const uint32_t minus = semantic_minus(spec.q1, red, spec.left_mask);
      const uint32_t walk_l = spec.q1.blocks[l] & ~(1u << spec.vstar_helper);
      const uint32_t walk_j = spec.q1.blocks[j] & ~(1u << spec.vstar_grown);
      out.push_back({base_function(space, spec.q1, red, minus), std::nullopt});
      for (int n = 0; n <= interior; ++n) {
        const int sigma =
            theta(grown_set(spec.q1.blocks[l], spec.vstar_helper, n), spec.left_mask);
        CutFunction a = relay_function(space, spec.q1, spec.i_mask, j, l, spec.vstar_grown,
                                       spec.vstar_helper, minus, sigma, n);
        std::optional<Edge> lab;
        if (n == 0)
          lab = Edge{space.interior_vertex(spec.vstar_helper),
                     space.interior_vertex(spec.vstar_grown)};
        else
          lab = side_label(spec, walk_l, n - 1);
        out.push_back({std::move(a), lab});
      }
      CutFunction h0 =
          growth_function(space, spec.q1, spec.i_mask, j, spec.vstar_grown, minus, 1, 0);
      if (!same_fn(out.back().fn, h0)) throw std::logic_error("relay chain splice mismatch");
      for (int n = 1; n <= interior; ++n) {
        const int sigma =
            theta(grown_set(spec.q1.blocks[j], spec.vstar_grown, n), spec.left_mask);
        CutFunction h =
            growth_function(space, spec.q1, spec.i_mask, j, spec.vstar_grown, minus, sigma, n);
        out.push_back({std::move(h), side_label(spec, walk_j, n - 1)});
      }
      const uint32_t full_minus =
          minus | (theta(spec.q1.blocks[j], spec.left_mask) < 0 ? (1u << j) : 0);
      if (!same_fn(out.back().fn, base_function(space, spec.q1, spec.i_mask, full_minus)))
        throw std::logic_error("relay chain endpoint mismatch");
      break;
    }
    case ChainKind::kSwitch: {
      if (spec.q1.k() != spec.q2.k())
        throw std::invalid_argument("partitions have different block counts");
      for (int n = 0; n <= interior; ++n) {
        uint32_t minus = 0;
        const uint32_t low = (n >= 32) ? ~0u : ((1u << n) - 1);
        for (uint32_t rest = spec.i_mask; rest; rest &= rest - 1) {
          const int i = std::countr_zero(rest);
          const uint32_t w = (spec.q2.blocks[i] & low) | (spec.q1.blocks[i] & ~low);
          if (theta(w, spec.left_mask) < 0) minus |= 1u << i;
        }
        CutFunction h = hybrid_function(space, spec.q1, spec.q2, spec.i_mask, minus, n);
        std::optional<Edge> lab;
        if (n > 0 && !same_fn(h, out.back().fn)) {
          const int vi = n - 1;
          if (spec.left_mask >> vi & 1)
            lab = Edge{kS, space.interior_vertex(vi)};
          else if (spec.right_mask >> vi & 1)
            lab = Edge{space.interior_vertex(vi), kT};
          else
            throw std::invalid_argument("moved vertex has no side");
        }
        out.push_back({std::move(h), lab});
      }
      break;
    }
  }
  return out;
}

}  // namespace swnet
