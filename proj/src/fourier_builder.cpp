#include "swnet/fourier_builder.hpp"

#include <bit>
#include <map>
#include <stdexcept>

#include "swnet/bigmath.hpp"
#include "swnet/chains.hpp"
#include "swnet/ck_network.hpp"
#include "swnet/errors.hpp"

namespace swnet {

namespace {

// Descending submask walk, including `mask` itself and 0.
template <typename F>
void each_submask(uint32_t mask, F&& f) {
  uint32_t sub = mask;
  while (true) {
    f(sub);
    if (sub == 0) break;
    sub = (sub - 1) & mask;
  }
}

template <typename F>
void each_bit(uint32_t mask, F&& f) {
  while (mask) {
    f(std::countr_zero(mask));
    mask &= mask - 1;
  }
}

}  // namespace

Thm2Build build_thm2_network(const VertexSpace& base_space, const std::vector<InputGraph>& i0,
                             const VertexSpace& space, uint64_t seed,
                             const Thm2Options& options) {
  if (i0.empty()) throw std::invalid_argument("need at least one base member");

  Thm2Build out;
  out.seed = seed;
  out.k = base_space.interior();
  out.m = compute_sc(base_space, i0);
  out.cover = build_partition_cover(space, out.k, out.m, seed, options.cover_round_cap);

  const int k = out.k;
  const int m = out.m;
  const int ni = space.interior();
  const auto& qs = out.cover.partitions;

  std::map<CutFunction, int> ids;
  std::vector<CutFunction> fns;
  auto get_id = [&](const CutFunction& f) {
    ++out.functions_raw;
    auto [it, fresh] = ids.emplace(f, static_cast<int>(fns.size()));
    if (fresh) {
      fns.push_back(f);
      if (fns.size() > options.function_limit) {
        throw limit_error("function set exceeded the configured limit");
      }
    }
    return it->second;
  };
  std::vector<GhEdge> edges;
  auto add_edge = [&](int u, int v, Edge label) {
    if (u != v) {
      edges.push_back(GhEdge{u, v, label});
      ++out.edges_raw;
    }
  };

  const int minus_one = get_id(CutFunction::basis(ni, 0, Dyadic(-1)));
  const int plus_one = get_id(CutFunction::basis(ni, 0, Dyadic(1)));
  (void)minus_one;

  auto admissible = [&](uint32_t i_mask) {
    return i_mask != 0 && std::popcount(i_mask) <= m;
  };

  for (const Partition& q : qs) {
    for (uint32_t i_mask = 1; i_mask < (uint32_t{1} << k); ++i_mask) {
      if (!admissible(i_mask)) continue;

      each_submask(i_mask, [&](uint32_t minus) { get_id(base_function(space, q, i_mask, minus)); });

      each_bit(i_mask, [&](int j) {
        const uint32_t red = i_mask & ~(uint32_t{1} << j);
        each_bit(q.blocks[j], [&](int vstar) {
          each_submask(red, [&](uint32_t minus) {
            // enter by s -> v*_j from the reduced base, leave to e_{} by v*_j -> t
            int h0 = get_id(growth_function(space, q, i_mask, j, vstar, minus, +1, 0));
            int from = get_id(base_function(space, q, red, minus));
            add_edge(from, h0, Edge{kS, space.interior_vertex(vstar)});
            add_edge(h0, plus_one, Edge{space.interior_vertex(vstar), kT});
            // grow block j one interior vertex at a time, either side
            for (int n = 0; n < ni; ++n) {
              if (!(q.blocks[j] >> n & 1) || n == vstar) continue;
              int v = space.interior_vertex(n);
              for (int sig : {+1, -1}) {
                int u = get_id(growth_function(space, q, i_mask, j, vstar, minus, sig, n));
                add_edge(u, get_id(growth_function(space, q, i_mask, j, vstar, minus, -sig, n + 1)),
                         Edge{kS, v});
                add_edge(u, get_id(growth_function(space, q, i_mask, j, vstar, minus, sig, n + 1)),
                         Edge{v, kT});
              }
            }
            // relay entry through an anchor-to-anchor edge, then walk block l;
            // the fully grown relay merges with the growth chain's h_0 by dedup
            each_bit(red, [&](int l) {
              each_bit(q.blocks[l], [&](int vstar_l) {
                int a0 =
                    get_id(relay_function(space, q, i_mask, j, l, vstar, vstar_l, minus, +1, 0));
                add_edge(from, a0,
                         Edge{space.interior_vertex(vstar_l), space.interior_vertex(vstar)});
                for (int n = 0; n < ni; ++n) {
                  if (!(q.blocks[l] >> n & 1) || n == vstar_l) continue;
                  int v = space.interior_vertex(n);
                  for (int sig : {+1, -1}) {
                    int u = get_id(
                        relay_function(space, q, i_mask, j, l, vstar, vstar_l, minus, sig, n));
                    add_edge(u,
                             get_id(relay_function(space, q, i_mask, j, l, vstar, vstar_l, minus,
                                                   -sig, n + 1)),
                             Edge{kS, v});
                    add_edge(u,
                             get_id(relay_function(space, q, i_mask, j, l, vstar, vstar_l, minus,
                                                   sig, n + 1)),
                             Edge{v, kT});
                  }
                }
              });
            });
          });
        });
      });
    }
  }

  // hybrid chains between every ordered pair of partitions; endpoints merge
  // with the two base functions by dedup
  for (size_t r1 = 0; r1 < qs.size(); ++r1) {
    for (size_t r2 = 0; r2 < qs.size(); ++r2) {
      if (r1 == r2) continue;
      const Partition& q1 = qs[r1];
      const Partition& q2 = qs[r2];
      for (uint32_t i_mask = 1; i_mask < (uint32_t{1} << k); ++i_mask) {
        if (!admissible(i_mask)) continue;
        each_submask(i_mask, [&](uint32_t minus) {
          for (int n = 0; n < ni; ++n) {
            int b1 = q1.block_of(n);
            int b2 = q2.block_of(n);
            if (b1 == b2) continue;
            uint32_t flip = ((uint32_t{1} << b1) | (uint32_t{1} << b2)) & i_mask;
            if (flip == 0) continue;
            int v = space.interior_vertex(n);
            int u = get_id(hybrid_function(space, q1, q2, i_mask, minus, n));
            add_edge(u, get_id(hybrid_function(space, q1, q2, i_mask, minus ^ flip, n + 1)),
                     Edge{kS, v});
            add_edge(u, get_id(hybrid_function(space, q1, q2, i_mask, minus, n + 1)),
                     Edge{v, kT});
          }
        });
      }
    }
  }

  out.size_bound = pow_z(2, 5 * m + 3) * pow_z(k, 3 * m + 2) * pow_z(space.n, 3) *
                   floor_log2(mpz_class(space.n));
  if (mpz_class(fns.size()) > out.size_bound) {
    throw build_error("function network exceeded its size bound");
  }

  out.net = build_gh(space, fns, standard_labels(space), options.mode, edges);
  return out;
}

}  // namespace swnet
