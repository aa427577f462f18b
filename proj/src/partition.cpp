#include "swnet/partition.hpp"

#include <gmpxx.h>

#include <bit>
#include <functional>
#include <stdexcept>

#include "swnet/bigmath.hpp"
#include "swnet/errors.hpp"
#include "swnet/rng.hpp"

namespace swnet {

Partition Partition::make(const VertexSpace& space, std::vector<uint32_t> blocks) {
  if (space.interior() > 31) throw limit_error("interior too large for partition masks");
  const uint32_t full = (space.interior() == 31) ? 0x7fffffffu : ((1u << space.interior()) - 1);
  uint32_t seen = 0;
  for (uint32_t b : blocks) {
    if ((b & ~full) != 0) throw std::invalid_argument("block mask outside the interior");
    if ((b & seen) != 0) throw std::invalid_argument("partition blocks overlap");
    seen |= b;
  }
  if (seen != full) throw std::invalid_argument("partition blocks do not cover the interior");
  if (blocks.empty()) throw std::invalid_argument("partition needs at least one block");
  Partition q;
  q.blocks = std::move(blocks);
  return q;
}

int Partition::block_of(int interior_index) const {
  const uint32_t bit = 1u << interior_index;
  for (size_t i = 0; i < blocks.size(); ++i)
    if (blocks[i] & bit) return static_cast<int>(i);
  throw std::invalid_argument("vertex not in any block");
}

bool covers(const Partition& q, const std::vector<int>& tuple, uint32_t i_mask) {
  uint32_t tuple_mask = 0;
  for (int v : tuple) tuple_mask |= 1u << v;
  for (int i = 0; i < q.k(); ++i) {
    if (!(i_mask & (1u << i))) continue;
    if (i >= static_cast<int>(tuple.size())) return false;
    if ((q.blocks[i] & tuple_mask) != (1u << tuple[i])) return false;
  }
  return true;
}

namespace {

// All ordered k-tuples of distinct interior vertices.
void each_tuple(int interior, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> tuple;
  std::vector<bool> used(interior, false);
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == k) {
      fn(tuple);
      return;
    }
    for (int v = 0; v < interior; ++v) {
      if (used[v]) continue;
      used[v] = true;
      tuple.push_back(v);
      self(self, depth + 1);
      tuple.pop_back();
      used[v] = false;
    }
  };
  rec(rec, 0);
}

}  // namespace

PartitionCover build_partition_cover(const VertexSpace& space, int k, int m, uint64_t seed,
                                     int round_cap) {
  const int interior = space.interior();
  if (k < 1 || k > interior) throw std::invalid_argument("need 1 <= k <= interior");
  if (m < 1 || m > k) throw std::invalid_argument("need 1 <= m <= k");

  mpz_class tuple_count = 1;
  for (int i = 0; i < k; ++i) tuple_count *= interior - i;
  mpz_class i_sets = 0;
  for (int i = 1; i <= m; ++i) i_sets += binomial(k, i);
  if (tuple_count * i_sets > (1 << 22))
    throw limit_error("too many cover requirements: " + mpz_class(tuple_count * i_sets).get_str());

  struct Requirement {
    std::vector<int> tuple;
    uint32_t i_mask;
  };
  std::vector<Requirement> reqs;
  each_tuple(interior, k, [&](const std::vector<int>& tuple) {
    for (uint32_t i_mask = 1; i_mask < (1u << k); ++i_mask)
      if (std::popcount(i_mask) <= m) reqs.push_back({tuple, i_mask});
  });

  if (round_cap <= 0) {
    // Generous multiple of the analytic retention budget 2k(4k)^m lg N.
    uint64_t budget = 2ull * k * static_cast<uint64_t>(ceil_log2(space.n));
    for (int i = 0; i < m; ++i) budget *= 4ull * k;
    round_cap = static_cast<int>(std::min<uint64_t>(64 * budget + 4096, 1u << 26));
  }

  Rng rng(seed);
  std::vector<bool> covered(reqs.size(), false);
  size_t remaining = reqs.size();
  PartitionCover out;
  out.seed = seed;
  while (remaining > 0) {
    if (out.rounds_used >= round_cap)
      throw build_error("partition cover not reached in " + std::to_string(round_cap) +
                        " rounds; retry with a different seed");
    ++out.rounds_used;
    std::vector<uint32_t> blocks(k, 0);
    for (int v = 0; v < interior; ++v) blocks[rng.below_int(k)] |= 1u << v;
    Partition q = Partition::make(space, std::move(blocks));
    size_t newly = 0;
    for (size_t i = 0; i < reqs.size(); ++i)
      if (!covered[i] && covers(q, reqs[i].tuple, reqs[i].i_mask)) ++newly;
    if (newly == 0) continue;
    for (size_t i = 0; i < reqs.size(); ++i)
      if (!covered[i] && covers(q, reqs[i].tuple, reqs[i].i_mask)) covered[i] = true;
    remaining -= newly;
    out.partitions.push_back(std::move(q));
  }

  for (const Requirement& r : reqs) {
    bool ok = false;
    for (const Partition& q : out.partitions)
      if (covers(q, r.tuple, r.i_mask)) {
        ok = true;
        break;
      }
    if (!ok) throw build_error("cover verification failed (greedy bookkeeping bug)");
  }
  return out;
}

}  // namespace swnet
