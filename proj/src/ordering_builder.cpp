#include "swnet/ordering_builder.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "swnet/bigmath.hpp"
#include "swnet/errors.hpp"
#include "swnet/kernels.hpp"
#include "swnet/rng.hpp"

namespace swnet {

bool ordering_accepts(const std::vector<int>& ordering, const FamilyMember& member) {
  std::vector<int> pos(ordering.size(), -1);
  for (size_t r = 0; r < ordering.size(); ++r) {
    int v = ordering[r];
    if (v < 0 || v >= static_cast<int>(ordering.size()) || pos[v] >= 0) {
      throw std::invalid_argument("ordering is not a permutation of the interior");
    }
    pos[v] = static_cast<int>(r);
  }
  int prev = -1;
  for (int vertex : member.v0) {
    int v = VertexSpace::interior_index(vertex);
    if (v < 0 || v >= static_cast<int>(pos.size())) {
      throw std::invalid_argument("member vertex outside the interior");
    }
    if (prev >= 0 && pos[prev] >= pos[v]) return false;
    prev = v;
  }
  return true;
}

OrderingBuild build_thm1_network(const VertexSpace& space, int k, uint64_t seed,
                                 const OrderingOptions& options) {
  const int ni = space.interior();
  if (k < 1 || k > ni) throw std::invalid_argument("need 1 <= k <= N-2");
  if (ni > 30) throw limit_error("interior too large for knowledge-set closure");

  InputGraph base = make_path_graph(k);
  InputFamily family = enumerate_family(base, space, /*allow_left=*/true,
                                        /*allow_right=*/false, options.family_limit, "thm1");

  const mpz_class kfact = factorial(k);
  const int64_t lg_ceil = ceil_log2(mpz_class(space.n));
  uint64_t sample_cap = options.sample_cap;
  if (sample_cap == 0) {
    mpz_class cap = 256 * kfact * k * lg_ceil;
    sample_cap = std::max<uint64_t>(4096, cap.get_ui());
  }
  mpz_class kept_cap_z = 2 * kfact * k * lg_ceil + 1;
  const int kept_cap = static_cast<int>(kept_cap_z.get_ui());

  Rng rng(seed);
  std::vector<int> uncovered(family.members.size());
  std::iota(uncovered.begin(), uncovered.end(), 0);
  std::vector<int> identity(ni);
  std::iota(identity.begin(), identity.end(), 0);

  std::set<uint32_t> prefix_masks;
  OrderingBuild out;
  out.seed = seed;

  auto newly_covered = [&](const std::vector<int>& ordering) {
    int hits = 0;
    for (int idx : uncovered) {
      if (ordering_accepts(ordering, family.members[idx])) ++hits;
    }
    return hits;
  };
  auto keep = [&](const std::vector<int>& ordering) {
    uint32_t mask = 0;
    for (int v : ordering) {
      mask |= uint32_t{1} << v;
      prefix_masks.insert(mask);
    }
    std::vector<int> still;
    for (int idx : uncovered) {
      if (!ordering_accepts(ordering, family.members[idx])) still.push_back(idx);
    }
    uncovered.swap(still);
    ++out.orderings_kept;
  };

  while (!uncovered.empty()) {
    if (out.orderings_kept >= kept_cap) {
      throw build_error("ordering cover stalled; retry with a different seed");
    }
    std::vector<int> best;
    int best_hits = 0;
    bool kept = false;
    for (int b = 0; b < options.batch; ++b) {
      if (out.samples_drawn >= sample_cap) {
        throw build_error("ordering sample cap hit; retry with a different seed");
      }
      std::vector<int> candidate = identity;
      rng.shuffle(candidate);
      ++out.samples_drawn;
      int hits = newly_covered(candidate);
      if (mpz_class(hits) * kfact >= mpz_class(uncovered.size())) {
        keep(candidate);
        kept = true;
        break;
      }
      if (hits > best_hits) {
        best_hits = hits;
        best = candidate;
      }
    }
    if (!kept && best_hits > 0) keep(best);
  }

  std::vector<KnowledgeSet> knowledge;
  knowledge.reserve(prefix_masks.size() + 2);
  knowledge.push_back(KnowledgeSet::make(space, {}));
  for (uint32_t mask : prefix_masks) knowledge.push_back(build_kv(space, mask));
  knowledge.push_back(KnowledgeSet::make(space, {Edge{kS, kT}}));
  const int vertex_count = static_cast<int>(knowledge.size());

  std::vector<NetEdge> edges = condition_edges(knowledge, standard_labels(space), space);
  std::vector<Annotation> annotations(knowledge.begin(), knowledge.end());
  out.ck.net = SwitchingNetwork::make(space, vertex_count, 0, vertex_count - 1,
                                      std::move(edges), std::move(annotations));
  for (int v = 0; v < vertex_count; ++v) out.ck.description.assignment[v] = knowledge[v];

  out.size_bound = 2 * space.n * kfact * k * floor_log2(mpz_class(space.n));
  if (mpz_class(vertex_count) > out.size_bound) {
    throw build_error("ordering network exceeded its size bound");
  }
  CkValidation check = validate_ck(out.ck.net, out.ck.description);
  if (!check.valid) throw build_error("ordering network failed validation: " + check.reason);
  return out;
}

}  // namespace swnet
