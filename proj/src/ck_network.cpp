#include "swnet/ck_network.hpp"

#include <gmpxx.h>

#include <bit>
#include <stdexcept>

#include "swnet/bigmath.hpp"
#include "swnet/errors.hpp"
#include "swnet/kernels.hpp"

namespace swnet {

CkValidation validate_ck(const SwitchingNetwork& net, const CkDescription& d) {
  if (!net.monotone()) throw std::invalid_argument("validate_ck requires a monotone network");
  for (int v = 0; v < net.vertex_count(); ++v)
    if (!d.assignment.count(v))
      throw std::invalid_argument("description missing vertex " + std::to_string(v));

  const VertexSpace& space = net.space;
  const KnowledgeSet empty = KnowledgeSet::make(space, {});
  const KnowledgeSet st = KnowledgeSet::make(space, {Edge{kS, kT}});
  if (!k_equal(d.assignment.at(net.s_prime), empty))
    return {false, "s' knowledge is not the empty class", std::nullopt};
  if (!k_equal(d.assignment.at(net.t_prime), st))
    return {false, "t' knowledge is not the s->t class", std::nullopt};

  for (const NetEdge& e : net.edges) {
    if (!step_valid(d.assignment.at(e.u), d.assignment.at(e.v), e.label.edge))
      return {false,
              "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " labeled " +
                  e.label.to_string(space) + " is not a valid step",
              e};
  }
  return {true, "", std::nullopt};
}

CkNetwork build_basic_ck(const VertexSpace& space, int m, const BasicCkOptions& options) {
  if (m < 0 || m > space.interior())
    throw std::invalid_argument("m must be in [0, interior]");
  if (space.interior() > 22) throw limit_error("interior too large for subset enumeration");

  mpz_class count = 1;  // t'
  for (int i = 0; i <= m; ++i) count += binomial(space.interior(), i);
  if (count > options.vertex_limit)
    throw limit_error("basic network would have " + count.get_str() + " vertices, over the limit");

  std::vector<KnowledgeSet> knowledge;
  std::vector<uint32_t> masks;
  for (uint32_t mask = 0; mask < (1u << space.interior()); ++mask) {
    if (std::popcount(mask) > m) continue;
    knowledge.push_back(build_kv(space, mask));
    masks.push_back(mask);
  }
  knowledge.push_back(KnowledgeSet::make(space, {Edge{kS, kT}}));

  const std::vector<Edge> labels = standard_labels(space, options.include_degenerate_labels);
  std::vector<NetEdge> edges = condition_edges(knowledge, labels, space);

  const int t_prime = static_cast<int>(knowledge.size()) - 1;
  std::vector<Annotation> annotations(knowledge.begin(), knowledge.end());
  SwitchingNetwork net = SwitchingNetwork::make(space, static_cast<int>(knowledge.size()), 0,
                                                t_prime, std::move(edges), std::move(annotations));

  CkDescription desc;
  for (int v = 0; v < net.vertex_count(); ++v) desc.assignment.emplace(v, knowledge[v]);
  return CkNetwork{std::move(net), std::move(desc)};
}

int compute_sc(const VertexSpace& space, const std::vector<InputGraph>& members,
               const BasicCkOptions& options) {
  if (members.empty()) throw std::invalid_argument("compute_sc needs at least one member");
  for (const InputGraph& g : members) {
    if (g.space.n != space.n) throw std::invalid_argument("member on a different space");
    if (!has_st_path(g)) throw std::invalid_argument("compute_sc member lacks an s->t path");
  }
  for (int m = 0; m <= space.interior(); ++m) {
    CkNetwork ck = build_basic_ck(space, m, options);
    bool all = true;
    for (const InputGraph& g : members)
      if (!accepts(ck.net, g).accepted) {
        all = false;
        break;
      }
    if (all) return m;
  }
  throw build_error("no basic certain-knowledge network accepts every member");
}

}  // namespace swnet
