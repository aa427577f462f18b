#include "swnet/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "swnet/bigmath.hpp"
#include "swnet/errors.hpp"
#include "swnet/parallel.hpp"
#include "swnet/rng.hpp"

namespace swnet {

MemberShape shape_of(const FamilyMember& member) {
  return MemberShape{member.v0, member.left_mask, member.right_mask};
}

namespace {

// The accepting set up to closure is anything already connecting s to t.
bool reaches_t(const KnowledgeSet& k) {
  std::vector<int> frontier{kS};
  std::vector<uint8_t> seen(static_cast<size_t>(k.n), 0);
  seen[kS] = 1;
  for (size_t head = 0; head < frontier.size(); ++head) {
    for (Edge e : k.edges) {
      if (e.from != frontier[head] || seen[e.to]) continue;
      if (e.to == kT) return true;
      seen[e.to] = 1;
      frontier.push_back(e.to);
    }
  }
  return false;
}

}  // namespace

bool is_useful(const KnowledgeSet& k_set, const VertexSpace& space, const MemberShape& shape,
               int m) {
  if (k_set.n != space.n) throw std::invalid_argument("knowledge set on a different space");
  if (space.interior() > 64) throw limit_error("shape masks cover at most 64 interior vertices");
  if (reaches_t(k_set)) return false;

  auto planted = [&](int v) {
    return std::find(shape.v0.begin(), shape.v0.end(), v) != shape.v0.end();
  };
  auto sided = [&](uint64_t mask, int v) {
    return v != kS && v != kT && (mask >> VertexSpace::interior_index(v) & 1);
  };

  uint64_t touched = 0;  // interior endpoints, as an index mask
  for (Edge e : k_set.edges) {
    bool core = (e.from == kS || planted(e.from)) && (e.to == kT || planted(e.to));
    bool feeder_in = e.from == kS && sided(shape.left_mask, e.to);
    bool feeder_out = sided(shape.right_mask, e.from) && e.to == kT;
    if (!core && !feeder_in && !feeder_out) return false;
    if (e.from != kS) touched |= uint64_t{1} << VertexSpace::interior_index(e.from);
    if (e.to != kT) touched |= uint64_t{1} << VertexSpace::interior_index(e.to);
  }
  int covered = 0;
  for (int v : shape.v0) {
    if (touched >> VertexSpace::interior_index(v) & 1) ++covered;
  }
  return covered >= m;
}

mpq_class exact_overlap_tail(int x, int k, int m, int n) {
  if (n < 2 || x < 0 || x > n - 2 || k < 0 || k > n - 2 || m < 0) {
    throw std::invalid_argument("overlap tail parameters out of range");
  }
  mpz_class num = 0;
  for (int y = m; y <= std::min(x, k); ++y) {
    if (k - y > n - 2 - x) continue;
    num += binomial(x, y) * binomial(n - 2 - x, k - y);
  }
  mpq_class out(num, binomial(n - 2, k));
  out.canonicalize();
  return out;
}

namespace {

// log2 of v, as an exact dyadic upper bracket.
mpq_class lg_up(const mpz_class& v) { return log2_bracket(mpq_class(v), 16, true); }

}  // namespace

mpq_class useful_prob_bound(const BoundParams& params) {
  if (params.k < 1 || params.m < 0) throw std::invalid_argument("need k >= 1 and m >= 0");
  if (params.n < 10 * params.k * params.k) throw std::invalid_argument("need n >= 10k^2");
  mpq_class inner = mpq_class(2 * params.k) *
                    (mpq_class(params.k) + lg_up(mpz_class(params.k) * params.n)) /
                    mpq_class(params.n);
  inner.canonicalize();
  return 2 * pow_q(inner, static_cast<uint64_t>(params.m));
}

McResult mc_useful_prob(const KnowledgeSet& k_set, const VertexSpace& space, int k, int m,
                        uint64_t samples, uint64_t seed) {
  const int ni = space.interior();
  if (k < 1 || k > ni) throw std::invalid_argument("need 1 <= k <= interior");
  if (ni > 64) throw limit_error("shape masks cover at most 64 interior vertices");
  if (samples == 0) throw std::invalid_argument("need at least one sample");

  constexpr uint64_t kChunk = 4096;
  const uint64_t chunks = (samples + kChunk - 1) / kChunk;
  std::vector<uint64_t> hits(chunks, 0);

#pragma omp parallel for schedule(static) num_threads(effective_workers())
  for (int64_t c = 0; c < static_cast<int64_t>(chunks); ++c) {
    Rng rng(Rng::substream(seed, static_cast<uint64_t>(c)));
    const uint64_t draws = std::min(kChunk, samples - static_cast<uint64_t>(c) * kChunk);
    std::vector<int> scratch(ni);
    MemberShape shape;
    uint64_t local = 0;
    for (uint64_t d = 0; d < draws; ++d) {
      std::iota(scratch.begin(), scratch.end(), 0);
      shape.v0.clear();
      shape.left_mask = shape.right_mask = 0;
      for (int i = 0; i < k; ++i) {
        int j = i + static_cast<int>(rng.below(static_cast<uint64_t>(ni - i)));
        std::swap(scratch[i], scratch[j]);
        shape.v0.push_back(space.interior_vertex(scratch[i]));
      }
      for (int pos = k; pos < ni; ++pos) {
        uint32_t bit = uint32_t{1} << scratch[pos];
        (rng.below(2) ? shape.left_mask : shape.right_mask) |= bit;
      }
      if (is_useful(k_set, space, shape, m)) ++local;
    }
    hits[c] = local;
  }

  McResult out;
  out.samples = samples;
  for (uint64_t h : hits) out.hits += h;
  out.estimate = static_cast<double>(out.hits) / static_cast<double>(samples);
  out.stderr_ = std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(samples));
  return out;
}

bool audit_useful_vertex(const SwitchingNetwork& net, const CkDescription& d,
                         const FamilyMember& member, int m) {
  if (!accepts(net, member.graph).accepted) {
    throw not_applicable("network does not accept this member");
  }
  const int vc = net.vertex_count();
  MemberShape shape = shape_of(member);
  std::vector<uint8_t> blocked(vc, 0);
  for (int v = 0; v < vc; ++v) {
    auto it = d.assignment.find(v);
    if (it == d.assignment.end()) throw std::invalid_argument("vertex missing a knowledge set");
    blocked[v] = is_useful(it->second, net.space, shape, m);
  }

  std::vector<std::vector<std::pair<int, Label>>> adj(vc);
  for (const NetEdge& e : net.edges) {
    adj[e.u].push_back({e.v, e.label});
    adj[e.v].push_back({e.u, e.label});
  }
  auto consistent = [&](const Label& l) {
    return l.negated ? !member.graph.has_edge(l.edge) : member.graph.has_edge(l.edge);
  };

  if (blocked[net.s_prime] || blocked[net.t_prime]) return true;
  std::vector<uint8_t> seen(vc, 0);
  std::vector<int> queue{net.s_prime};
  seen[net.s_prime] = 1;
  for (size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    if (v == net.t_prime) return false;  // all useful vertices avoided
    for (const auto& [w, label] : adj[v]) {
      if (!seen[w] && !blocked[w] && consistent(label)) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return true;
}

mpq_class eval_bound(BoundKind which, const BoundParams& params) {
  if (params.k < 1 || params.n < params.k + 2) throw std::invalid_argument("need n >= k + 2");
  switch (which) {
    case BoundKind::kThm1:
      return mpq_class(2 * params.n * params.k * factorial(params.k)) * lg_up(params.n);
    case BoundKind::kThm2:
      if (params.m < 0) throw std::invalid_argument("need m >= 0");
      return mpq_class(pow_z(2, 5 * params.m + 3) * pow_z(params.k, 3 * params.m + 2) *
                       pow_z(params.n, 3)) *
             lg_up(params.n);
    case BoundKind::kThm3: {
      if (params.m < 0) throw std::invalid_argument("need m >= 0");
      if (params.n < 10 * params.k * params.k) throw std::invalid_argument("need n >= 10k^2");
      mpq_class denom =
          mpq_class(2 * params.k) * (mpq_class(params.k) + lg_up(mpz_class(params.k) * params.n));
      mpq_class base = mpq_class(params.n) / denom;
      base.canonicalize();
      return pow_q(base, static_cast<uint64_t>(params.m)) / 2;
    }
  }
  throw std::invalid_argument("unknown bound");
}

CrossoverReport crossover_report(const std::vector<int>& p_values) {
  CrossoverReport rep;
  for (int p : p_values) {
    if (p < 1) throw std::invalid_argument("need p >= 1");
    int q = 0;
    while (q * q < p) ++q;
    CrossoverRow row;
    row.p = p;
    row.q = q;
    row.k = int64_t{1} << q;
    row.m = 1 + q;

    // simplified upper form; equals the direct 2^(5m+3) k^(3m+2) exponent
    row.upper_log2 = 3 * int64_t{q} * q + 10 * q + 8 + 3 * int64_t{p} + ceil_log2(mpz_class(p));
    int64_t direct = (5 * int64_t{row.m} + 3) + int64_t{q} * (3 * row.m + 2) + 3 * int64_t{p} +
                     ceil_log2(mpz_class(p));
    if (direct != row.upper_log2) throw std::logic_error("upper-bound forms disagree");

    mpz_class d = 2 * mpz_class(row.k) * (mpz_class(row.k) + q + p);
    row.lower_log2 = int64_t{p} * row.m - 1 - int64_t{row.m} * ceil_log2(d);
    row.vacuous = row.lower_log2 <= 0;
    rep.rows.push_back(row);
  }

  rep.poly_c = 0;
  // m grows without bound along any increasing sweep: it is constant between
  // consecutive squares of q, so the finite-table check is "never decreases,
  // strictly larger at the end". The slope comparison is exact
  // (cross-multiplied), and must rise at every step, q jump or not.
  rep.m_growing = rep.rows.size() > 1 && rep.rows.back().m > rep.rows.front().m;
  rep.slope_growing = rep.rows.size() > 1;
  for (size_t i = 0; i < rep.rows.size(); ++i) {
    const CrossoverRow& r = rep.rows[i];
    int c = static_cast<int>((r.upper_log2 + r.p - 1) / r.p);
    rep.poly_c = std::max(rep.poly_c, c);
    if (i > 0) {
      const CrossoverRow& prev = rep.rows[i - 1];
      if (r.m < prev.m) rep.m_growing = false;
      if (r.lower_log2 * int64_t{prev.p} <= prev.lower_log2 * int64_t{r.p}) {
        rep.slope_growing = false;
      }
    }
  }
  return rep;
}

}  // namespace swnet
