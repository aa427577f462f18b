// Command-line driver tying family generation, network construction,
// verification, and the bound reports into reproducible runs.
//
// Exit codes: 0 success / all checks passed, 1 a check or build failed,
// 2 usage or input-format error, 3 resource limit hit.
//
// All outputs are byte-deterministic given the flags and seed; --workers
// changes wall time only. The output directory comes from --out-dir (or the
// SWNET_OUT_DIR environment variable when the flag is absent).

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "swnet/bigmath.hpp"
#include "swnet/bounds.hpp"
#include "swnet/ck_network.hpp"
#include "swnet/errors.hpp"
#include "swnet/family.hpp"
#include "swnet/fourier_builder.hpp"
#include "swnet/kernels.hpp"
#include "swnet/network_io.hpp"
#include "swnet/ordering_builder.hpp"
#include "swnet/parallel.hpp"

namespace fs = std::filesystem;

namespace {

using namespace swnet;

std::string g_out_dir = ".";

fs::path place(const std::string& name) {
  fs::path p(name);
  if (p.is_absolute()) return p;
  return fs::path(g_out_dir) / p;
}

void ensure_out_dir() {
  std::error_code ec;
  fs::create_directories(g_out_dir, ec);
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("short write to " + path.string());
}

// Decimal rendering that stays finite for huge exact values.
std::string q_display(const mpq_class& v) {
  if (v == 0) return "0";
  if (mpz_sizeinbase(v.get_num().get_mpz_t(), 2) > 900 ||
      mpz_sizeinbase(v.get_den().get_mpz_t(), 2) > 900) {
    mpz_class num_bits = mpz_sizeinbase(v.get_num().get_mpz_t(), 2);
    mpz_class den_bits = mpz_sizeinbase(v.get_den().get_mpz_t(), 2);
    mpz_class approx = num_bits - den_bits;
    return "~2^" + approx.get_str();
  }
  if (v.get_den() == 1) return v.get_num().get_str();
  std::ostringstream s;
  s << std::setprecision(9) << v.get_d();
  return s.str();
}

std::string q_exact(const mpq_class& v) { return v.get_num().get_str() + "/" + v.get_den().get_str(); }

SwitchingNetwork load_network(const std::string& path) {
  if (!fs::exists(path)) throw std::invalid_argument("no such network file: " + path);
  return read_network(path);
}

// ---- build manifests ------------------------------------------------------

struct ManifestData {
  std::string builder;
  int n = 0;
  std::optional<int> k, m;
  std::optional<uint64_t> seed;
  std::optional<int64_t> rounds, q;
  std::optional<uint64_t> h_raw, h_dedup;
  int size = 0;
  mpz_class bound;
};

std::string manifest_text(const ManifestData& m) {
  auto opt = [](const auto& o) -> std::string {
    if (!o) return "-";
    std::ostringstream s;
    s << *o;
    return s.str();
  };
  std::ostringstream out;
  out << "MANIFEST v1\n"
      << "BUILDER " << m.builder << '\n'
      << "N " << m.n << '\n'
      << "K " << opt(m.k) << '\n'
      << "M " << opt(m.m) << '\n'
      << "SEED " << opt(m.seed) << '\n'
      << "ROUNDS " << opt(m.rounds) << '\n'
      << "Q " << opt(m.q) << '\n'
      << "H_RAW " << opt(m.h_raw) << '\n'
      << "H_DEDUP " << opt(m.h_dedup) << '\n'
      << "SIZE " << m.size << '\n'
      << "BOUND " << m.bound.get_str() << '\n';
  return out.str();
}

int emit_build(const std::string& base, const SwitchingNetwork& net, const ManifestData& m) {
  ensure_out_dir();
  fs::path net_path = place(base + ".swnet");
  fs::path man_path = place(base + ".manifest");
  write_network(net_path.string(), net);
  write_text(man_path, manifest_text(m));
  std::cout << "network " << net_path.string() << '\n'
            << "manifest " << man_path.string() << '\n'
            << "size " << m.size << " bound " << m.bound.get_str() << '\n';
  return 0;
}

// ---- subcommand runners ---------------------------------------------------

int run_gen_inputs(int path_k, int n, bool left, bool right, uint64_t limit, std::string out_name) {
  VertexSpace space = VertexSpace::make(n);
  std::ostringstream name;
  name << "path" << path_k << "_n" << n << (left ? "_L" : "") << (right ? "_R" : "");
  InputFamily fam =
      enumerate_family(make_path_graph(path_k), space, left, right, limit, name.str());
  ensure_out_dir();
  if (out_name.empty()) out_name = name.str() + ".family";
  fs::path path = place(out_name);
  std::ostringstream text;
  write_family(text, fam);
  write_text(path, text.str());
  std::cout << "family " << path.string() << '\n' << "members " << fam.members.size() << '\n';
  return 0;
}

int run_build_basic(int n, int m, bool degenerate, uint64_t vertex_limit, std::string out_name) {
  VertexSpace space = VertexSpace::make(n);
  BasicCkOptions o;
  o.include_degenerate_labels = degenerate;
  o.vertex_limit = vertex_limit;
  CkNetwork ck = build_basic_ck(space, m, o);
  mpz_class expect = 1;  // t'
  for (int i = 0; i <= m; ++i) expect += binomial(space.interior(), i);
  ManifestData md;
  md.builder = "basic-ck";
  md.n = n;
  md.m = m;
  md.h_raw = static_cast<uint64_t>(ck.net.vertex_count());
  md.h_dedup = static_cast<uint64_t>(ck.net.vertex_count());
  md.size = ck.net.vertex_count();
  md.bound = expect;
  if (out_name.empty()) out_name = "basic-ck_n" + std::to_string(n) + "_m" + std::to_string(m);
  return emit_build(out_name, ck.net, md);
}

int run_build_thm1(int k, int n, uint64_t seed, const OrderingOptions& o, std::string out_name) {
  VertexSpace space = VertexSpace::make(n);
  OrderingBuild b = build_thm1_network(space, k, seed, o);
  ManifestData md;
  md.builder = "thm1";
  md.n = n;
  md.k = k;
  md.seed = seed;
  md.rounds = b.orderings_kept;
  md.h_raw = static_cast<uint64_t>(b.orderings_kept) * space.interior() + 2;
  md.h_dedup = static_cast<uint64_t>(b.ck.net.vertex_count());
  md.size = b.ck.net.vertex_count();
  md.bound = b.size_bound;
  if (out_name.empty())
    out_name = "thm1_k" + std::to_string(k) + "_n" + std::to_string(n) + "_s" + std::to_string(seed);
  return emit_build(out_name, b.ck.net, md);
}

int run_build_thm2(int k, int n, uint64_t seed, const Thm2Options& o, std::string out_name) {
  VertexSpace base_space = VertexSpace::make(k + 2);
  std::vector<InputGraph> i0{make_path_graph(k)};
  VertexSpace space = VertexSpace::make(n);
  Thm2Build b = build_thm2_network(base_space, i0, space, seed, o);
  ManifestData md;
  md.builder = "thm2";
  md.n = n;
  md.k = k;
  md.m = b.m;
  md.seed = seed;
  md.rounds = b.cover.rounds_used;
  md.q = static_cast<int64_t>(b.cover.partitions.size());
  md.h_raw = b.functions_raw;
  md.h_dedup = static_cast<uint64_t>(b.net.vertex_count());
  md.size = b.net.vertex_count();
  md.bound = b.size_bound;
  if (out_name.empty())
    out_name = "thm2_k" + std::to_string(k) + "_n" + std::to_string(n) + "_s" + std::to_string(seed);
  return emit_build(out_name, b.net, md);
}

struct VerifyFlags {
  std::string network;
  std::string family;
  std::string soundness = "none";  // none | cuts
  bool complete = false;
  bool ck = false;
  bool transitions = false;
  uint64_t cut_limit = kDefaultCutLimit;
  uint64_t path_limit = kDefaultPathLimit;
};

int run_verify(const VerifyFlags& f) {
  SwitchingNetwork net = load_network(f.network);
  bool any = !f.family.empty() || f.soundness == "cuts" || f.complete || f.ck || f.transitions;
  if (!any) {
    std::cerr << "verify: no checks requested "
                 "(use --family / --soundness cuts / --complete / --ck / --transitions)\n";
    return 2;
  }
  ensure_out_dir();
  bool all_ok = true;

  if (!f.family.empty()) {
    std::ifstream in(f.family, std::ios::binary);
    if (!in) {
      std::cerr << "verify: cannot read family file " << f.family << '\n';
      return 2;
    }
    LoadedFamily fam = read_family(in);
    if (fam.space.n != net.space.n)
      throw std::invalid_argument("family space has " + std::to_string(fam.space.n) +
                                  " vertices but the network's has " +
                                  std::to_string(net.space.n));
    int bad = -1;
    for (std::size_t i = 0; i < fam.graphs.size(); ++i)
      if (!accepts(net, fam.graphs[i]).accepted) {
        bad = static_cast<int>(i);
        break;
      }
    if (bad < 0) {
      std::cout << "acceptance: ok (" << fam.graphs.size() << " members)\n";
    } else {
      fs::path w = place("witness_accept_member" + std::to_string(bad) + ".txt");
      std::ostringstream txt;
      txt << "member " << bad << " of " << f.family << " rejected\n";
      for (Edge e : fam.graphs[bad].edges) txt << net.space.edge_name(e) << '\n';
      write_text(w, txt.str());
      std::cout << "acceptance: FAIL member " << bad << " rejected; witness " << w.string()
                << '\n';
      all_ok = false;
    }
  }

  if (f.soundness == "cuts") {
    if (!net.monotone()) {
      std::cout << "soundness: FAIL network has negated labels; "
                   "the cut criterion needs a monotone network\n";
      all_ok = false;
    } else {
      SoundnessResult r = is_sound_monotone(net, f.cut_limit);
      if (r.sound) {
        std::cout << "soundness: ok (" << cut_count(net.space) << " cuts)\n";
      } else {
        Cut c = cut_from_index(net.space, r.counterexample_cut);
        std::ostringstream txt;
        txt << "cut " << r.counterexample_cut << " fails to disconnect s' from t'\n";
        txt << "left: s";
        for (int i = 0; i < net.space.interior(); ++i)
          if (c.left_contains(net.space.interior_vertex(i)))
            txt << ' ' << net.space.vertex_name(net.space.interior_vertex(i));
        txt << "\nright:";
        for (int i = 0; i < net.space.interior(); ++i)
          if (!c.left_contains(net.space.interior_vertex(i)))
            txt << ' ' << net.space.vertex_name(net.space.interior_vertex(i));
        txt << " t\n";
        fs::path w = place("witness_cut.txt");
        write_text(w, txt.str());
        std::cout << "soundness: FAIL cut " << r.counterexample_cut
                  << " does not disconnect; witness " << w.string() << '\n';
        all_ok = false;
      }
    }
  }

  if (f.complete) {
    CompletenessResult r = is_complete_monotone(net, f.path_limit);
    if (r.complete) {
      std::cout << "completeness: ok\n";
    } else {
      std::ostringstream txt;
      txt << "bare path not accepted: s";
      for (int v : r.counterexample_path) txt << ' ' << net.space.vertex_name(v);
      txt << " t\n";
      fs::path w = place("witness_path.txt");
      write_text(w, txt.str());
      std::cout << "completeness: FAIL; witness " << w.string() << '\n';
      all_ok = false;
    }
  }

  if (f.ck) {
    CkDescription d;
    int missing = -1;
    for (int v = 0; v < net.vertex_count(); ++v) {
      if (const auto* ks = std::get_if<KnowledgeSet>(&net.annotations[v]))
        d.assignment.emplace(v, *ks);
      else {
        missing = v;
        break;
      }
    }
    if (missing >= 0) {
      std::cout << "ck: FAIL vertex " << missing << " carries no knowledge annotation\n";
      all_ok = false;
    } else {
      CkValidation val = validate_ck(net, d);
      if (val.valid) {
        std::cout << "ck: ok (" << net.vertex_count() << " states)\n";
      } else {
        std::ostringstream txt;
        txt << val.reason << '\n';
        if (val.violation)
          txt << "edge " << val.violation->u << " -- " << val.violation->v << " label "
              << val.violation->label.to_string(net.space) << '\n';
        fs::path w = place("witness_ck_edge.txt");
        write_text(w, txt.str());
        std::cout << "ck: FAIL " << val.reason << "; witness " << w.string() << '\n';
        all_ok = false;
      }
    }
  }

  if (f.transitions) {
    bool have_fns = true;
    for (int v = 0; v < net.vertex_count() && have_fns; ++v)
      if (!std::get_if<CutFunction>(&net.annotations[v])) have_fns = false;
    if (!have_fns) {
      std::cout << "transitions: FAIL network does not carry cut-function annotations\n";
      all_ok = false;
    } else {
      std::vector<uint8_t> flags = transition_flags(net);
      int bad = -1;
      for (std::size_t i = 0; i < flags.size(); ++i)
        if (!flags[i]) {
          bad = static_cast<int>(i);
          break;
        }
      if (bad < 0) {
        std::cout << "transitions: ok (" << flags.size() << " edges)\n";
      } else {
        const NetEdge& e = net.edges[bad];
        std::ostringstream txt;
        txt << "edge " << bad << ": " << e.u << " -- " << e.v << " label "
            << e.label.to_string(net.space) << " is not a valid transition\n";
        fs::path w = place("witness_transition.txt");
        write_text(w, txt.str());
        std::cout << "transitions: FAIL edge " << bad << "; witness " << w.string() << '\n';
        all_ok = false;
      }
    }
  }

  return all_ok ? 0 : 1;
}

int run_sc(int path_k, const std::string& family_path) {
  if (!family_path.empty()) {
    std::ifstream in(family_path, std::ios::binary);
    if (!in) {
      std::cerr << "sc: cannot read family file " << family_path << '\n';
      return 2;
    }
    LoadedFamily fam = read_family(in);
    std::cout << compute_sc(fam.space, fam.graphs) << '\n';
    return 0;
  }
  VertexSpace space = VertexSpace::make(path_k + 2);
  std::vector<InputGraph> members{make_path_graph(path_k)};
  std::cout << compute_sc(space, members) << '\n';
  return 0;
}

int run_bounds(const std::vector<int>& ns, int k, int m, const std::string& kind, bool machine) {
  struct Row {
    std::string kind;
    int n;
    std::optional<int> m;
    std::optional<mpq_class> bound;
    std::string note = "-";
  };
  std::vector<Row> rows;
  std::vector<std::string> kinds;
  if (kind == "all")
    kinds = {"thm1", "thm2", "thm3"};
  else
    kinds = {kind};
  for (const std::string& which : kinds)
    for (int n : ns) {
      Row r{which, n, {}, {}, "-"};
      if (which == "thm1") {
        r.bound = eval_bound(BoundKind::kThm1, {n, k, 0});
      } else if (which == "thm2") {
        r.m = m;
        r.bound = eval_bound(BoundKind::kThm2, {n, k, m});
      } else {
        r.m = m;
        if (n < 10 * k * k) {
          r.note = "needs n >= 10k^2";
        } else {
          r.bound = eval_bound(BoundKind::kThm3, {n, k, m});
          if (*r.bound <= 1) r.note = "vacuous";
        }
      }
      rows.push_back(std::move(r));
    }

  if (machine) {
    std::cout << "# kind\tn\tk\tm\tbound_num\tbound_den\tbound\tnote\n";
    for (const Row& r : rows) {
      std::cout << r.kind << '\t' << r.n << '\t' << k << '\t';
      std::cout << (r.m ? std::to_string(*r.m) : "-") << '\t';
      if (r.bound)
        std::cout << r.bound->get_num().get_str() << '\t' << r.bound->get_den().get_str() << '\t'
                  << q_display(*r.bound);
      else
        std::cout << "-\t-\t-";
      std::cout << '\t' << r.note << '\n';
    }
    return 0;
  }
  std::cout << std::left << std::setw(6) << "kind" << std::setw(8) << "n" << std::setw(4) << "k"
            << std::setw(4) << "m" << std::setw(22) << "bound" << "note\n";
  for (const Row& r : rows) {
    std::cout << std::left << std::setw(6) << r.kind << std::setw(8) << r.n << std::setw(4) << k
              << std::setw(4) << (r.m ? std::to_string(*r.m) : "-") << std::setw(22)
              << (r.bound ? q_display(*r.bound) : "-") << r.note << '\n';
  }
  return 0;
}

int run_mc_useful(int n, int k, int m, const std::string& kset_text, uint64_t samples,
                  uint64_t seed) {
  VertexSpace space = VertexSpace::make(n);
  KnowledgeSet ks = KnowledgeSet::parse(space, kset_text);
  McResult r = mc_useful_prob(ks, space, k, m, samples, seed);
  std::cout << "knowledge " << (ks.edges.empty() ? "-" : ks.to_string(space)) << '\n'
            << "n " << n << " k " << k << " m " << m << " samples " << samples << " seed " << seed
            << '\n'
            << std::setprecision(9) << "estimate " << r.estimate << '\n'
            << "stderr " << r.stderr_ << '\n'
            << "hits " << r.hits << '\n';
  return 0;
}

int run_exact_useful(int n, int k, int m, int x, bool machine) {
  // Per-outcome probabilities and the running inequality p(y) <= (xk/(n-x-k-2))^y.
  bool step_ok = true;
  struct Row {
    int y;
    mpq_class p;
    std::optional<mpq_class> step_bound;
    bool ok = true;
  };
  std::vector<Row> rows;
  mpz_class denom = binomial(n - 2, k);
  for (int y = 0; y <= k; ++y) {
    Row r{y, 0, {}, true};
    if (y <= x && k - y <= n - 2 - x)
      r.p = mpq_class(binomial(x, y) * binomial(n - 2 - x, k - y), denom);
    if (n - x - k - 2 > 0) {
      r.step_bound = pow_q(mpq_class(static_cast<long>(x) * k, n - x - k - 2), y);
      r.ok = r.p <= *r.step_bound;
      step_ok = step_ok && r.ok;
    }
    rows.push_back(std::move(r));
  }
  mpq_class tail = exact_overlap_tail(x, k, m, n);

  // Which branch of the tail estimate applies: x < k + m lg n iff 2^(x-k) < n^m.
  bool small_x = x <= k || pow_z(2, static_cast<uint64_t>(x - k)) < pow_z(n, static_cast<uint64_t>(m));
  std::optional<mpq_class> tail_bound;
  std::string branch;
  if (small_x) {
    branch = "x < k + m lg n";
    if (n >= 10 * k * k) tail_bound = useful_prob_bound({n, k, m});
  } else {
    branch = "x >= k + m lg n";
    tail_bound = mpq_class(1) / mpq_class(pow_z(n, static_cast<uint64_t>(m)));
  }
  bool tail_ok = !tail_bound || tail <= *tail_bound;

  if (machine) {
    std::cout << "# y\tp_num\tp_den\tp\tstep_bound\tok\n";
    for (const Row& r : rows)
      std::cout << r.y << '\t' << r.p.get_num().get_str() << '\t' << r.p.get_den().get_str()
                << '\t' << q_display(r.p) << '\t'
                << (r.step_bound ? q_display(*r.step_bound) : "-") << '\t'
                << (r.ok ? "ok" : "VIOLATION") << '\n';
  } else {
    std::cout << std::left << std::setw(4) << "y" << std::setw(16) << "p" << std::setw(22)
              << "exact" << std::setw(16) << "step_bound" << "check\n";
    for (const Row& r : rows)
      std::cout << std::left << std::setw(4) << r.y << std::setw(16) << q_display(r.p)
                << std::setw(22) << q_exact(r.p) << std::setw(16)
                << (r.step_bound ? q_display(*r.step_bound) : "-") << (r.ok ? "ok" : "VIOLATION")
                << '\n';
  }
  std::cout << "tail(y>=" << m << ") " << q_exact(tail) << " = " << q_display(tail) << '\n';
  std::cout << "case " << branch << '\n';
  if (tail_bound)
    std::cout << "bound " << q_display(*tail_bound) << (tail_ok ? " ok" : " VIOLATION") << '\n';
  else
    std::cout << "bound - (n < 10k^2, no closed-form claim)\n";
  return step_ok && tail_ok ? 0 : 1;
}

int run_audit_ck(const std::string& net_path, int k, int m, bool left, bool right,
                 uint64_t limit) {
  SwitchingNetwork net = load_network(net_path);
  CkDescription d;
  for (int v = 0; v < net.vertex_count(); ++v) {
    const auto* ks = std::get_if<KnowledgeSet>(&net.annotations[v]);
    if (!ks)
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " carries no knowledge annotation; audit-ck needs a "
                                  "certain-knowledge network file");
    d.assignment.emplace(v, *ks);
  }
  InputFamily fam = enumerate_family(make_path_graph(k), net.space, left, right, limit);
  ensure_out_dir();
  int audited = 0, skipped = 0, failed = 0;
  for (std::size_t i = 0; i < fam.members.size(); ++i) {
    bool ok;
    try {
      ok = audit_useful_vertex(net, d, fam.members[i], m);
    } catch (const not_applicable&) {
      ++skipped;
      continue;
    }
    ++audited;
    if (!ok) {
      ++failed;
      fs::path w = place("witness_useful_member" + std::to_string(i) + ".txt");
      std::ostringstream txt;
      txt << "member " << i << ": an accepting walk avoids every vertex whose knowledge set is "
          << m << "-useful\n";
      for (Edge e : fam.members[i].graph.edges) txt << net.space.edge_name(e) << '\n';
      write_text(w, txt.str());
      std::cout << "useful-vertex: FAIL member " << i << "; witness " << w.string() << '\n';
    }
  }
  std::cout << "audited " << audited << " accepted members (skipped " << skipped
            << " not accepted), failures " << failed << '\n';
  return failed == 0 ? 0 : 1;
}

int run_crossover(int p_min, int p_max, bool machine) {
  if (p_min < 2 || p_max < p_min || p_max > 512)
    throw std::invalid_argument("need 2 <= p-min <= p-max <= 512");
  std::vector<int> ps;
  for (int p = p_min; p <= p_max; ++p) ps.push_back(p);
  CrossoverReport rep = crossover_report(ps);
  if (machine) {
    std::cout << "# p\tq\tk\tm\tupper_log2\tlower_log2\tnote\n";
    for (const CrossoverRow& r : rep.rows)
      std::cout << r.p << '\t' << r.q << '\t' << r.k << '\t' << r.m << '\t' << r.upper_log2
                << '\t' << r.lower_log2 << '\t' << (r.vacuous ? "vacuous" : "-") << '\n';
  } else {
    std::cout << std::left << std::setw(5) << "p" << std::setw(4) << "q" << std::setw(6) << "k"
              << std::setw(4) << "m" << std::setw(12) << "upper_log2" << std::setw(12)
              << "lower_log2" << "note\n";
    for (const CrossoverRow& r : rep.rows)
      std::cout << std::left << std::setw(5) << r.p << std::setw(4) << r.q << std::setw(6) << r.k
                << std::setw(4) << r.m << std::setw(12) << r.upper_log2 << std::setw(12)
                << r.lower_log2 << (r.vacuous ? "vacuous" : "-") << '\n';
  }
  std::cout << "poly_c " << rep.poly_c << '\n'
            << "m_growing " << (rep.m_growing ? "yes" : "NO") << '\n'
            << "slope_growing " << (rep.slope_growing ? "yes" : "NO") << '\n';
  return rep.m_growing && rep.slope_growing ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monotone switching networks for directed connectivity: "
               "builders, verifiers, and bound reports"};
  app.require_subcommand(1);
  int workers = 0;
  app.add_option("--workers", workers, "worker threads for the parallel kernels (0 = auto)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--out-dir", g_out_dir, "directory for output and witness files")
      ->envname("SWNET_OUT_DIR");

  // gen-inputs
  auto* gen = app.add_subcommand("gen-inputs", "enumerate the plantings of a base path");
  gen->fallthrough();
  int gi_k = 0, gi_n = 0;
  bool gi_left = true, gi_right = true;
  uint64_t gi_limit = kDefaultFamilyLimit;
  std::string gi_out;
  gen->add_option("--path-k", gi_k, "interior length of the base path")->required();
  gen->add_option("--n", gi_n, "target ground-set size")->required();
  gen->add_flag("--left,!--no-left", gi_left, "allow leftover vertices on the s side");
  gen->add_flag("--right,!--no-right", gi_right, "allow leftover vertices on the t side");
  gen->add_option("--limit", gi_limit, "member cap");
  gen->add_option("--out", gi_out, "output file name (default derived from the parameters)");

  // build
  auto* build = app.add_subcommand("build", "construct a network and its manifest");
  build->fallthrough();
  build->require_subcommand(1);

  auto* bb = build->add_subcommand("basic-ck", "canonical certain-knowledge network");
  bb->fallthrough();
  int bb_n = 0, bb_m = 0;
  bool bb_degenerate = false;
  uint64_t bb_vertex_limit = BasicCkOptions{}.vertex_limit;
  std::string bb_out;
  bb->add_option("--n", bb_n, "ground-set size")->required();
  bb->add_option("--m", bb_m, "maximum knowledge-set size")->required();
  bb->add_flag("--degenerate-labels", bb_degenerate, "also emit labels into s and out of t");
  bb->add_option("--vertex-limit", bb_vertex_limit, "vertex cap");
  bb->add_option("--out", bb_out, "output base name");

  auto* b1 = build->add_subcommand("thm1", "seeded greedy ordering cover");
  b1->fallthrough();
  int b1_k = 0, b1_n = 0;
  uint64_t b1_seed = 0;
  OrderingOptions b1_opts;
  std::string b1_out;
  b1->add_option("--k", b1_k, "planted path length")->required();
  b1->add_option("--n", b1_n, "ground-set size")->required();
  b1->add_option("--seed", b1_seed, "RNG seed (required: the build is randomized)")->required();
  b1->add_option("--batch", b1_opts.batch, "candidates per greedy round");
  b1->add_option("--sample-cap", b1_opts.sample_cap, "total ordering draws allowed (0 = auto)");
  b1->add_option("--family-limit", b1_opts.family_limit, "member cap for the cover target");
  b1->add_option("--out", b1_out, "output base name");

  auto* b2 = build->add_subcommand("thm2", "cut-function chain network");
  b2->fallthrough();
  int b2_k = 0, b2_n = 0;
  uint64_t b2_seed = 0;
  Thm2Options b2_opts;
  std::string b2_mode = "constructive";
  std::string b2_out;
  b2->add_option("--k", b2_k, "planted path length")->required();
  b2->add_option("--n", b2_n, "ground-set size")->required();
  b2->add_option("--seed", b2_seed, "RNG seed (required: the partition cover is randomized)")
      ->required();
  b2->add_option("--mode", b2_mode, "edge assembly: constructive | full")
      ->check(CLI::IsMember({"constructive", "full"}));
  b2->add_option("--function-limit", b2_opts.function_limit, "distinct function cap");
  b2->add_option("--round-cap", b2_opts.cover_round_cap, "partition-cover round cap (0 = auto)");
  b2->add_option("--out", b2_out, "output base name");

  // verify
  auto* ver = app.add_subcommand("verify", "run checks against a network file");
  ver->fallthrough();
  VerifyFlags vf;
  ver->add_option("--network", vf.network, "network file")->required();
  ver->add_option("--family", vf.family, "accept every member of this family file");
  ver->add_option("--soundness", vf.soundness, "cuts = exhaustive cut criterion")
      ->check(CLI::IsMember({"none", "cuts"}));
  ver->add_flag("--complete", vf.complete, "check acceptance of every bare s-t path");
  ver->add_flag("--ck", vf.ck, "validate knowledge annotations and step edges");
  ver->add_flag("--transitions", vf.transitions, "validate cut-function transition edges");
  ver->add_option("--cut-limit", vf.cut_limit, "cut enumeration cap");
  ver->add_option("--path-limit", vf.path_limit, "bare-path enumeration cap");

  // sc
  auto* sc = app.add_subcommand("sc", "print the least accepting knowledge level");
  sc->fallthrough();
  int sc_k = 0;
  std::string sc_family;
  auto* sc_k_opt = sc->add_option("--path-k", sc_k, "bare path of this interior length");
  auto* sc_f_opt = sc->add_option("--family", sc_family, "family file to cover instead");
  sc_k_opt->excludes(sc_f_opt);

  // bounds
  auto* bo = app.add_subcommand("bounds", "closed-form size bounds");
  bo->fallthrough();
  std::vector<int> bo_n;
  int bo_k = 0, bo_m = 0;
  std::string bo_kind = "all";
  bool bo_machine = false;
  bo->add_option("--n", bo_n, "ground-set sizes (repeatable)")->required();
  bo->add_option("--k", bo_k, "planted path length")->required();
  bo->add_option("--m", bo_m, "level parameter (thm2 / thm3 rows)");
  bo->add_option("--kind", bo_kind, "thm1 | thm2 | thm3 | all")
      ->check(CLI::IsMember({"thm1", "thm2", "thm3", "all"}));
  bo->add_flag("--machine", bo_machine, "tab-separated records instead of the aligned table");

  // mc-useful
  auto* mc = app.add_subcommand("mc-useful", "Monte Carlo useful-knowledge frequency");
  mc->fallthrough();
  int mc_n = 0, mc_k = 0, mc_m = 0;
  std::string mc_kset;
  uint64_t mc_samples = 100000, mc_seed = 0;
  mc->add_option("--n", mc_n, "ground-set size")->required();
  mc->add_option("--k", mc_k, "planted path length")->required();
  mc->add_option("--m", mc_m, "useful-overlap threshold")->required();
  mc->add_option("--knowledge", mc_kset, "knowledge set, e.g. \"s->u1,s->u2\"")->required();
  mc->add_option("--samples", mc_samples, "sample count");
  mc->add_option("--seed", mc_seed, "RNG seed (required: the estimate is randomized)")->required();

  // exact-useful
  auto* ex = app.add_subcommand("exact-useful", "exact overlap-tail probabilities");
  ex->fallthrough();
  int ex_n = 0, ex_k = 0, ex_m = 0, ex_x = 0;
  bool ex_machine = false;
  ex->add_option("--n", ex_n, "ground-set size")->required();
  ex->add_option("--k", ex_k, "planted path length")->required();
  ex->add_option("--m", ex_m, "useful-overlap threshold")->required();
  ex->add_option("--x", ex_x, "endpoint-covered interior vertices")->required();
  ex->add_flag("--machine", ex_machine, "tab-separated records instead of the aligned table");

  // audit-ck
  auto* au = app.add_subcommand("audit-ck", "useful-vertex audit over a planted-path family");
  au->fallthrough();
  std::string au_net;
  int au_k = 0, au_m = 0;
  bool au_left = true, au_right = true;
  uint64_t au_limit = kDefaultFamilyLimit;
  au->add_option("--network", au_net, "certain-knowledge network file")->required();
  au->add_option("--k", au_k, "planted path length")->required();
  au->add_option("--m", au_m, "useful-overlap threshold")->required();
  au->add_flag("--left,!--no-left", au_left, "allow leftover vertices on the s side");
  au->add_flag("--right,!--no-right", au_right, "allow leftover vertices on the t side");
  au->add_option("--limit", au_limit, "member cap");

  // crossover
  auto* cr = app.add_subcommand("crossover", "upper vs lower bound sweep in log2 space");
  cr->fallthrough();
  int cr_pmin = 16, cr_pmax = 64;
  bool cr_machine = false;
  cr->add_option("--p-min", cr_pmin, "first exponent (n = 2^p)");
  cr->add_option("--p-max", cr_pmax, "last exponent");
  cr->add_flag("--machine", cr_machine, "tab-separated records instead of the aligned table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  set_workers(workers);

  try {
    if (gen->parsed()) return run_gen_inputs(gi_k, gi_n, gi_left, gi_right, gi_limit, gi_out);
    if (bb->parsed()) return run_build_basic(bb_n, bb_m, bb_degenerate, bb_vertex_limit, bb_out);
    if (b1->parsed()) return run_build_thm1(b1_k, b1_n, b1_seed, b1_opts, b1_out);
    if (b2->parsed()) {
      b2_opts.mode = b2_mode == "full" ? GhMode::kFull : GhMode::kConstructive;
      return run_build_thm2(b2_k, b2_n, b2_seed, b2_opts, b2_out);
    }
    if (ver->parsed()) return run_verify(vf);
    if (sc->parsed()) {
      if (sc_family.empty() && sc_k <= 0) {
        std::cerr << "sc: need --path-k or --family\n";
        return 2;
      }
      return run_sc(sc_k, sc_family);
    }
    if (bo->parsed()) return run_bounds(bo_n, bo_k, bo_m, bo_kind, bo_machine);
    if (mc->parsed()) return run_mc_useful(mc_n, mc_k, mc_m, mc_kset, mc_samples, mc_seed);
    if (ex->parsed()) return run_exact_useful(ex_n, ex_k, ex_m, ex_x, ex_machine);
    if (au->parsed()) return run_audit_ck(au_net, au_k, au_m, au_left, au_right, au_limit);
    if (cr->parsed()) return run_crossover(cr_pmin, cr_pmax, cr_machine);
  } catch (const limit_error& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return 3;
  } catch (const parse_error& e) {
    std::cerr << "bad input file: " << e.what() << '\n';
    return 2;
  } catch (const build_error& e) {
    std::cerr << "build failed: " << e.what() << '\n';
    return 1;
  } catch (const not_applicable& e) {
    std::cerr << "not applicable: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  std::cerr << "no subcommand\n";
  return 2;
}
