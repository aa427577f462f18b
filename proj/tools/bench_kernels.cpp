// Wall-time comparison of the OpenMP kernels against their serial reference
// implementations, on representative mid-size workloads. Each row checks that
// both variants produce identical results before reporting the timings.

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "swnet/fourier_builder.hpp"
#include "swnet/kernels.hpp"
#include "swnet/knowledge.hpp"
#include "swnet/ordering_builder.hpp"
#include "swnet/parallel.hpp"

namespace {

using namespace swnet;

template <class F>
double best_ms(int reps, F&& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void report(const std::string& name, const std::string& size, double serial_ms,
            double parallel_ms, bool match) {
  std::cout << std::left << std::setw(22) << name << std::setw(26) << size << std::right
            << std::setw(12) << std::fixed << std::setprecision(2) << serial_ms << std::setw(12)
            << parallel_ms << std::setw(10) << std::setprecision(2)
            << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0) << "  "
            << (match ? "ok" : "MISMATCH") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kernel timings: OpenMP vs serial reference"};
  int workers = 0, reps = 3;
  app.add_option("--workers", workers, "worker threads (0 = auto)");
  app.add_option("--reps", reps, "repetitions per row (best time reported)");
  CLI11_PARSE(app, argc, argv);
  set_workers(workers);

  std::cout << std::left << std::setw(22) << "kernel" << std::setw(26) << "workload" << std::right
            << std::setw(12) << "serial_ms" << std::setw(12) << "openmp_ms" << std::setw(10)
            << "speedup" << "  check\n";

  bool all_match = true;

  {
    // Every knowledge set of size <= 3 over 10 interior vertices.
    VertexSpace space = VertexSpace::make(12);
    std::vector<KnowledgeSet> knowledge;
    for (uint32_t mask = 0; mask < (1u << space.interior()); ++mask)
      if (std::popcount(mask) <= 3) knowledge.push_back(build_kv(space, mask));
    std::vector<Edge> labels = standard_labels(space);
    std::vector<NetEdge> out_s, out_p;
    double s = best_ms(reps, [&] { out_s = serial::condition_edges(knowledge, labels, space); });
    double p = best_ms(reps, [&] { out_p = condition_edges(knowledge, labels, space); });
    bool match = out_s == out_p;
    all_match = all_match && match;
    report("condition_edges", std::to_string(knowledge.size()) + " states", s, p, match);
  }

  {
    // All 2^14 cuts against a mid-size ordering-cover network.
    OrderingBuild b = build_thm1_network(VertexSpace::make(16), 2, 1);
    uint64_t cuts = cut_count(b.ck.net.space);
    std::vector<uint8_t> out_s, out_p;
    double s = best_ms(reps, [&] { out_s = serial::cut_disconnect_flags(b.ck.net, cuts); });
    double p = best_ms(reps, [&] { out_p = cut_disconnect_flags(b.ck.net, cuts); });
    bool match = out_s == out_p;
    all_match = all_match && match;
    report("cut_disconnect_flags",
           std::to_string(cuts) + " cuts x " + std::to_string(b.ck.net.vertex_count()) + " verts",
           s, p, match);
  }

  {
    // Every edge of a chain network re-checked against the transition rule.
    VertexSpace base = VertexSpace::make(4);
    std::vector<InputGraph> i0{make_path_graph(2)};
    Thm2Build b = build_thm2_network(base, i0, VertexSpace::make(8), 1);
    std::vector<uint8_t> out_s, out_p;
    double s = best_ms(reps, [&] { out_s = serial::transition_flags(b.net); });
    double p = best_ms(reps, [&] { out_p = transition_flags(b.net); });
    bool match = out_s == out_p;
    all_match = all_match && match;
    report("transition_flags", std::to_string(b.net.edges.size()) + " edges", s, p, match);
  }

  return all_match ? 0 : 1;
}
