// Acceptance run: one PASS/FAIL line per criterion, seed 1.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "sgeo/paper_verify.hpp"

using namespace sgeo;

namespace {

struct Timed {
  SuiteReport report;
  double seconds = 0;
};

Timed timed(const std::function<SuiteReport()>& run) {
  const auto t0 = std::chrono::steady_clock::now();
  Timed t{run(), 0};
  t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return t;
}

std::string failing_checks(const SuiteReport& r) {
  std::string out;
  for (const auto& c : r.checks)
    if (!c.passed) out += " [" + c.name + ": " + c.detail.dump() + "]";
  if (r.extraction_failures) out += " [extraction failures: " + std::to_string(r.extraction_failures) + "]";
  return out;
}

bool line(int n, bool ok, const std::string& what) {
  std::printf("criterion %d: %s %s\n", n, ok ? "PASS" : "FAIL", what.c_str());
  std::fflush(stdout);
  return ok;
}

}  // namespace

int main() {
  constexpr std::uint64_t seed = 1;
  bool all = true;
  std::size_t extractions = 0, extraction_failures = 0;
  auto tally = [&](const SuiteReport& r) {
    extractions += r.extractions;
    extraction_failures += r.extraction_failures;
  };
  char buf[256];

  const Timed steiner = timed([] { return steiner_suite(seed, 500); });
  tally(steiner.report);
  std::snprintf(buf, sizeof buf, "Steiner DP = brute force on 500 graphs (%.1f s, limit 120 s)", steiner.seconds);
  all &= line(1, steiner.report.passed() && steiner.seconds <= 120, buf + failing_checks(steiner.report));

  const Timed toolbox = timed([] { return toolbox_suite(seed, 8); });
  tally(toolbox.report);
  std::snprintf(buf, sizeof buf, "toolbox over all trees <= 8 vertices (%.1f s, limit 300 s)", toolbox.seconds);
  all &= line(2, toolbox.report.passed() && toolbox.seconds <= 300, buf + failing_checks(toolbox.report));

  const Timed trees = timed([] { return trees_suite(seed, 300); });
  tally(trees.report);
  std::snprintf(buf, sizeof buf, "300 tree instances, tree hosts admit no 3..6-leaf shortcut tree (%.1f s)", trees.seconds);
  all &= line(3, trees.report.passed(), buf + failing_checks(trees.report));

  const Timed cycles = timed([] {
    CyclesOptions opt;
    opt.samples = 100;
    opt.max_leaves = 7;
    return cycles_suite(seed, opt);
  });
  tally(cycles.report);
  std::snprintf(buf, sizeof buf, "cycle shortcut trees: <= 6 leaves, five shapes, 6-leaf certificate, no 7-leaf (%.1f s)",
                cycles.seconds);
  all &= line(4, cycles.report.passed(), buf + failing_checks(cycles.report));

  const Timed hierarchy = timed([] { return hierarchy_suite(2, 5); });
  tally(hierarchy.report);
  all &= line(5, hierarchy.report.passed(), "k = 2..5 strict, gaps ((k+1)(k-1), k^2)" + failing_checks(hierarchy.report));

  const Timed k22k = timed([] { return k22k_suite(1, 4, 3); });
  tally(k22k.report);
  all &= line(6, k22k.report.passed(), "K_{2,2k} shortcut trees for k = 1..4, closed forms for k <= 3" +
                                           failing_checks(k22k.report));

  const Timed cyclespace = timed([] { return cyclespace_suite(seed, 200); });
  tally(cyclespace.report);
  std::snprintf(buf, sizeof buf, "200 instances: fully geodesic cycles span, D inside (%.1f s, limit 300 s)",
                cyclespace.seconds);
  all &= line(7, cyclespace.report.passed() && cyclespace.seconds <= 300, buf + failing_checks(cyclespace.report));

  std::snprintf(buf, sizeof buf, "%zu extracted shortcut trees verified, %zu failed", extractions, extraction_failures);
  all &= line(8, extractions > 0 && extraction_failures == 0, buf);

  return all ? 0 : 1;
}
