#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "mapenum/verify.hpp"

using namespace mapenum;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> suites;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Wick expectation of (Tr M^3)^2", {"wick"}},
      {2, "tetravalent rooted maps", {"tetravalent"}},
      {3, "trivalent rooted maps", {"trivalent"}},
      {4, "Eulerian counting formula", {"eulerian"}},
      {5, "topological expansion", {"topological"}},
      {6, "connected and disconnected maps", {"connected"}},
      {7, "symmetry census", {"symmetry"}},
      {8, "solver cross-validation", {"solver", "master-equation", "resolvent"}},
      {9, "two-point function", {"twopoint"}},
      {10, "blossom and well-labeled trees", {"bijections"}},
  };
  VerifyOptions options;
  options.enumeration.max_edges = 6;

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<CheckResult> results;
    for (const auto& suite : c.suites) {
      auto r = run_checks(suite_checks(suite, options));
      results.insert(results.end(), r.begin(), r.end());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = all_passed(results);
    if (!ok) ++failed;
    std::printf("%s criterion %d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", c.number, c.title.c_str(), secs);
    for (const auto& r : results)
      if (!r.passed) std::printf("    failed %s / %s: %s\n", r.suite.c_str(), r.name.c_str(), r.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
