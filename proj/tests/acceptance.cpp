#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "sympow/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Acceptance suite: one line per criterion"};
  std::uint64_t seed = 0;
  int only = 0;
  app.add_option("--seed", seed, "Seed for the randomized grids");
  app.add_option("--only", only, "Run a single criterion");
  CLI11_PARSE(app, argc, argv);

  int failed = 0;
  for (int id = 1; id <= sympow::acceptance::kCriteria; ++id) {
    if (only != 0 && id != only) continue;
    const auto r = sympow::acceptance::run_criterion(id, seed);
    std::string limit = r.limit_seconds > 0 ? " (limit " + std::to_string(static_cast<int>(r.limit_seconds)) + "s)" : "";
    std::printf("[%s] %2d %-44s %zu/%zu cases  %.3fs%s%s%s\n", r.passed() ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.cases - r.failures, r.cases, r.seconds, limit.c_str(), r.detail.empty() ? "" : "  ",
                r.detail.c_str());
    if (!r.within_limit()) std::printf("     time limit exceeded\n");
    std::fflush(stdout);
    if (!r.passed()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
