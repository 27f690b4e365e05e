// One line per acceptance criterion; exit 1 if any is red.

#include <chrono>
#include <cstdio>

#include "bzeta/verify.hpp"

int main() {
  using namespace bzeta::verify;
  using clock = std::chrono::steady_clock;
  const std::uint64_t seed = seed_from_env();
  int failed = 0;
  for (const auto& s : suites()) {
    if (!s.criterion) continue;
    const auto t0 = clock::now();
    const Report r = s.run(seed);
    const double secs = std::chrono::duration<double>(clock::now() - t0).count();
    const bool ok = r.ok() && secs < s.budget_s;
    failed += !ok;
    std::printf("[%s] criterion %2d  %-52s %zu/%zu cases, %.3fs (budget %gs)\n", ok ? "PASS" : "FAIL", s.criterion,
                s.title.c_str(), r.passed(), r.cases.size(), secs, s.budget_s);
    for (const auto& c : r.cases)
      if (!c.pass) std::printf("    failed %s: expected %s, got %s\n", c.id.c_str(), c.expected.c_str(), c.actual.c_str());
  }
  std::printf("seed %llu; %d of 10 criteria failed\n", static_cast<unsigned long long>(seed), failed);
  return failed ? 1 : 0;
}
