// Runs every numbered criterion once, prints one PASS/FAIL line each and
// exits nonzero if any required criterion fails or exceeds its time limit.
#include <chrono>
#include <cstdio>
#include <map>

#include "lgq/errors.hpp"
#include "lgq/report.hpp"
#include "lgq/suites.hpp"

namespace {

// Wall-clock limits in milliseconds, keyed by criterion number.
const std::map<int, long> kLimitMs{
    {1, 1000},   {2, 1000},   {3, 10000},  {4, 30000},   {5, 30000},   {6, 60000}, {7, 1000},
    {8, 5000},   {9, 10000},  {10, 5000},  {11, 180000}, {12, 120000}, {13, 300000},
};

constexpr int kExperimental = 13;

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  lgq::suites::Context ctx;
  ctx.criterion_ids = true;
  int failed = 0;

  for (const auto& c : lgq::suites::criteria()) {
    lgq::report::Report r;
    r.command = "acceptance";
    std::string detail;
    const auto t0 = Clock::now();
    try {
      lgq::suites::run_guarded(r, ctx, c);
    } catch (const lgq::ResourceBudgetExceeded& e) {
      detail = std::string("budget exhausted: ") + e.what();
    }
    const long ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    const long limit = kLimitMs.at(c.number);

    std::size_t bad = 0;
    for (const auto& ch : r.checks) {
      if (ch.status != lgq::report::Status::Fail) continue;
      if (++bad == 1 && detail.empty()) detail = "first failing check " + ch.id + ": got " + ch.actual + ", want " + ch.expected;
    }
    if (ms > limit) detail += (detail.empty() ? "" : "; ") + std::string("exceeded ") + std::to_string(limit) + " ms";
    if (r.checks.empty() && detail.empty()) detail = "no checks ran";

    const bool pass = detail.empty();
    const bool fatal = !pass && c.number != kExperimental;
    if (fatal) ++failed;
    std::printf("%s criterion %d: %s (%ld ms, %zu checks, limit %ld ms)%s%s\n", pass ? "PASS" : "FAIL", c.number,
                c.title.c_str(), ms, r.checks.size(), limit, pass ? "" : " :: ", detail.c_str());
    if (!pass && !fatal) std::printf("     criterion %d is experimental; not counted\n", c.number);
  }
  std::printf("%s\n", failed == 0 ? "ALL REQUIRED CRITERIA PASS" : "SOME CRITERIA FAILED");
  return failed == 0 ? 0 : 1;
}
