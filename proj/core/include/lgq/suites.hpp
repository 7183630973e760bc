#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lgq/groebner.hpp"
#include "lgq/report.hpp"

namespace lgq::suites {

struct Context {
  int n = 1;
  /// θ-degree budget for reductions; negative means the engine default.
  int theta_budget = -1;
  gb::Options groebner;
  std::uint64_t seed = 0;
  /// Prefix check ids with "cNN." so a combined report sorts by criterion.
  bool criterion_ids = false;
};

/// One numbered acceptance criterion.
struct Criterion {
  int number = 0;
  std::string title;
  void (*run)(report::Report&, const Context&) = nullptr;
};

void qh_table(report::Report& r, const Context& ctx);
void initial_conditions(report::Report& r, const Context& ctx);
void integration(report::Report& r, const Context& ctx);
void compactification(report::Report& r, const Context& ctx);
void critical_points(report::Report& r, const Context& ctx);
void milnor_basis(report::Report& r, const Context& ctx);
void gauss_manin(report::Report& r, const Context& ctx);
void qh_match(report::Report& r, const Context& ctx);
void v_filtration(report::Report& r, const Context& ctx);
void pairing(report::Report& r, const Context& ctx);
void canonicity(report::Report& r, const Context& ctx);
void tameness(report::Report& r, const Context& ctx);
void properties(report::Report& r, const Context& ctx);
void general_n(report::Report& r, const Context& ctx);

/// Compactification split into the substitution identity and the
/// critical scheme, so `compactify` and `critical` can run them apart.
void compactify_identity(report::Report& r, const Context& ctx);

/// Checks for a single chart (`tame --chart ijk`).
void tameness_chart(report::Report& r, const Context& ctx, const std::string& chart);

/// Reduces a user-supplied class given as text in D1..D_{2n+1} over Q(q).
void reduce_user_class(report::Report& r, const Context& ctx, const std::string& text);

/// The thirteen acceptance criteria in order.
const std::vector<Criterion>& criteria();

/// Runs `c`, turning library errors other than budget exhaustion into a
/// failing check so the remaining criteria still run.
void run_guarded(report::Report& r, const Context& ctx, const Criterion& c);

/// Notes shared by every report.
std::vector<std::string> standard_notes(const std::string& command);

}  // namespace lgq::suites
