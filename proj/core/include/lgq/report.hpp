#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lgq/matrix.hpp"
#include "lgq/scalar.hpp"

namespace lgq::report {

enum class Status { Pass, Fail, Skipped };

/// Where the expected value of a check comes from: a published statement,
/// a definition, or a consequence computed here.
enum class Provenance { Source, Trivial, Derived };

struct Check {
  std::string id;
  std::string description;
  Status status = Status::Skipped;
  std::string expected;
  std::string actual;
  std::string reference;
  Provenance provenance = Provenance::Source;
  /// Failures do not affect the overall status unless the report is strict.
  bool experimental = false;
  std::int64_t runtime_ms = 0;
};

struct NamedMatrix {
  std::string name;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  std::string version = "0.1.0";
  std::string command;
  std::string run_id;
  bool strict = false;
  std::vector<std::string> notes;
  std::vector<std::pair<std::string, std::string>> values;
  std::vector<NamedMatrix> matrices;
  std::vector<Check> checks;

  /// Throws Error on a duplicate id.
  void add(Check c);
  Status overall() const;
};

std::string to_string(Status s);
std::string to_string(Provenance p);

NamedMatrix named_matrix(std::string name, const Matrix<RatFunc>& m);
/// e.g. [[0,0,0,0],[0,1,0,0],[0,0,2,0],[0,0,0,3]]
std::string matrix_text(const Matrix<RatFunc>& m);

/// FNV-1a of the canonical arguments, as 16 hex digits.
std::string make_run_id(const std::vector<std::string>& canonical_args);

struct RenderOptions {
  bool timings = false;
};

/// Checks sorted by id; runtime_ms present only with timings.
std::string to_json(const Report& r, const RenderOptions& o = {});
std::string to_markdown(const Report& r, const RenderOptions& o = {});

}  // namespace lgq::report
