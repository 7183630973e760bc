#include "lgq/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "lgq/polytext.hpp"

namespace lgq::report {

namespace {

std::vector<const Check*> sorted(const Report& r) {
  std::vector<const Check*> out;
  for (const auto& c : r.checks) out.push_back(&c);
  std::sort(out.begin(), out.end(), [](const Check* a, const Check* b) { return a->id < b->id; });
  return out;
}

std::string cell(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|')
      out += "\\|";
    else if (c == '\n')
      out += "<br>";
    else
      out += c;
  }
  return out;
}

}  // namespace

void Report::add(Check c) {
  for (const auto& x : checks)
    if (x.id == c.id) throw Error("duplicate check id '" + c.id + "'");
  checks.push_back(std::move(c));
}

Status Report::overall() const {
  for (const auto& c : checks) {
    if (c.status != Status::Fail) continue;
    if (c.experimental && !strict) continue;
    return Status::Fail;
  }
  return Status::Pass;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Source: return "source";
    case Provenance::Trivial: return "trivial";
    case Provenance::Derived: return "derived";
  }
  return "?";
}

NamedMatrix named_matrix(std::string name, const Matrix<RatFunc>& m) {
  NamedMatrix out{std::move(name), {}};
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<std::string> row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(lgq::to_string(m(i, j)));
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::string matrix_text(const Matrix<RatFunc>& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? "," : "") + lgq::to_string(m(i, j));
    s += "]";
  }
  return s + "]";
}

std::string make_run_id(const std::vector<std::string>& canonical_args) {
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& a : canonical_args) {
    for (unsigned char c : a) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= 0xff;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string to_json(const Report& r, const RenderOptions& o) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["version"] = r.version;
  j["run_id"] = r.run_id;
  j["command"] = r.command;
  j["status"] = to_string(r.overall());
  j["strict"] = r.strict;
  j["notes"] = r.notes;
  ordered_json values = ordered_json::object();
  for (const auto& [k, v] : r.values) values[k] = v;
  j["values"] = values;
  ordered_json mats = ordered_json::object();
  for (const auto& m : r.matrices) mats[m.name] = m.rows;
  j["matrices"] = mats;
  ordered_json checks = ordered_json::array();
  for (const Check* c : sorted(r)) {
    ordered_json x;
    x["id"] = c->id;
    x["description"] = c->description;
    x["status"] = to_string(c->status);
    x["expected"] = c->expected;
    x["actual"] = c->actual;
    x["reference"] = c->reference;
    x["provenance"] = to_string(c->provenance);
    if (c->experimental) x["experimental"] = true;
    if (o.timings) x["runtime_ms"] = c->runtime_ms;
    checks.push_back(std::move(x));
  }
  j["checks"] = checks;
  return j.dump(2) + "\n";
}

std::string to_markdown(const Report& r, const RenderOptions& o) {
  std::ostringstream s;
  s << "# lgq " << r.command << "\n\n";
  s << "- version: " << r.version << "\n- run: `" << r.run_id << "`\n- status: **" << to_string(r.overall())
    << "**\n";
  if (r.strict) s << "- strict: yes\n";
  for (const auto& n : r.notes) s << "\n> " << n << "\n";
  if (!r.values.empty()) {
    s << "\n## Values\n\n| name | value |\n|---|---|\n";
    for (const auto& [k, v] : r.values) s << "| " << cell(k) << " | `" << cell(v) << "` |\n";
  }
  for (const auto& m : r.matrices) {
    s << "\n## " << m.name << "\n\n";
    if (m.rows.empty()) continue;
    s << "|";
    for (std::size_t j = 0; j < m.rows.front().size(); ++j) s << " " << j << " |";
    s << "\n|";
    for (std::size_t j = 0; j < m.rows.front().size(); ++j) s << "---|";
    s << "\n";
    for (const auto& row : m.rows) {
      s << "|";
      for (const auto& e : row) s << " " << cell(e) << " |";
      s << "\n";
    }
  }
  s << "\n## Checks\n\n| id | status | expected | actual | reference | provenance |";
  if (o.timings) s << " ms |";
  s << "\n|---|---|---|---|---|---|";
  if (o.timings) s << "---|";
  s << "\n";
  for (const Check* c : sorted(r)) {
    s << "| " << cell(c->id) << " | " << to_string(c->status) << (c->experimental ? " (experimental)" : "") << " | `"
      << cell(c->expected) << "` | `" << cell(c->actual) << "` | " << cell(c->reference) << " | "
      << to_string(c->provenance) << " |";
    if (o.timings) s << " " << c->runtime_ms << " |";
    s << "\n";
  }
  return s.str();
}

}  // namespace lgq::report
