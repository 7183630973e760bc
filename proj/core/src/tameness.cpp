#include "lgq/tameness.hpp"

#include <map>

#include "lgq/lg_potential.hpp"
#include "lgq/polytext.hpp"
#include "lgq/quadric_qh.hpp"

namespace lgq::tame {

namespace {

const VarSetPtr& Q() { return qh::q_params(); }

const VarSetPtr& QT() {
  static const VarSetPtr p = make_varset({"q", "t"});
  return p;
}

const VarSetPtr& V101_vars() {
  static const VarSetPtr v = make_varset({"xp", "y", "zp"});
  return v;
}

LaurentPoly parse(const std::string& text, const VarSetPtr& vars, const VarSetPtr& params = Q()) {
  return parse_laurent(text, vars, params);
}

std::vector<LaurentPoly> parse_all(const std::vector<std::string>& texts, const VarSetPtr& vars) {
  std::vector<LaurentPoly> out;
  for (const auto& s : texts) out.push_back(parse(s, vars));
  return out;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
  return s;
}

std::string coord_name(char axis, int index) { return index == 0 ? std::string(1, axis) : std::string(1, axis) + "p"; }

struct ExpectedLocus {
  std::string description;
  std::vector<std::string> generators;  // empty list: the locus is empty
};

/// The loci stated in the source analysis, keyed by chart and boundary set.
const std::map<std::pair<std::string, std::string>, ExpectedLocus>& expected_loci() {
  static const std::map<std::pair<std::string, std::string>, ExpectedLocus> table{
      {{"V000", ""}, {"x = 0, z = 0, y = t", {"x", "z", "y-t"}}},
      {{"V010", "yp"}, {"two lines x = yp = 0, z = 0 or z = -1", {"x", "yp", "z^2+z"}}},
      {{"V100", "xp"}, {"empty", {}}},
      {{"V001", "zp"}, {"empty", {}}},
      {{"V011", "yp, zp"}, {"empty", {}}},
      {{"V111", "xp, yp, zp"}, {"empty", {}}},
      {{"V101", "xp, zp"}, {"the line xp = y = zp = 0", {"xp", "y", "zp"}}},
      {{"V110", "xp, yp"}, {"two lines xp = yp = 0, z = 0 or z = -1", {"xp", "yp", "z^2+z"}}},
  };
  return table;
}

std::vector<LaurentPoly> singular_system(const Chart& c, const std::vector<std::string>& boundary, bool with_t) {
  LaurentPoly P = chart_equation(c);
  std::vector<LaurentPoly> gens{P};
  for (const auto& v : c.spatial_vars()) gens.push_back(partial_derivative(P, v));
  if (with_t) gens.push_back(partial_derivative(P, "t"));
  for (const auto& b : boundary) gens.push_back(LaurentPoly::variable(c.vars, Q(), b));
  return gens;
}

}  // namespace

const VarSetPtr& homogeneous_vars() {
  static const VarSetPtr v = make_varset({"x0", "x1", "y0", "y1", "z0", "z1", "t"});
  return v;
}

std::optional<int> pair_degree(const LaurentPoly& p, const std::string& v0, const std::string& v1) {
  const std::size_t a = p.vars()->index_of(v0), b = p.vars()->index_of(v1);
  std::optional<int> deg;
  for (const auto& [m, c] : p.terms()) {
    const int d = m[a] + m[b];
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

HomogSurface homogeneous_equation(bool drop_t) {
  const std::string bracket = drop_t ? "y1*z1+y1*z0" : "y1*z1+y1*z0-t*y0*z0";
  HomogSurface s;
  s.equation = parse("x0*z1*(x1*y1-x0*y0)*(" + bracket + ")+q*z0^2*x1^2*y0^2", homogeneous_vars());
  const char* pairs[3][2] = {{"x0", "x1"}, {"y0", "y1"}, {"z0", "z1"}};
  for (int a = 0; a < 3; ++a) s.bidegree[a] = pair_degree(s.equation, pairs[a][0], pairs[a][1]).value_or(-1);
  return s;
}

RationalExpr g_potential() {
  const Chart c = make_chart(0, 0, 0);
  return RationalExpr(parse("y*(1+z)", c.vars)) +
         RationalExpr(parse("q*x^2", c.vars), parse("(x*y-1)*z", c.vars));
}

ClosureCheck graph_closure_equation() {
  ClosureCheck r;
  r.surface = homogeneous_equation();
  const Chart c = make_chart(0, 0, 0);
  r.affine = dehomogenize(r.surface.equation, c);
  r.restriction_matches = r.affine == parse("z*(x*y-1)*(y*(1+z)-t)+q*x^2", c.vars);

  const RationalExpr t(LaurentPoly::variable(c.vars, Q(), "t"));
  const RationalExpr graph = (t - g_potential()) * RationalExpr(parse("(x*y-1)*z", c.vars));
  r.graph_relation = graph == RationalExpr(-r.affine);

  const RationalExpr ft = lg::compactified_closed_form(1);
  Substitution shift{{"x", RationalExpr(parse("x", c.vars))},
                     {"y", RationalExpr(parse("y", c.vars))},
                     {"z", RationalExpr(parse("z-1", c.vars))}};
  r.shift_identity = substitute(ft, shift, c.vars) == g_potential();

  Substitution scale;
  for (const auto& v : homogeneous_vars()->names())
    scale[v] = RationalExpr(parse(v[0] == 'x' ? "3*" + v : v, homogeneous_vars()));
  r.scaling_degree =
      substitute(r.surface.equation, scale, homogeneous_vars()) == RationalExpr(r.surface.equation.scale(RatFunc(9)));
  return r;
}

std::string Chart::label() const {
  return "V" + std::to_string(i) + std::to_string(j) + std::to_string(k);
}

std::vector<std::string> Chart::spatial_vars() const {
  return {coord_name('x', i), coord_name('y', j), coord_name('z', k)};
}

std::vector<std::string> Chart::boundary_vars() const {
  std::vector<std::string> out;
  if (i == 1) out.push_back("xp");
  if (j == 1) out.push_back("yp");
  if (k == 1) out.push_back("zp");
  return out;
}

Chart make_chart(int i, int j, int k) {
  for (int v : {i, j, k})
    if (v != 0 && v != 1) throw UsageError("chart indices must be 0 or 1");
  Chart c{i, j, k, nullptr};
  auto names = c.spatial_vars();
  names.push_back("t");
  c.vars = make_varset(names);
  return c;
}

Chart parse_chart(const std::string& text) {
  std::string s = text;
  if (!s.empty() && (s[0] == 'V' || s[0] == 'v')) s = s.substr(1);
  if (s.size() != 3 || s.find_first_not_of("01") != std::string::npos)
    throw UsageError("chart must be three binary digits such as 010 (got '" + text + "')");
  return make_chart(s[0] - '0', s[1] - '0', s[2] - '0');
}

std::vector<Chart> all_charts() {
  std::vector<Chart> out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) out.push_back(make_chart(i, j, k));
  return out;
}

LaurentPoly dehomogenize(const LaurentPoly& homogeneous, const Chart& c) {
  const LaurentPoly one = LaurentPoly::constant(c.vars, Q(), RatFunc(1));
  Substitution s;
  const char axes[3] = {'x', 'y', 'z'};
  const int idx[3] = {c.i, c.j, c.k};
  for (int a = 0; a < 3; ++a) {
    const std::string h = std::string(1, axes[a]);
    const LaurentPoly ratio = LaurentPoly::variable(c.vars, Q(), coord_name(axes[a], idx[a]));
    s[h + std::to_string(idx[a])] = RationalExpr(one);
    s[h + std::to_string(1 - idx[a])] = RationalExpr(ratio);
  }
  s["t"] = RationalExpr(LaurentPoly::variable(c.vars, Q(), "t"));
  return substitute(homogeneous, s, c.vars).to_laurent();
}

LaurentPoly chart_equation(const Chart& c) { return dehomogenize(homogeneous_equation().equation, c); }

SingularLocus chart_singular_locus(const Chart& c, const std::vector<std::string>& boundary, bool with_t,
                                   const gb::Options& opts) {
  for (const auto& b : boundary) c.vars->index_of(b);
  SingularLocus r;
  r.chart = c.label();
  r.boundary = boundary;
  r.with_t_derivative = with_t;
  gb::PolyIdeal I(c.vars, Q(), singular_system(c, boundary, with_t));
  gb::GroebnerBasis G = gb::buchberger(I, opts);
  r.empty = G.is_unit();
  r.generators = G.basis();

  auto it = expected_loci().find({r.chart, join(boundary)});
  if (with_t && it != expected_loci().end()) {
    r.expected = it->second.description;
    if (it->second.generators.empty())
      r.matches_expected = r.empty;
    else
      r.matches_expected = !r.empty && gb::same_zero_set(I, gb::PolyIdeal(c.vars, Q(), parse_all(it->second.generators, c.vars)), opts);
  }
  return r;
}

std::vector<SingularLocus> singular_survey(const gb::Options& opts) {
  std::vector<SingularLocus> out;
  for (const auto& c : all_charts()) {
    const auto bv = c.boundary_vars();
    if (bv.empty()) {
      out.push_back(chart_singular_locus(c, {}, true, opts));
      continue;
    }
    for (unsigned mask = 1; mask < (1u << bv.size()); ++mask) {
      std::vector<std::string> b;
      for (std::size_t s = 0; s < bv.size(); ++s)
        if (mask & (1u << s)) b.push_back(bv[s]);
      out.push_back(chart_singular_locus(c, b, true, opts));
    }
  }
  return out;
}

JacobianCheck jacobian_of_change(const Chart& c, const std::vector<LaurentPoly>& new_coords,
                                 const std::vector<LaurentPoly>& locus, const gb::Options& opts) {
  if (new_coords.size() != 3) throw UsageError("a change of coordinates needs three functions");
  const auto sv = c.spatial_vars();
  LaurentPoly m[3][3];
  for (int r = 0; r < 3; ++r)
    for (int s = 0; s < 3; ++s) m[r][s] = partial_derivative(new_coords[r], sv[s]);
  JacobianCheck out;
  out.determinant = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                    m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                    m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  std::vector<LaurentPoly> gens = locus;
  gens.push_back(out.determinant);
  out.nonvanishing = gb::buchberger(gb::PolyIdeal(c.vars, Q(), gens), opts).is_unit();
  return out;
}

RewriteCheck rewritten_equation_check(const Chart& c, const gb::Options& opts) {
  struct Data {
    std::vector<std::string> coords, locus;
    std::string normal_form;
  };
  static const std::map<std::string, Data> table{
      {"V000", {{"x", "y*(1+z)-t", "z*(x*y-1)"}, {"x", "z", "y-t"}, "y1*z1+q*x1^2"}},
      {"V010", {{"x", "yp", "z*(z+1-t*yp)"}, {"x", "yp", "z*(z+1)"}, "z1*(x1-y1)+q*x1^2*y1^2"}},
      {"V110", {{"xp", "yp", "z*(z+1-t*yp)"}, {"xp", "yp", "z*(z+1)"}, "x1*z1*(1-x1*y1)+q*y1^2"}},
  };
  auto it = table.find(c.label());
  if (it == table.end()) throw UsageError("no rewritten equation is recorded for chart " + c.label());
  const Data& d = it->second;

  RewriteCheck r;
  r.chart = c.label();
  r.new_coords = parse_all(d.coords, c.vars);
  static const VarSetPtr nv = make_varset({"x1", "y1", "z1"});
  const LaurentPoly nf = parse(d.normal_form, nv);
  r.normal_form = RationalExpr(nf);
  r.jacobian = jacobian_of_change(c, r.new_coords, parse_all(d.locus, c.vars), opts);
  Substitution s{{"x1", RationalExpr(r.new_coords[0])},
                 {"y1", RationalExpr(r.new_coords[1])},
                 {"z1", RationalExpr(r.new_coords[2])}};
  r.identity_holds = substitute(nf, s, c.vars) == RationalExpr(chart_equation(c));
  r.t_free = !nf.involves("t");
  return r;
}

FiberTotalCheck fiber_vs_total_boundary(const Chart& c, const std::vector<std::string>& boundary,
                                        const gb::Options& opts) {
  FiberTotalCheck r{c.label(), boundary, false};
  gb::PolyIdeal total(c.vars, Q(), singular_system(c, boundary, true));
  gb::PolyIdeal fiber(c.vars, Q(), singular_system(c, boundary, false));
  r.equal = gb::ideals_equal(total, fiber, opts);
  return r;
}

MuCheck mu_constancy_V101(const std::vector<BigRat>& sample_ts, const gb::Options& opts) {
  if (sample_ts.empty()) throw UsageError("at least one sample value of t is required");
  const VarSetPtr& V = V101_vars();
  auto P_text = [](const std::string& t) { return "xp*(y-xp)*(y*(1+zp)-(" + t + ")*zp)+q*zp^2"; };
  constexpr std::size_t k_max = 16;

  auto partials = [&](const LaurentPoly& P) {
    std::vector<LaurentPoly> g;
    for (const auto& v : V->names()) g.push_back(partial_derivative(P, v));
    return g;
  };
  MuCheck r;
  r.ts = sample_ts;
  const LaurentPoly Psym = parse(P_text("t"), V, QT());
  gb::PolyIdeal Isym(V, QT(), partials(Psym));
  r.mu_symbolic = gb::local_dimension_at_origin(Isym, k_max, opts);
  const gb::GroebnerBasis Gsym = gb::local_basis(Isym, r.mu_symbolic, opts);
  const auto stairs_sym = Gsym.staircase();
  auto regular_at = [&](const BigRat& t) {
    for (const auto& b : Gsym.basis())
      for (const auto& [m, c] : b.terms()) try {
          c.specialize(1, t);
        } catch (const PoleAtPoint&) {
          return false;
        }
    return true;
  };

  r.constant = true;
  r.staircases_specialize = true;
  for (const auto& t : sample_ts) {
    const LaurentPoly P = parse(P_text(to_string(t)), V);
    gb::PolyIdeal I(V, Q(), partials(P));
    const std::size_t mu = gb::local_dimension_at_origin(I, k_max, opts);
    r.mu.push_back(mu);
    if (mu != r.mu_symbolic) r.constant = false;
    if (!regular_at(t))
      r.pole_ts.push_back(t);
    else if (gb::local_basis(I, mu, opts).staircase() != stairs_sym)
      r.staircases_specialize = false;
  }
  if (r.mu_symbolic != 4) r.constant = false;

  static const VarSetPtr W = make_varset({"xp", "y"});
  const LaurentPoly A = parse("xp*(y-xp)*(y-t)/(2*q)", W, QT());
  Substitution elim{{"xp", RationalExpr(parse("xp", W, QT()))},
                    {"y", RationalExpr(parse("y", W, QT()))},
                    {"zp", RationalExpr(-A)}};
  auto tilde = [&](const std::string& v) { return substitute(partial_derivative(Psym, v), elim, W).to_laurent(); };
  const LaurentPoly one = LaurentPoly::constant(W, QT(), RatFunc::constant(QT(), BigRat(1)));
  const LaurentPoly t = LaurentPoly::param(W, QT(), "t");
  const LaurentPoly f[4] = {
      parse("y-2*xp", W, QT()),
      parse("y", W, QT()) * (one - A) + t * A,
      parse("xp", W, QT()),
      parse("2*y-xp", W, QT()) * (one - A) + t * A,
  };
  r.factorization_x = tilde("xp") == f[0] * f[1];
  r.factorization_y = tilde("y") == f[2] * f[3];

  auto linear = [&](const LaurentPoly& p, std::size_t v) {
    Monomial m(2);
    m[v] = 1;
    return p.coefficient(m).constant_value();
  };
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      r.pairs.push_back({a + 1, b + 1, linear(f[a], 0) * linear(f[b], 1) - linear(f[a], 1) * linear(f[b], 0)});
  return r;
}

ZCheck z_is_product_check(const gb::Options& opts) {
  const VarSetPtr& H = homogeneous_vars();
  const LaurentPoly full = homogeneous_equation(false).equation;
  const LaurentPoly reduced = homogeneous_equation(true).equation;
  const LaurentPoly boundary = parse("x0*y0*z0", H);
  ZCheck r;
  r.ideals_equal = gb::ideals_equal(gb::PolyIdeal(H, Q(), {full, boundary}), gb::PolyIdeal(H, Q(), {reduced, boundary}), opts);
  r.reduced_t_free = !reduced.involves("t") && !boundary.involves("t");
  r.control_differs = !gb::ideals_equal(gb::PolyIdeal(H, Q(), {full}), gb::PolyIdeal(H, Q(), {reduced}), opts);
  return r;
}

CompatibilityCheck chart_compatibility() {
  CompatibilityCheck r;
  const auto charts = all_charts();
  const char axes[3] = {'x', 'y', 'z'};
  for (std::size_t a = 0; a < charts.size(); ++a)
    for (std::size_t b = a + 1; b < charts.size(); ++b) {
      const Chart& ca = charts[a];
      const Chart& cb = charts[b];
      const int ia[3] = {ca.i, ca.j, ca.k}, ib[3] = {cb.i, cb.j, cb.k};
      const LaurentPoly one = LaurentPoly::constant(ca.vars, Q(), RatFunc(1));
      Substitution s{{"t", RationalExpr(LaurentPoly::variable(ca.vars, Q(), "t"))}};
      LaurentPoly clear = one;
      for (int x = 0; x < 3; ++x) {
        const LaurentPoly va = LaurentPoly::variable(ca.vars, Q(), coord_name(axes[x], ia[x]));
        if (ia[x] == ib[x]) {
          s[coord_name(axes[x], ib[x])] = RationalExpr(va);
        } else {
          s[coord_name(axes[x], ib[x])] = RationalExpr(one, va);
          clear *= va * va;
        }
      }
      ++r.pairs;
      if (substitute(chart_equation(cb), s, ca.vars) * RationalExpr(clear) == RationalExpr(chart_equation(ca)))
        ++r.agreeing;
      else
        r.failures.push_back(ca.label() + "/" + cb.label());
    }
  return r;
}

}  // namespace lgq::tame
