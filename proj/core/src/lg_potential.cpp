#include "lgq/lg_potential.hpp"

#include "lgq/polytext.hpp"

namespace lgq::lg {

namespace {

const VarSetPtr& Q() { return qh::q_params(); }

RatFunc qv() { return RatFunc::param(Q(), "q"); }

void require_n(int n) {
  if (n < 1) throw UsageError("n must be at least 1 (got " + std::to_string(n) + ")");
  if (2 * n + 3 > static_cast<int>(kMaxVars)) throw UsageError("n is too large");
}

std::string dname(int i) { return "D" + std::to_string(i); }

LaurentPoly var(const VarSetPtr& vars, const std::string& name, int power = 1) {
  return LaurentPoly::variable(vars, Q(), name, power);
}

LaurentPoly cst(const VarSetPtr& vars, const RatFunc& c) { return LaurentPoly::constant(vars, Q(), c); }

std::string yname(int n, int k) { return n == 1 ? "y" : "y" + std::to_string(k); }
std::string zname(int n, int k) { return n == 1 ? "z" : "z" + std::to_string(k); }

/// Coefficient c_i of T_i = c_i·D_i/D_{i−1}.
long term_coeff(int n, int i) { return i == n + 1 ? 2 : 1; }

/// T_i for i = 1..2n as Laurent polynomials in D.
std::vector<LaurentPoly> ratio_terms(int n, const VarSetPtr& D) {
  std::vector<LaurentPoly> T;
  T.push_back(var(D, dname(1)));
  for (int i = 2; i <= 2 * n; ++i)
    T.push_back(cst(D, RatFunc(term_coeff(n, i))) * var(D, dname(i)) * var(D, dname(i - 1), -1));
  return T;
}

LaurentPoly last_term(int n, const VarSetPtr& D) {
  LaurentPoly s = var(D, dname(2 * n + 1)) + cst(D, qv());
  return s * s * cst(D, RatFunc(BigRat(1, 2))) * var(D, dname(2 * n), -1) * var(D, dname(2 * n + 1), -1);
}

gb::PolyIdeal saturate_by_factors(gb::PolyIdeal I, const std::vector<LaurentPoly>& factors, const gb::Options& opts) {
  for (const auto& h : factors) I = gb::saturate(I, h, opts);
  return I;
}

}  // namespace

VarSetPtr delta_vars(int n) {
  require_n(n);
  std::vector<std::string> names;
  for (int i = 1; i <= 2 * n + 1; ++i) names.push_back(dname(i));
  return make_varset(names);
}

VarSetPtr y_vars(int n) {
  require_n(n);
  std::vector<std::string> names;
  for (int i = 1; i <= 2 * n + 1; ++i) names.push_back("Y" + std::to_string(i));
  return make_varset(names);
}

VarSetPtr compact_vars(int n) {
  require_n(n);
  std::vector<std::string> names{"x"};
  for (int k = 1; k <= n; ++k) names.push_back(yname(n, k));
  for (int k = 1; k <= n; ++k) names.push_back(zname(n, k));
  return make_varset(names);
}

TorusPotential build_standard_potential(int n) {
  TorusPotential p;
  p.n = n;
  p.vars = delta_vars(n);
  p.terms = ratio_terms(n, p.vars);
  p.terms.push_back(last_term(n, p.vars));
  p.f = LaurentPoly(p.vars, Q());
  for (const auto& t : p.terms) p.f += t;
  return p;
}

RationalExpr potential_in_y(int n) {
  VarSetPtr Y = y_vars(n);
  LaurentPoly sum(Y, Q());
  LaurentPoly prod = cst(Y, RatFunc(1));
  for (int i = 1; i <= 2 * n + 1; ++i) {
    LaurentPoly yi = var(Y, "Y" + std::to_string(i));
    if (i <= 2 * n) sum += yi;
    prod *= yi;
  }
  LaurentPoly s = var(Y, "Y" + std::to_string(2 * n + 1)) + cst(Y, qv());
  return RationalExpr(sum) + RationalExpr(s * s, prod);
}

std::vector<LaurentPoly> log_derivatives(const TorusPotential& f) {
  std::vector<LaurentPoly> out;
  for (int i = 1; i <= 2 * f.n + 1; ++i) out.push_back(log_derivative(f.f, dname(i)));
  return out;
}

std::vector<LaurentPoly> table_log_forms(int n) {
  VarSetPtr D = delta_vars(n);
  auto T = ratio_terms(n, D);
  LaurentPoly last = last_term(n, D);
  std::vector<LaurentPoly> L;
  for (int i = 1; i < 2 * n; ++i) L.push_back(T[i - 1] - T[i]);
  L.push_back(T[2 * n - 1] - last);
  LaurentPoly d = var(D, dname(2 * n + 1));
  LaurentPoly num = d * d - cst(D, qv() * qv());
  L.push_back(num * cst(D, RatFunc(BigRat(1, 2))) * var(D, dname(2 * n), -1) * var(D, dname(2 * n + 1), -1));
  return L;
}

std::vector<LaurentPoly> table_relations(const qh::QhAlgebra& A) {
  VarSetPtr D = delta_vars(A.n);
  auto delta = [&](std::size_t i) { return i == 0 ? cst(D, RatFunc(1)) : var(D, dname(static_cast<int>(i))); };
  std::vector<LaurentPoly> rel;
  for (std::size_t j = 1; j < A.dim; ++j) {
    LaurentPoly r = delta(1) * delta(j);
    for (std::size_t i = 0; i < A.dim; ++i)
      if (!A.M(i, j).is_zero()) r -= cst(D, A.M(i, j)) * delta(i);
    rel.push_back(r);
  }
  return rel;
}

IntegrationResult integrates_table(const TorusPotential& f, const qh::QhAlgebra& A, const gb::Options& opts) {
  if (f.n != A.n) throw UsageError("potential and algebra have different n");
  IntegrationResult res;
  auto L = log_derivatives(f);
  auto expected = table_log_forms(f.n);
  for (std::size_t i = 0; i < L.size(); ++i) res.line_holds.push_back(L[i] == expected[i]);

  std::vector<LaurentPoly> vars_list;
  for (int i = 1; i <= 2 * f.n + 1; ++i) vars_list.push_back(var(f.vars, dname(i)));
  std::vector<LaurentPoly> cleared;
  for (const auto& l : L) cleared.push_back(clear_denominators(l).poly);
  gb::PolyIdeal log_ideal = saturate_by_factors(gb::PolyIdeal(f.vars, Q(), cleared), vars_list, opts);
  gb::PolyIdeal table_ideal = saturate_by_factors(gb::PolyIdeal(f.vars, Q(), table_relations(A)), vars_list, opts);
  res.ideals_equal = gb::ideals_equal(log_ideal, table_ideal, opts);
  res.log_ideal_degree = gb::buchberger(log_ideal, opts).quotient_dimension();
  res.table_ideal_degree = gb::buchberger(table_ideal, opts).quotient_dimension();

  if (f.n == 1) {
    const VarSetPtr& D = f.vars;
    LaurentPoly printed = var(D, "D2") * var(D, "D1", -1) -
                          (var(D, "D3") + cst(D, qv())).pow(2) * cst(D, RatFunc(BigRat(1, 2))) * var(D, "D2", -1) *
                              var(D, "D3", -1);
    auto pts = qh::spectral_points();
    const auto& c = pts[1].coords;
    res.printed_line2_holds = eval_at(printed, std::vector<CubicExt>{c[1], c[2], c[3]}).is_zero();
  }
  return res;
}

RationalExpr compactified_closed_form(int n) {
  VarSetPtr V = compact_vars(n);
  LaurentPoly sum(V, Q());
  LaurentPoly yprod = cst(V, RatFunc(1));
  LaurentPoly zprod = cst(V, RatFunc(1));
  for (int k = 1; k <= n; ++k) {
    LaurentPoly y = var(V, yname(n, k));
    LaurentPoly z = var(V, zname(n, k));
    sum += y * (cst(V, RatFunc(2)) + z);
    yprod *= y;
    zprod *= cst(V, RatFunc(1)) + z;
  }
  LaurentPoly x = var(V, "x");
  LaurentPoly den = (x * yprod - cst(V, RatFunc(1))) * zprod;
  return RationalExpr(sum) + RationalExpr(cst(V, qv()) * x * x, den);
}

CompactifiedPotential compactify(const TorusPotential& f) {
  const int n = f.n;
  CompactifiedPotential c;
  c.n = n;
  c.vars = compact_vars(n);
  const VarSetPtr& V = c.vars;
  const LaurentPoly one = cst(V, RatFunc(1));
  LaurentPoly x = var(V, "x");
  LaurentPoly yprod = one, zprod = one;
  std::vector<LaurentPoly> Y;
  for (int k = 1; k <= n; ++k) {
    LaurentPoly y = var(V, yname(n, k));
    LaurentPoly z = var(V, zname(n, k));
    Y.push_back(y);
    Y.push_back(y * (one + z));
    yprod *= y;
    zprod *= one + z;
  }
  Y.push_back(cst(V, qv()) * (x * yprod - one));
  c.boundary = (x * yprod - one) * zprod;
  for (int i = 1; i <= 2 * n + 1; ++i) c.y_of["Y" + std::to_string(i)] = RationalExpr(Y[static_cast<std::size_t>(i - 1)]);
  LaurentPoly acc = one;
  for (int i = 1; i <= 2 * n; ++i) {
    acc *= Y[static_cast<std::size_t>(i - 1)];
    LaurentPoly d = i >= n + 1 ? acc * cst(V, RatFunc(BigRat(1, 2))) : acc;
    c.delta_of[dname(i)] = RationalExpr(d);
  }
  c.delta_of[dname(2 * n + 1)] = RationalExpr(Y.back());

  c.f = compactified_closed_form(n);
  c.identity_holds = substitute(f.f, c.delta_of, V) == c.f;
  c.y_identity_holds = substitute(potential_in_y(n), c.y_of, V) == c.f;

  // Inverse change: compact coordinates as Laurent polynomials in D.
  const VarSetPtr& D = f.vars;
  auto T = ratio_terms(n, D);
  LaurentPoly tprod = cst(D, RatFunc(1));
  for (int k = 1; k <= n; ++k) {
    const LaurentPoly& odd = T[static_cast<std::size_t>(2 * k - 2)];
    const LaurentPoly& even = T[static_cast<std::size_t>(2 * k - 1)];
    c.compact_of[yname(n, k)] = RationalExpr(odd);
    c.compact_of[zname(n, k)] = RationalExpr(even * odd.pow(-1) - cst(D, RatFunc(1)));
    tprod *= odd;
  }
  c.compact_of["x"] = RationalExpr((var(D, dname(2 * n + 1)) + cst(D, qv())) * cst(D, qv().inverse()) * tprod.pow(-1));

  bool ok = true;
  for (int i = 1; i <= 2 * n + 1; ++i)
    ok = ok && substitute(c.delta_of.at(dname(i)), c.compact_of, D) == RationalExpr(var(D, dname(i)));
  for (const auto& name : V->names()) ok = ok && substitute(c.compact_of.at(name), c.delta_of, V) == RationalExpr(var(V, name));
  c.inverse_identity_holds = ok;
  return c;
}

std::vector<LaurentPoly> partial_numerators(const RationalExpr& f) {
  std::vector<LaurentPoly> out;
  const LaurentPoly& N = f.num();
  const LaurentPoly& D = f.den();
  for (const auto& v : f.vars()->names()) out.push_back(partial_derivative(N, v) * D - N * partial_derivative(D, v));
  return out;
}

CriticalScheme critical_scheme(const CompactifiedPotential& p, const gb::Options& opts) {
  std::vector<LaurentPoly> gens;
  for (auto& g : partial_numerators(p.f))
    if (!g.is_zero()) gens.push_back(clear_denominators(g).poly);
  const VarSetPtr& V = p.vars;
  const LaurentPoly one = cst(V, RatFunc(1));
  LaurentPoly yprod = one;
  std::vector<LaurentPoly> factors;
  for (int k = 1; k <= p.n; ++k) {
    yprod *= var(V, yname(p.n, k));
    factors.push_back(one + var(V, zname(p.n, k)));
  }
  factors.insert(factors.begin(), var(V, "x") * yprod - one);
  gb::PolyIdeal I = saturate_by_factors(gb::PolyIdeal(V, Q(), gens), factors, opts);
  gb::GroebnerBasis G = gb::buchberger(I, opts);
  auto degree = G.quotient_dimension();
  return CriticalScheme{std::move(I), p.boundary, std::move(G), degree};
}

CriticalScheme critical_scheme(const TorusPotential& p, const gb::Options& opts) {
  std::vector<LaurentPoly> gens, factors;
  LaurentPoly prod = cst(p.vars, RatFunc(1));
  for (const auto& name : p.vars->names()) {
    LaurentPoly d = partial_derivative(p.f, name);
    if (!d.is_zero()) gens.push_back(clear_denominators(d).poly);
    factors.push_back(var(p.vars, name));
    prod *= factors.back();
  }
  gb::PolyIdeal I = saturate_by_factors(gb::PolyIdeal(p.vars, Q(), gens), factors, opts);
  gb::GroebnerBasis G = gb::buchberger(I, opts);
  auto degree = G.quotient_dimension();
  return CriticalScheme{std::move(I), prod, std::move(G), degree};
}

CriticalPointsResult verify_critical_points() {
  CompactifiedPotential p = compactify(build_standard_potential(1));
  const VarSetPtr& P = Q();
  auto nums = partial_numerators(p.f);
  auto evaluate = [&](const std::string& label, std::vector<CubicExt> pt) {
    PointEvaluation e;
    e.label = label;
    e.point = pt;
    if (eval_at(p.f.den(), pt).is_zero()) throw PoleAtPoint(label + " lies on the boundary");
    bool zero = true;
    for (const auto& g : nums) {
      e.partials.push_back(eval_at(g, pt));
      zero = zero && e.partials.back().is_zero();
    }
    e.vanishes = zero;
    return e;
  };
  const CubicExt xi = CubicExt::xi(P);
  auto c = [&](long v) { return CubicExt(P, RatFunc(v)); };
  CriticalPointsResult r;
  r.points.push_back(evaluate("P0", {c(0), c(0), c(-2)}));
  r.points.push_back(evaluate("Pi", {c(2) / xi, xi, c(0)}));
  r.probe = evaluate("probe", {c(1), c(2), c(1)});
  // P0 differs from P_i, and λ³ − 4q has nonzero discriminant −27·(4q)².
  bool differ = false;
  for (std::size_t k = 0; k < 3; ++k)
    if (!(r.points[0].point[k] == r.points[1].point[k])) differ = true;
  RatFunc disc = RatFunc(-27) * (RatFunc(4) * qv()).pow(2);
  r.distinct = differ && !disc.is_zero();
  return r;
}

std::vector<RatFunc> staircase_coordinates(const gb::GroebnerBasis& g, const std::vector<Monomial>& stairs,
                                           const LaurentPoly& p) {
  LaurentPoly nf = g.normal_form(p);
  std::vector<RatFunc> out;
  for (const auto& m : stairs) out.push_back(nf.coefficient(m));
  return out;
}

MilnorBasisResult milnor_ring_basis_check(const gb::Options& opts) {
  CompactifiedPotential p = compactify(build_standard_potential(1));
  CriticalScheme cs = critical_scheme(p, opts);
  auto stairs = cs.basis.staircase();
  MilnorBasisResult r;
  for (const auto& m : stairs) r.staircase.push_back(to_string(LaurentPoly(p.vars, Q(), CoeffPoly::term(m, RatFunc(1)))));
  const LaurentPoly one = cst(p.vars, RatFunc(1));
  std::vector<LaurentPoly> el{one, p.delta_of.at("D1").num(), p.delta_of.at("D2").num(), p.delta_of.at("D3").num()};
  auto build = [&](const std::vector<LaurentPoly>& elems) {
    Matrix<RatFunc> m(stairs.size(), elems.size(), RatFunc::constant(Q(), BigRat(0)));
    for (std::size_t j = 0; j < elems.size(); ++j) {
      auto col = staircase_coordinates(cs.basis, stairs, elems[j]);
      for (std::size_t i = 0; i < stairs.size(); ++i) m(i, j) = col[i];
    }
    return m;
  };
  r.coordinates = build(el);
  r.rank = rank(r.coordinates);
  auto shifted = el;
  shifted[3] = shifted[3] + cst(p.vars, qv());
  r.rank_shifted = rank(build(shifted));
  auto replaced = el;
  replaced[2] = el[1] * el[1] * cst(p.vars, RatFunc(BigRat(1, 2)));
  r.rank_replaced = rank(build(replaced));
  return r;
}

}  // namespace lgq::lg
