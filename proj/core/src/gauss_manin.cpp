#include "lgq/gauss_manin.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <tuple>

#include "lgq/lg_potential.hpp"
#include "lgq/polytext.hpp"
#include "lgq/quadric_qh.hpp"

namespace lgq::gm {

namespace {

const VarSetPtr& Q() { return qh::q_params(); }
RatFunc qv() { return RatFunc::param(Q(), "q"); }
RatFunc zero() { return RatFunc::constant(Q(), BigRat(0)); }

std::string coefficient_text(const RatFunc& c, const std::string& factor) {
  if (factor.empty()) return to_string(c);
  if (c.is_one()) return factor;
  if ((-c).is_one()) return "-" + factor;
  std::string s = to_string(c);
  if (c.num().size() > 1 || !c.den().is_constant()) s = "(" + s + ")";
  return s + "*" + factor;
}

void append_term(std::string& out, const std::string& term) {
  if (!out.empty() && term.front() != '-') out += '+';
  out += term;
}

}  // namespace

// ---------------------------------------------------------------------------
// BasisDecomposition

int BasisDecomposition::theta_degree() const {
  int deg = -1;
  for (const auto& c : coeffs)
    for (std::size_t k = 0; k < c.size(); ++k)
      if (!c[k].is_zero()) deg = std::max(deg, static_cast<int>(k));
  return deg;
}

RatFunc BasisDecomposition::coefficient(std::size_t j, int k) const {
  if (j >= coeffs.size()) throw Error("basis index out of range");
  if (k < 0 || static_cast<std::size_t>(k) >= coeffs[j].size()) return zero();
  return coeffs[j][static_cast<std::size_t>(k)];
}

void BasisDecomposition::add(std::size_t j, int k, const RatFunc& c) {
  if (j >= coeffs.size()) throw Error("basis index out of range");
  auto& v = coeffs[j];
  if (v.size() <= static_cast<std::size_t>(k)) v.resize(static_cast<std::size_t>(k) + 1, zero());
  v[static_cast<std::size_t>(k)] += c;
}

BasisDecomposition BasisDecomposition::shifted(int k) const {
  BasisDecomposition out(rank());
  for (std::size_t j = 0; j < rank(); ++j)
    for (std::size_t e = 0; e < coeffs[j].size(); ++e)
      if (!coeffs[j][e].is_zero()) out.add(j, static_cast<int>(e) + k, coeffs[j][e]);
  return out;
}

bool operator==(const BasisDecomposition& a, const BasisDecomposition& b) {
  if (a.rank() != b.rank()) return false;
  const int deg = std::max(a.theta_degree(), b.theta_degree());
  for (std::size_t j = 0; j < a.rank(); ++j)
    for (int k = 0; k <= deg; ++k)
      if (!(a.coefficient(j, k) == b.coefficient(j, k))) return false;
  return true;
}

std::string to_string(const BasisDecomposition& d) {
  std::string out;
  for (std::size_t j = d.rank(); j-- > 0;)
    for (std::size_t k = 0; k < d.coeffs[j].size(); ++k) {
      const RatFunc& c = d.coeffs[j][k];
      if (c.is_zero()) continue;
      std::string factor = k == 0 ? "" : k == 1 ? "theta*" : "theta^" + std::to_string(k) + "*";
      factor += "w" + std::to_string(j);
      append_term(out, coefficient_text(c, factor));
    }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Engine

namespace {

int floor_mod(int a, int b) { return ((a % b) + b) % b; }

/// Exponent vectors with Σ max(m_v, 0) ≤ degree and m_v ≥ lo[v].
std::vector<Monomial> support_box(const std::vector<int>& lo, int degree) {
  const std::size_t nv = lo.size();
  std::vector<Monomial> out;
  Monomial m(nv);
  std::function<void(std::size_t, int)> rec = [&](std::size_t v, int left) {
    if (v == nv) {
      out.push_back(m);
      return;
    }
    for (int e = lo[v]; e <= left; ++e) {
      m[v] = e;
      rec(v + 1, left - std::max(e, 0));
    }
    m[v] = 0;
  };
  rec(0, degree);
  return out;
}

}  // namespace

struct Engine::Impl {
  int n = 1;
  int wq = 3;
  std::size_t rank = 4;
  VarSetPtr D;
  gb::MonomialOrder order;
  LaurentPoly f;
  std::vector<LaurentPoly> L;
  std::vector<ParamPoly> L1;  // L_i at q = 1

  int weight(const Monomial& m) const {
    int w = 0;
    for (std::size_t i = 0; i < m.size(); ++i) w += static_cast<int>(i + 1) * m[i];
    return w;
  }

  LaurentPoly delta(std::size_t j) const {
    return j == 0 ? LaurentPoly::constant(D, Q(), RatFunc(1)) : LaurentPoly::variable(D, Q(), j - 1);
  }

  /// Weight-homogeneous components of g with q set to 1.
  std::map<int, ParamPoly> dehomogenize(const LaurentPoly& g) const {
    std::map<int, ParamPoly> out;
    for (const auto& [mono, c] : g.terms()) {
      if (c.params() && c.params()->size() > 1) throw UsageError("coefficients may only involve q");
      const ParamPoly& den = c.den();
      if (den.size() != 1) throw UsageError("coefficients must be Laurent polynomials in q, got " + to_string(c));
      const auto& [dm, dc] = den.terms().front();
      const int dq = dm.size() ? dm[0] : 0;
      for (const auto& [nm, nc] : c.num().terms()) {
        const int e = (nm.size() ? nm[0] : 0) - dq;
        const int W = wq * e + weight(mono);
        auto [it, fresh] = out.try_emplace(W, ParamPoly(mono.size()));
        it->second += ParamPoly::term(mono, nc / dc);
      }
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
  }

  RatFunc qpow(int W, int w) const {
    if (floor_mod(W - w, wq) != 0) throw Error("weight is not compatible with a power of q");
    return qv().pow((W - w) / wq);
  }

  LaurentPoly rehomogenize(const ParamPoly& p, int W) const {
    std::vector<CoeffPoly::Term> terms;
    for (const auto& [m, v] : p.terms()) terms.emplace_back(m, RatFunc(v) * qpow(W, weight(m)));
    return LaurentPoly(D, Q(), CoeffPoly::from_terms(D->size(), std::move(terms)));
  }

  struct Chain {
    std::vector<std::vector<BigRat>> c;          // c[k][j]
    std::vector<std::vector<ParamPoly>> h;       // h[k][i]
    std::size_t unknowns = 0, equations = 0;
    bool unique = true;
  };

  std::optional<Chain> solve_chain(const ParamPoly& g, int W, int K, const std::vector<Monomial>& support) const;
  BasisDecomposition reduce_component(const ParamPoly& g, int W, int budget, ReductionStats& st) const;
};

std::optional<Engine::Impl::Chain> Engine::Impl::solve_chain(const ParamPoly& g, int W, int K,
                                                            const std::vector<Monomial>& support) const {
  const std::size_t nv = D->size();
  struct Col {
    int level;
    bool is_c;
    std::size_t index;  // j for c, i for h
    Monomial mono;
  };
  std::vector<Col> cols;
  for (int k = 0; k <= K; ++k)
    for (std::size_t j = 0; j < rank; ++j)
      if (floor_mod(W - k - static_cast<int>(j), wq) == 0) cols.push_back({k, true, j, Monomial(nv)});
  const std::size_t ncols_c = cols.size();
  const bool reversed = order.kind == gb::OrderKind::Lex;
  for (int k = 0; k <= K; ++k)
    for (std::size_t ii = 0; ii < nv; ++ii) {
      const std::size_t i = reversed ? nv - 1 - ii : ii;
      for (const auto& m : support)
        if (floor_mod(weight(m) - (W - k - 1), wq) == 0) cols.push_back({k, false, i, m});
    }

  std::map<std::pair<int, Monomial>, std::size_t> row_of;
  auto row = [&](int level, const Monomial& m) {
    return row_of.try_emplace({level, m}, row_of.size()).first->second;
  };
  std::vector<std::vector<std::pair<std::size_t, BigRat>>> entries(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Col& col = cols[c];
    if (col.is_c) {
      Monomial m(nv);
      if (col.index > 0) m[col.index - 1] = 1;
      entries[c].emplace_back(row(col.level, m), BigRat(1));
      continue;
    }
    for (const auto& [lm, lc] : L1[col.index].terms()) entries[c].emplace_back(row(col.level, col.mono * lm), lc);
    if (col.mono[col.index] != 0) entries[c].emplace_back(row(col.level + 1, col.mono), BigRat(-col.mono[col.index]));
  }
  std::vector<std::pair<std::size_t, BigRat>> rhs;
  for (const auto& [m, v] : g.terms()) rhs.emplace_back(row(0, m), v);

  Matrix<BigRat> A(row_of.size(), cols.size() + 1, BigRat(0));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [r, v] : entries[c]) A(r, c) += v;
  for (const auto& [r, v] : rhs) A(r, cols.size()) += v;
  auto pivots = row_reduce(A);
  if (!pivots.empty() && pivots.back() == cols.size()) return std::nullopt;

  Chain ch;
  ch.unknowns = cols.size();
  ch.equations = row_of.size();
  ch.c.assign(static_cast<std::size_t>(K + 1), std::vector<BigRat>(rank, BigRat(0)));
  ch.h.assign(static_cast<std::size_t>(K + 1), std::vector<ParamPoly>(nv, ParamPoly(nv)));
  std::vector<bool> is_pivot(cols.size(), false);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const std::size_t p = pivots[r];
    is_pivot[p] = true;
    const BigRat& v = A(r, cols.size());
    const Col& col = cols[p];
    if (col.is_c)
      ch.c[static_cast<std::size_t>(col.level)][col.index] = v;
    else if (!v.is_zero())
      ch.h[static_cast<std::size_t>(col.level)][col.index] += ParamPoly::term(col.mono, v);
  }
  for (std::size_t c = 0; c < ncols_c; ++c)
    if (!is_pivot[c]) ch.unique = false;
  for (std::size_t r = 0; r < pivots.size() && ch.unique; ++r) {
    if (pivots[r] >= ncols_c) break;
    for (std::size_t c = ncols_c; c < cols.size(); ++c)
      if (!is_pivot[c] && !A(r, c).is_zero()) {
        ch.unique = false;
        break;
      }
  }
  return ch;
}

BasisDecomposition Engine::Impl::reduce_component(const ParamPoly& g, int W, int budget, ReductionStats& st) const {
  const std::size_t nv = D->size();
  int degree = 0;
  std::vector<int> lo(nv, 0);
  for (const auto& [m, v] : g.terms()) {
    int pos = 0;
    for (std::size_t i = 0; i < nv; ++i) {
      pos += std::max(m[i], 0);
      lo[i] = std::min(lo[i], m[i]);
    }
    degree = std::max(degree, pos);
  }
  const bool has_poles = std::any_of(lo.begin(), lo.end(), [](int e) { return e < 0; });
  std::vector<std::vector<Monomial>> supports{support_box(std::vector<int>(nv, 0), degree)};
  if (has_poles) supports.push_back(support_box(lo, degree));

  for (std::size_t s = 0; s < supports.size(); ++s)
    for (int K = 0; K <= budget; ++K) {
      auto ch = solve_chain(g, W, K, supports[s]);
      if (!ch) continue;
      // Certify the chain over Q(q).
      LaurentPoly target = rehomogenize(g, W);
      BasisDecomposition out(rank);
      for (int k = 0; k <= K; ++k) {
        const auto& ck = ch->c[static_cast<std::size_t>(k)];
        const auto& hk = ch->h[static_cast<std::size_t>(k)];
        LaurentPoly rhs(D, Q());
        for (std::size_t j = 0; j < rank; ++j) {
          if (ck[j].is_zero()) continue;
          RatFunc c = RatFunc(ck[j]) * qpow(W - k, static_cast<int>(j));
          out.add(j, k, c);
          rhs += delta(j) * c;
        }
        LaurentPoly next(D, Q());
        for (std::size_t i = 0; i < nv; ++i) {
          if (hk[i].is_zero()) continue;
          LaurentPoly h = rehomogenize(hk[i], W - k - 1);
          rhs += h * L[i];
          next += log_derivative(h, D->name(i));
        }
        if (!(rhs == target)) throw DivisionFailure("reduction chain failed to verify at θ-degree " + std::to_string(k));
        target = next;
      }
      if (!target.is_zero()) throw DivisionFailure("reduction chain does not close");
      st.levels = std::max(st.levels, K);
      st.unknowns += ch->unknowns;
      st.equations += ch->equations;
      st.laurent_support = st.laurent_support || s > 0;
      st.coefficients_unique = st.coefficients_unique && ch->unique;
      return out;
    }
  throw ResourceBudgetExceeded("no reduction chain of θ-depth at most " + std::to_string(budget) +
                               " for a component of weight " + std::to_string(W));
}

Engine::Engine(int n, gb::MonomialOrder order) {
  auto m = std::make_shared<Impl>();
  lg::TorusPotential tp = lg::build_standard_potential(n);
  m->n = n;
  m->wq = 2 * n + 1;
  m->rank = static_cast<std::size_t>(2 * n + 2);
  m->D = tp.vars;
  m->order = order;
  m->f = tp.f;
  m->L = lg::log_derivatives(tp);
  for (const auto& l : m->L) {
    auto comps = m->dehomogenize(l);
    if (comps.size() != 1 || comps.begin()->first != 1) throw Error("log-derivatives are not of weight one");
    m->L1.push_back(comps.begin()->second);
  }
  impl_ = std::move(m);
}

int Engine::n() const noexcept { return impl_->n; }
std::size_t Engine::rank() const noexcept { return impl_->rank; }
const VarSetPtr& Engine::delta_vars() const noexcept { return impl_->D; }
const gb::MonomialOrder& Engine::order() const noexcept { return impl_->order; }
const LaurentPoly& Engine::potential() const noexcept { return impl_->f; }
const std::vector<LaurentPoly>& Engine::log_forms() const noexcept { return impl_->L; }

BasisDecomposition Engine::reduce_class(const LaurentPoly& g, int budget, ReductionStats* stats) const {
  BrieskornClass c;
  if (!g.is_zero()) c.emplace(0, g);
  return reduce_class(c, budget, stats);
}

BasisDecomposition Engine::reduce_class(const BrieskornClass& cls, int budget, ReductionStats* stats) const {
  const Impl& m = *impl_;
  if (budget < 0) budget = default_budget();
  ReductionStats local;
  ReductionStats& st = stats ? *stats : local;
  BasisDecomposition out(m.rank);
  for (const auto& [k, g] : cls) {
    if (k < 0) throw UsageError("θ-degrees must be nonnegative");
    if (g.is_zero()) continue;
    if (k > budget) throw ResourceBudgetExceeded("class starts beyond the θ-degree budget");
    for (const auto& [W, comp] : m.dehomogenize(g.embed(m.D))) {
      BasisDecomposition part = m.reduce_component(comp, W, budget - k, st).shifted(k);
      for (std::size_t j = 0; j < m.rank; ++j)
        for (std::size_t e = 0; e < part.coeffs[j].size(); ++e)
          if (!part.coeffs[j][e].is_zero()) out.add(j, static_cast<int>(e), part.coeffs[j][e]);
    }
  }
  return out;
}

BasisDecomposition Engine::theta2_dtheta(std::size_t j, int budget) const {
  const Impl& m = *impl_;
  if (j >= m.rank) throw UsageError("basis index out of range");
  return reduce_class(m.f * m.delta(j), budget);
}

ConnectionPair Engine::connection_matrices(int budget) const {
  const std::size_t r = rank();
  ConnectionPair c{RMatrix(r, r, zero()), RMatrix(r, r, zero())};
  for (std::size_t j = 0; j < r; ++j) {
    BasisDecomposition d = theta2_dtheta(j, budget);
    if (d.theta_degree() > 1)
      throw NotBirkhoffForm("θ²∂θ[w" + std::to_string(j) + "] = " + to_string(d) + " has θ-degree above one");
    for (std::size_t i = 0; i < r; ++i) {
      c.A0(i, j) = d.coefficient(i, 0);
      c.Ainf(i, j) = d.coefficient(i, 1);
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Ring identities

std::vector<IdentityCheck> verify_ring_identities() {
  lg::TorusPotential tp = lg::build_standard_potential(1);
  const VarSetPtr& D = tp.vars;
  auto L = lg::log_derivatives(tp);
  auto d = [&](int i) { return LaurentPoly::variable(D, Q(), "D" + std::to_string(i)); };
  auto c = [&](const RatFunc& v) { return LaurentPoly::constant(D, Q(), v); };
  const LaurentPoly q = c(qv());
  std::vector<IdentityCheck> out;
  out.push_back({"identity 1", "f = 3*D1-2*L1-L2", tp.f == c(RatFunc(3)) * d(1) - c(RatFunc(2)) * L[0] - L[1]});
  out.push_back({"identity 2", "D1*D1 = 2*D2+D1*L1", d(1) * d(1) == c(RatFunc(2)) * d(2) + d(1) * L[0]});
  out.push_back({"identity 3", "D1*D2 = (D3+q)+D2*(L1+L2-L3)", d(1) * d(2) == d(3) + q + d(2) * (L[0] + L[1] - L[2])});
  out.push_back({"identity 4", "D1*D3 = q*D1+D3*(L1+L2+L3)-q*(L1+L2-L3)",
                 d(1) * d(3) == q * d(1) + d(3) * (L[0] + L[1] + L[2]) - q * (L[0] + L[1] - L[2])});
  out.push_back({"identity 2 perturbed", "D1*D1 = D2+D1*L1", d(1) * d(1) == d(2) + d(1) * L[0]});
  return out;
}

// ---------------------------------------------------------------------------
// V-filtration

VFiltrationResult v_filtration_gr(const ConnectionPair& c, int p) {
  const std::size_t r = c.A0.rows();
  VFiltrationResult res;
  res.p = p;
  res.N = RMatrix(r, r, zero());
  res.diagonal_cancels = true;
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t m = 0; m < r; ++m) {
      if (m != j && !c.Ainf(m, j).is_zero()) throw Error("A∞ is not diagonal");
      if (m > j + 1 && !c.A0(m, j).is_zero())
        throw Error("A0 has an entry below the subdiagonal; the lattice e_i = τ^i w_i is not stable");
    }
    RatFunc diag = RatFunc(static_cast<long>(j)) - c.Ainf(j, j);
    res.N(j, j) = diag;
    if (!diag.is_zero()) res.diagonal_cancels = false;
    if (j + 1 < r) res.N(j + 1, j) = -c.A0(j + 1, j);
  }
  RMatrix power = RMatrix::identity(r, zero(), RatFunc(1));
  for (std::size_t k = 1; k <= r + 1; ++k) {
    power = power * res.N;
    if (k == 3) res.cube_nonzero = !power.is_zero();
    if (k == 4) res.fourth_power_zero = power.is_zero();
    if (res.nilpotency_index == 0 && power.is_zero()) res.nilpotency_index = k;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Pairing

std::string to_string(const TauPoly& p) {
  std::string out;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    if (it->second.is_zero()) continue;
    std::string factor = it->first == 0 ? "" : it->first == 1 ? "tau" : "tau^" + std::to_string(it->first);
    append_term(out, coefficient_text(it->second, factor));
  }
  return out.empty() ? "0" : out;
}

PairingSolution solve_pairing_constraints(const ConnectionPair& c, int dim) {
  const int r = static_cast<int>(c.A0.rows());
  std::map<std::tuple<int, int, int>, std::size_t> index;
  for (int k = 0; k < r; ++k)
    for (int l = 0; l < r; ++l)
      for (int e = -(k + l); e <= -dim; ++e) index.emplace(std::tuple{k, l, e}, index.size());
  auto lookup = [&](int k, int l, int e) -> std::optional<std::size_t> {
    auto it = index.find({k, l, e});
    if (it == index.end()) return std::nullopt;
    return it->second;
  };

  using Row = std::map<std::size_t, RatFunc>;
  std::vector<Row> rows;
  auto add = [](Row& row, std::size_t var, const RatFunc& v) {
    if (v.is_zero()) return;
    auto [it, fresh] = row.try_emplace(var, v);
    if (!fresh) it->second += v;
  };

  // d/dτ S_kl = −Σ_m (A0_mk + A∞_mk/τ) S_ml + Σ_m (A0_ml − A∞_ml/τ) S_km, one row per τ-power.
  for (int k = 0; k < r; ++k)
    for (int l = 0; l < r; ++l) {
      std::map<int, Row> eqs;
      for (int e = -(k + l); e <= -dim; ++e)
        if (auto v = lookup(k, l, e)) add(eqs[e - 1], *v, RatFunc(e));
      for (int m = 0; m < r; ++m) {
        const RatFunc& a0mk = c.A0(static_cast<std::size_t>(m), static_cast<std::size_t>(k));
        const RatFunc& aimk = c.Ainf(static_cast<std::size_t>(m), static_cast<std::size_t>(k));
        const RatFunc& a0ml = c.A0(static_cast<std::size_t>(m), static_cast<std::size_t>(l));
        const RatFunc& aiml = c.Ainf(static_cast<std::size_t>(m), static_cast<std::size_t>(l));
        for (int e = -(m + l); e <= -dim; ++e)
          if (auto v = lookup(m, l, e)) {
            add(eqs[e], *v, a0mk);
            add(eqs[e - 1], *v, aimk);
          }
        for (int e = -(k + m); e <= -dim; ++e)
          if (auto v = lookup(k, m, e)) {
            add(eqs[e], *v, -a0ml);
            add(eqs[e - 1], *v, aiml);
          }
      }
      for (auto& [t, row] : eqs) rows.push_back(std::move(row));
    }
  // S_kl(τ) = (−1)^dim S_lk(−τ).
  for (const auto& [key, var] : index) {
    auto [k, l, e] = key;
    auto other = lookup(l, k, e);
    Row row;
    add(row, var, RatFunc(1));
    const long sign = ((dim + e) % 2 == 0) ? 1 : -1;
    if (other) add(row, *other, RatFunc(-sign));
    rows.push_back(std::move(row));
  }

  PairingSolution sol;
  sol.unknowns = index.size();
  Matrix<RatFunc> A(rows.size(), index.size(), zero());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [var, v] : rows[i]) A(i, var) += v;
  sol.equations = rank(A);
  auto ns = nullspace(A, zero(), RatFunc(1));
  sol.dimension = ns.size();
  if (sol.dimension != 1) return sol;

  const auto& vec = ns.front();
  sol.S.assign(static_cast<std::size_t>(r), std::vector<TauPoly>(static_cast<std::size_t>(r)));
  for (const auto& [key, var] : index) {
    auto [k, l, e] = key;
    if (!vec[var].is_zero()) sol.S[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)][e] = vec[var];
  }
  sol.only_antidiagonal = true;
  sol.antidiagonal_equal = true;
  sol.antidiagonal_tau_minus3 = true;
  const TauPoly& ref = sol.S[0][static_cast<std::size_t>(r - 1)];
  for (int k = 0; k < r; ++k)
    for (int l = 0; l < r; ++l) {
      const TauPoly& s = sol.S[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
      if (k + l != r - 1) {
        if (!s.empty()) sol.only_antidiagonal = false;
        continue;
      }
      if (s.size() != 1 || s.begin()->first != -dim) sol.antidiagonal_tau_minus3 = false;
      if (s.size() != ref.size()) {
        sol.antidiagonal_equal = false;
        continue;
      }
      for (const auto& [e, v] : s) {
        auto it = ref.find(e);
        if (it == ref.end() || !(it->second == v)) sol.antidiagonal_equal = false;
      }
    }
  return sol;
}

// ---------------------------------------------------------------------------
// Canonicity

namespace {

using QMatrix = Matrix<BigRat>;

/// Columns spanning a subspace of Q^4; an empty matrix is the zero space.
QMatrix span_of(const std::vector<std::size_t>& basis_indices, std::size_t dim) {
  QMatrix m(dim, basis_indices.size(), BigRat(0));
  for (std::size_t c = 0; c < basis_indices.size(); ++c) m(basis_indices[c], c) = BigRat(1);
  return m;
}

QMatrix concat(const QMatrix& a, const QMatrix& b) {
  QMatrix m(a.rows(), a.cols() + b.cols(), BigRat(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
  }
  return m;
}

QMatrix intersect(const QMatrix& a, const QMatrix& b) {
  if (a.cols() == 0 || b.cols() == 0) return QMatrix(a.rows(), 0, BigRat(0));
  QMatrix nb(b.rows(), b.cols(), BigRat(0));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) nb(i, j) = -b(i, j);
  auto ns = nullspace(concat(a, nb), BigRat(0), BigRat(1));
  QMatrix out(a.rows(), ns.size(), BigRat(0));
  for (std::size_t c = 0; c < ns.size(); ++c)
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) out(i, c) += a(i, j) * ns[c][j];
  return out;
}

std::size_t dimension(const QMatrix& m) { return m.cols() == 0 ? 0 : rank(m); }

/// W_k: 0 for k < 0, ⟨e3⟩ for k ∈ {0, 1}, ⟨e2, e3⟩ for {2, 3}, ⟨e1, e2, e3⟩ for {4, 5}, all of H from 6 on.
QMatrix weight_filtration(int k) {
  if (k < 0) return span_of({}, 4);
  if (k <= 1) return span_of({3}, 4);
  if (k <= 3) return span_of({2, 3}, 4);
  if (k <= 5) return span_of({1, 2, 3}, 4);
  return span_of({0, 1, 2, 3}, 4);
}

}  // namespace

CanonicityResult birkhoff_canonicity_check(std::uint64_t seed, std::size_t samples) {
  CanonicityResult res;
  res.seed = seed;
  res.samples = samples;
  res.all_match = samples > 0;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-9, 9), den(1, 7);
  for (std::size_t s = 0; s < samples; ++s) {
    QMatrix A(4, 4, BigRat(0));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t r = i; r < 4; ++r) {
        int v = entry(rng);
        if (r == i && v == 0) v = 1;
        A(r, i) = BigRat(v, den(rng));
      }
    std::vector<SubspaceCheck> checks;
    for (int p = 0; p <= 3; ++p) {
      QMatrix sum(4, 0, BigRat(0));
      for (int qf = 0; qf <= 3; ++qf) {
        std::vector<std::size_t> idx;
        for (int i = 0; i <= 3 - qf; ++i) idx.push_back(static_cast<std::size_t>(i));
        QMatrix conj = A * span_of(idx, 4);
        sum = concat(sum, intersect(conj, weight_filtration(3 + qf - p)));
      }
      std::vector<std::size_t> target_idx;
      for (int i = p; i <= 3; ++i) target_idx.push_back(static_cast<std::size_t>(i));
      QMatrix target = span_of(target_idx, 4);
      SubspaceCheck c;
      c.p = p;
      c.computed_dim = dimension(sum);
      c.matches = c.computed_dim == target.cols() && dimension(concat(sum, target)) == target.cols();
      res.all_match = res.all_match && c.matches;
      checks.push_back(c);
    }
    res.per_sample.push_back(std::move(checks));
  }
  return res;
}

// ---------------------------------------------------------------------------
// Initial conditions

MatchResult initial_conditions_match(const ConnectionPair& c, int n, const PairingSolution* pairing) {
  qh::InitialConditions ic = qh::initial_conditions(n);
  MatchResult res;
  res.a0_matches = true;
  res.ainf_matches = true;
  const std::size_t r = ic.U.rows();
  if (c.A0.rows() != r || c.Ainf.rows() != r) throw Error("connection matrices have the wrong size");
  const RatFunc shift(BigRat(2 * n + 1, 2));
  auto entry = [](const char* name, std::size_t i, std::size_t j) {
    return std::string(name) + "[" + std::to_string(i) + "][" + std::to_string(j) + "]";
  };
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (!(c.A0(i, j) == ic.U(i, j))) {
        res.a0_matches = false;
        res.mismatches.push_back(entry("A0", i, j) + ": expected " + to_string(ic.U(i, j)) + ", got " +
                                 to_string(c.A0(i, j)));
      }
      RatFunc v = -c.Ainf(i, j) + (i == j ? shift : zero());
      if (!(v == ic.V(i, j))) {
        res.ainf_matches = false;
        res.mismatches.push_back(entry("-Ainf+shift", i, j) + ": expected " + to_string(ic.V(i, j)) + ", got " +
                                 to_string(v));
      }
    }
  if (pairing) {
    bool ok = pairing->dimension == 1 && pairing->S.size() == r;
    std::optional<RatFunc> scale;
    for (std::size_t i = 0; ok && i < r; ++i)
      for (std::size_t j = 0; ok && j < r; ++j) {
        const TauPoly& s = pairing->S[i][j];
        if (ic.g(i, j).is_zero()) {
          ok = s.empty();
          continue;
        }
        if (s.size() != 1) {
          ok = false;
          continue;
        }
        RatFunc ratio = s.begin()->second / ic.g(i, j);
        if (!scale) scale = ratio;
        ok = *scale == ratio;
      }
    res.pairing_matches = ok;
  }
  return res;
}

}  // namespace lgq::gm
