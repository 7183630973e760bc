#include "lgq/groebner.hpp"

#include <algorithm>
#include <functional>

namespace lgq::gb {

namespace {

using Term = CoeffPoly::Term;

std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  std::int64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  for (std::size_t i = hi; i-- > lo;)
    if (a[i] != b[i]) return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

/// Polynomial stored with terms in increasing order, so the leading term is
/// the last element.
struct GPoly {
  std::vector<Term> t;

  bool empty() const noexcept { return t.empty(); }
  const Monomial& lm() const { return t.back().first; }
  const RatFunc& lc() const { return t.back().second; }
};

struct Ring {
  std::size_t nvars;
  MonomialOrder order;

  bool less(const Monomial& a, const Monomial& b) const { return order.compare(a, b) < 0; }

  GPoly from(const LaurentPoly& p) const {
    GPoly g;
    g.t = p.terms();
    std::sort(g.t.begin(), g.t.end(), [this](const Term& x, const Term& y) { return less(x.first, y.first); });
    return g;
  }

  LaurentPoly to(const GPoly& g, const VarSetPtr& vars, const VarSetPtr& params) const {
    return LaurentPoly(vars, params, CoeffPoly::from_terms(nvars, g.t));
  }

  /// p − c·m·q.
  GPoly sub_mul(const GPoly& p, const Monomial& m, const RatFunc& c, const GPoly& q) const {
    GPoly r;
    r.t.reserve(p.t.size() + q.t.size());
    std::size_t i = 0, j = 0;
    while (i < p.t.size() || j < q.t.size()) {
      if (j == q.t.size()) {
        r.t.push_back(p.t[i++]);
        continue;
      }
      Monomial qm = q.t[j].first * m;
      if (i == p.t.size() || less(qm, p.t[i].first)) {
        r.t.emplace_back(qm, -(c * q.t[j].second));
        ++j;
        continue;
      }
      if (qm == p.t[i].first) {
        RatFunc v = p.t[i].second - c * q.t[j].second;
        if (!v.is_zero()) r.t.emplace_back(qm, std::move(v));
        ++i;
        ++j;
      } else {
        r.t.push_back(p.t[i++]);
      }
    }
    return r;
  }

  GPoly scale(const GPoly& p, const RatFunc& c) const {
    GPoly r;
    r.t.reserve(p.t.size());
    for (const auto& [m, v] : p.t) r.t.emplace_back(m, v * c);
    return r;
  }

  GPoly mul_term(const GPoly& p, const Monomial& m, const RatFunc& c) const {
    GPoly r;
    r.t.reserve(p.t.size());
    for (const auto& [pm, v] : p.t) r.t.emplace_back(pm * m, v * c);
    return r;
  }

  /// Σ a·b for a quotient a and cofactor b.
  GPoly mul(const GPoly& a, const GPoly& b) const {
    GPoly acc;
    for (const auto& [m, c] : a.t) acc = sub_mul(acc, m, -c, b);
    return acc;
  }

  GPoly unit(const RatFunc& c) const {
    GPoly g;
    if (!c.is_zero()) g.t.emplace_back(Monomial(nvars), c);
    return g;
  }

  /// Full reduction of p by the monic polynomials `divs`. When `quot` is
  /// given, records the quotient for each divisor (increasing order).
  GPoly reduce(GPoly p, const std::vector<const GPoly*>& divs, std::vector<GPoly>* quot,
               std::size_t* steps = nullptr) const {
    if (quot) quot->assign(divs.size(), GPoly{});
    std::vector<Term> rem;
    while (!p.empty()) {
      const Monomial lt = p.lm();
      std::size_t k = divs.size();
      for (std::size_t j = 0; j < divs.size(); ++j)
        if (divs[j]->lm().divides(lt)) {
          k = j;
          break;
        }
      if (k == divs.size()) {
        rem.push_back(std::move(p.t.back()));
        p.t.pop_back();
        continue;
      }
      Monomial m = lt / divs[k]->lm();
      RatFunc c = p.lc();
      if (quot) (*quot)[k].t.emplace_back(m, c);
      GPoly head;
      head.t.assign(p.t.begin(), p.t.end() - 1);
      GPoly tail = *divs[k];
      tail.t.pop_back();
      p = sub_mul(head, m, c, tail);
      if (steps) ++*steps;
    }
    if (quot)
      for (auto& q : *quot) std::reverse(q.t.begin(), q.t.end());
    std::reverse(rem.begin(), rem.end());
    return GPoly{std::move(rem)};
  }
};

struct Elem {
  GPoly p;
  std::size_t sugar = 0;
  bool active = false;
  std::vector<GPoly> cof;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::size_t sugar;
};

std::size_t degree_of(const Monomial& m) { return static_cast<std::size_t>(m.degree()); }

std::string fresh_name(const VarSet& vars, const std::string& base) {
  std::string name = base;
  while (vars.find(name)) name += "_";
  return name;
}

}  // namespace

// ---------------------------------------------------------------------------

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind) {
    case OrderKind::Lex:
      return a <=> b;
    case OrderKind::GRevLex:
      return grevlex_range(a, b, 0, a.size());
    case OrderKind::Block: {
      const std::size_t k = std::min(block, a.size());
      auto r = grevlex_range(a, b, 0, k);
      if (r != 0) return r;
      return grevlex_range(a, b, k, a.size());
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::name() const {
  switch (kind) {
    case OrderKind::Lex:
      return "lex";
    case OrderKind::GRevLex:
      return "grevlex";
    case OrderKind::Block:
      return "block(" + std::to_string(block) + ")";
  }
  return "?";
}

PolyIdeal::PolyIdeal(VarSetPtr vars, VarSetPtr params, std::vector<LaurentPoly> generators, MonomialOrder order)
    : vars_(std::move(vars)), params_(std::move(params)), gens_(std::move(generators)), order_(order) {
  if (!vars_) throw VarSetMismatch("ideal without variables");
  for (auto& g : gens_) {
    if (!same_varset(g.vars(), vars_)) g = g.embed(vars_);
    if (g.is_zero()) throw Error("zero generator in ideal");
    if (!g.is_polynomial()) throw Error("ideal generator has negative exponents");
  }
}

PolyIdeal PolyIdeal::plus(const std::vector<LaurentPoly>& extra) const {
  std::vector<LaurentPoly> g = gens_;
  g.insert(g.end(), extra.begin(), extra.end());
  return PolyIdeal(vars_, params_, std::move(g), order_);
}

struct Impl {
  VarSetPtr vars;
  VarSetPtr params;
  MonomialOrder order;
  std::size_t ngens = 0;
  bool tracked = false;
  std::vector<GPoly> g;
  std::vector<std::vector<GPoly>> cof;
  std::vector<LaurentPoly> basis;
  Stats stats;

  Ring ring() const { return Ring{vars->size(), order}; }
  std::vector<const GPoly*> divisors() const {
    std::vector<const GPoly*> d;
    for (const auto& p : g) d.push_back(&p);
    return d;
  }
};

GroebnerBasis buchberger(const PolyIdeal& ideal, const Options& options) {
  auto impl = std::make_shared<Impl>();
  impl->vars = ideal.vars();
  impl->params = ideal.params();
  impl->order = ideal.order();
  impl->ngens = ideal.generators().size();
  impl->tracked = options.track_cofactors;
  const Ring R = impl->ring();
  const bool track = options.track_cofactors;
  const std::size_t m = impl->ngens;
  Stats& stats = impl->stats;

  std::vector<Elem> elems;
  std::vector<Pair> pairs;

  auto active_divs = [&](std::vector<std::size_t>& idx) {
    std::vector<const GPoly*> d;
    idx.clear();
    for (std::size_t k = 0; k < elems.size(); ++k)
      if (elems[k].active) {
        d.push_back(&elems[k].p);
        idx.push_back(k);
      }
    return d;
  };

  // Reduces `p` (with cofactors `cof`) and, if nonzero, inserts it.
  auto insert = [&](GPoly p, std::vector<GPoly> cof, std::size_t sugar) {
    std::vector<std::size_t> idx;
    auto divs = active_divs(idx);
    std::vector<GPoly> quot;
    GPoly r = R.reduce(std::move(p), divs, track ? &quot : nullptr, &stats.reductions);
    if (r.empty()) return;
    if (track)
      for (std::size_t k = 0; k < divs.size(); ++k) {
        if (quot[k].empty()) continue;
        for (std::size_t i = 0; i < m; ++i) cof[i] = R.sub_mul(cof[i], Monomial(R.nvars), RatFunc(1), R.mul(quot[k], elems[idx[k]].cof[i]));
      }
    RatFunc inv = r.lc().inverse();
    r = R.scale(r, inv);
    if (track)
      for (auto& c : cof) c = R.scale(c, inv);

    const std::size_t h = elems.size();
    elems.push_back(Elem{std::move(r), sugar, false, std::move(cof)});
    const Monomial lh = elems[h].p.lm();

    // Gebauer–Möller update.
    std::vector<std::size_t> cands;
    std::vector<Monomial> lcms;
    for (std::size_t k = 0; k < h; ++k)
      if (elems[k].active) {
        cands.push_back(k);
        lcms.push_back(Monomial::lcm(lh, elems[k].p.lm()));
      }
    std::vector<std::size_t> kept;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      bool keep = lh.coprime(elems[cands[a]].p.lm());
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < cands.size() && keep; ++b)
          if (lcms[b].divides(lcms[a])) keep = false;
        for (std::size_t b : kept)
          if (keep && lcms[b].divides(lcms[a])) keep = false;
      }
      if (keep)
        kept.push_back(a);
      else
        ++stats.pairs_pruned;
    }
    std::vector<Pair> next;
    next.reserve(pairs.size() + kept.size());
    for (auto& pr : pairs) {
      if (lh.divides(pr.lcm) && Monomial::lcm(elems[pr.i].p.lm(), lh) != pr.lcm &&
          Monomial::lcm(elems[pr.j].p.lm(), lh) != pr.lcm) {
        ++stats.pairs_pruned;
        continue;
      }
      next.push_back(std::move(pr));
    }
    for (std::size_t a : kept) {
      std::size_t k = cands[a];
      if (lh.coprime(elems[k].p.lm())) {
        ++stats.pairs_pruned;
        continue;
      }
      const Monomial& L = lcms[a];
      std::size_t s = std::max(elems[k].sugar + degree_of(L) - degree_of(elems[k].p.lm()),
                               elems[h].sugar + degree_of(L) - degree_of(lh));
      next.push_back(Pair{k, h, L, s});
    }
    pairs = std::move(next);
    for (std::size_t k = 0; k < h; ++k)
      if (elems[k].active && lh.divides(elems[k].p.lm())) elems[k].active = false;
    elems[h].active = true;
  };

  // Small leading monomials first: later generators then reduce against them.
  std::vector<std::size_t> input(m);
  std::vector<GPoly> lead(m);
  for (std::size_t i = 0; i < m; ++i) {
    input[i] = i;
    lead[i] = R.from(ideal.generators()[i]);
  }
  std::stable_sort(input.begin(), input.end(), [&](std::size_t a, std::size_t b) {
    if (lead[a].empty() || lead[b].empty()) return !lead[a].empty() < !lead[b].empty();
    return R.less(lead[a].lm(), lead[b].lm());
  });
  for (std::size_t i : input) {
    const LaurentPoly& gen = ideal.generators()[i];
    std::vector<GPoly> cof;
    if (track) {
      cof.assign(m, GPoly{});
      cof[i] = R.unit(RatFunc(1));
    }
    insert(R.from(gen), std::move(cof), static_cast<std::size_t>(gen.poly().total_degree()));
  }

  while (!pairs.empty()) {
    auto best = pairs.begin();
    for (auto it = pairs.begin() + 1; it != pairs.end(); ++it) {
      if (it->sugar != best->sugar) {
        if (it->sugar < best->sugar) best = it;
        continue;
      }
      auto c = R.order.compare(it->lcm, best->lcm);
      if (c < 0 || (c == 0 && std::tie(it->j, it->i) < std::tie(best->j, best->i))) best = it;
    }
    Pair pr = *best;
    pairs.erase(best);
    if (++stats.pairs_processed > options.max_pairs)
      throw ResourceBudgetExceeded("Groebner pair budget of " + std::to_string(options.max_pairs) + " exhausted");

    const Elem& a = elems[pr.i];
    const Elem& b = elems[pr.j];
    Monomial ma = pr.lcm / a.p.lm();
    Monomial mb = pr.lcm / b.p.lm();
    GPoly s = R.sub_mul(R.mul_term(a.p, ma, RatFunc(1)), mb, RatFunc(1), b.p);
    std::vector<GPoly> cof;
    if (track) {
      cof.resize(m);
      for (std::size_t i = 0; i < m; ++i) cof[i] = R.sub_mul(R.mul_term(a.cof[i], ma, RatFunc(1)), mb, RatFunc(1), b.cof[i]);
    }
    insert(std::move(s), std::move(cof), pr.sugar);
  }

  // Minimal basis, sorted, then tail-reduced.
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < elems.size(); ++k)
    if (elems[k].active) order.push_back(k);
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return R.less(elems[x].p.lm(), elems[y].p.lm()); });
  for (std::size_t k : order) {
    impl->g.push_back(std::move(elems[k].p));
    if (track) impl->cof.push_back(std::move(elems[k].cof));
  }
  for (std::size_t k = 0; k < impl->g.size(); ++k) {
    std::vector<const GPoly*> others;
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < impl->g.size(); ++j)
      if (j != k) {
        others.push_back(&impl->g[j]);
        idx.push_back(j);
      }
    std::vector<GPoly> quot;
    GPoly r = R.reduce(impl->g[k], others, track ? &quot : nullptr, &stats.reductions);
    if (track)
      for (std::size_t j = 0; j < others.size(); ++j) {
        if (quot[j].empty()) continue;
        for (std::size_t i = 0; i < m; ++i)
          impl->cof[k][i] = R.sub_mul(impl->cof[k][i], Monomial(R.nvars), RatFunc(1), R.mul(quot[j], impl->cof[idx[j]][i]));
      }
    impl->g[k] = std::move(r);
  }
  for (const auto& p : impl->g) impl->basis.push_back(R.to(p, impl->vars, impl->params));

  GroebnerBasis out;
  out.impl_ = std::move(impl);
  return out;
}

const VarSetPtr& GroebnerBasis::vars() const noexcept { return impl_->vars; }
const VarSetPtr& GroebnerBasis::params() const noexcept { return impl_->params; }
const MonomialOrder& GroebnerBasis::order() const noexcept { return impl_->order; }
const std::vector<LaurentPoly>& GroebnerBasis::basis() const noexcept { return impl_->basis; }
const Stats& GroebnerBasis::stats() const noexcept { return impl_->stats; }
bool GroebnerBasis::tracks_cofactors() const noexcept { return impl_->tracked; }

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& p : impl_->g) out.push_back(p.lm());
  return out;
}

bool GroebnerBasis::is_unit() const { return impl_->g.size() == 1 && impl_->g[0].lm().is_one(); }

LaurentPoly GroebnerBasis::normal_form(const LaurentPoly& p) const {
  LaurentPoly q = same_varset(p.vars(), impl_->vars) ? p : p.embed(impl_->vars);
  if (!q.is_polynomial()) throw Error("normal form of a polynomial with negative exponents");
  const Ring R = impl_->ring();
  return R.to(R.reduce(R.from(q), impl_->divisors(), nullptr), impl_->vars, impl_->params);
}

std::vector<LaurentPoly> GroebnerBasis::lift(const LaurentPoly& p) const {
  if (!impl_->tracked) throw Error("lift requires a basis computed with cofactor tracking");
  LaurentPoly q = same_varset(p.vars(), impl_->vars) ? p : p.embed(impl_->vars);
  if (!q.is_polynomial()) throw Error("lift of a polynomial with negative exponents");
  const Ring R = impl_->ring();
  std::vector<GPoly> quot;
  GPoly r = R.reduce(R.from(q), impl_->divisors(), &quot);
  if (!r.empty()) throw Error("polynomial is not in the ideal");
  std::vector<GPoly> acc(impl_->ngens);
  for (std::size_t k = 0; k < quot.size(); ++k) {
    if (quot[k].empty()) continue;
    for (std::size_t i = 0; i < impl_->ngens; ++i)
      acc[i] = R.sub_mul(acc[i], Monomial(R.nvars), RatFunc(-1), R.mul(quot[k], impl_->cof[k][i]));
  }
  std::vector<LaurentPoly> out;
  out.reserve(acc.size());
  for (const auto& a : acc) out.push_back(R.to(a, impl_->vars, impl_->params));
  return out;
}

std::optional<std::size_t> GroebnerBasis::quotient_dimension() const {
  if (is_unit()) return 0;
  const std::size_t n = impl_->vars->size();
  for (std::size_t i = 0; i < n; ++i) {
    bool found = false;
    for (const auto& p : impl_->g) {
      const Monomial& lm = p.lm();
      bool pure = lm[i] > 0;
      for (std::size_t j = 0; j < n && pure; ++j)
        if (j != i && lm[j] != 0) pure = false;
      if (pure) found = true;
    }
    if (!found) return std::nullopt;
  }
  return staircase().size();
}

std::vector<Monomial> GroebnerBasis::staircase() const {
  if (is_unit()) return {};
  const std::size_t n = impl_->vars->size();
  std::vector<std::int32_t> bound(n, -1);
  for (const auto& p : impl_->g) {
    const Monomial& lm = p.lm();
    std::size_t nz = 0, var = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (lm[j] != 0) {
        ++nz;
        var = j;
      }
    if (nz == 1 && (bound[var] < 0 || lm[var] < bound[var])) bound[var] = lm[var];
  }
  for (auto b : bound)
    if (b < 0) throw Error("quotient is infinite-dimensional");
  const auto lms = leading_monomials();
  std::vector<Monomial> out;
  Monomial cur(n);
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    for (const auto& lm : lms)
      if (lm.divides(cur)) return;
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (std::int32_t e = 0; e < bound[i]; ++e) {
      cur[i] = e;
      walk(i + 1);
    }
    cur[i] = 0;
  };
  walk(0);
  const Ring R = impl_->ring();
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return R.less(a, b); });
  return out;
}

std::vector<LaurentPoly> GroebnerBasis::s_polynomial_remainders() const {
  const Ring R = impl_->ring();
  std::vector<LaurentPoly> out;
  const auto divs = impl_->divisors();
  for (std::size_t i = 0; i < impl_->g.size(); ++i)
    for (std::size_t j = i + 1; j < impl_->g.size(); ++j) {
      const GPoly& a = impl_->g[i];
      const GPoly& b = impl_->g[j];
      Monomial L = Monomial::lcm(a.lm(), b.lm());
      GPoly s = R.sub_mul(R.mul_term(a, L / a.lm(), RatFunc(1)), L / b.lm(), RatFunc(1), b);
      out.push_back(R.to(R.reduce(std::move(s), divs, nullptr), impl_->vars, impl_->params));
    }
  return out;
}

LaurentPoly normal_form(const LaurentPoly& p, const GroebnerBasis& gb) { return gb.normal_form(p); }

std::optional<std::size_t> quotient_dimension(const GroebnerBasis& gb) { return gb.quotient_dimension(); }

// ---------------------------------------------------------------------------

namespace {

/// Computes a basis in `vars_front ∪ ideal.vars` with the first `k`
/// variables eliminated and returns the elements free of them, expressed
/// over the original variable set.
PolyIdeal eliminate_front(const PolyIdeal& ideal, const VarSetPtr& big, std::size_t k,
                          std::vector<LaurentPoly> gens, const Options& options) {
  GroebnerBasis g = buchberger(PolyIdeal(big, ideal.params(), std::move(gens), MonomialOrder::block_order(k)),
                               Options{options.max_pairs, false});
  std::vector<LaurentPoly> kept;
  for (const auto& p : g.basis()) {
    bool free = true;
    for (std::size_t i = 0; i < k && free; ++i)
      if (p.poly().involves(i)) free = false;
    if (free) kept.push_back(p.embed(ideal.vars()));
  }
  return PolyIdeal(ideal.vars(), ideal.params(), std::move(kept), ideal.order());
}

}  // namespace

PolyIdeal saturate(const PolyIdeal& ideal, const LaurentPoly& h, const Options& options) {
  if (h.is_zero()) throw Error("saturation by zero");
  if (h.is_constant()) return ideal;
  std::vector<std::string> names{fresh_name(*ideal.vars(), "w_sat")};
  for (const auto& n : ideal.vars()->names()) names.push_back(n);
  VarSetPtr big = make_varset(names);
  std::vector<LaurentPoly> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.embed(big));
  LaurentPoly w = LaurentPoly::variable(big, ideal.params(), std::size_t{0});
  gens.push_back(w * h.embed(big) - LaurentPoly::constant(big, ideal.params(), RatFunc(1)));
  return eliminate_front(ideal, big, 1, std::move(gens), options);
}

PolyIdeal eliminate(const PolyIdeal& ideal, const std::vector<std::string>& vars, const Options& options) {
  if (vars.empty()) return ideal;
  std::vector<std::string> names = vars;
  for (const auto& n : names) ideal.vars()->index_of(n);
  for (const auto& n : ideal.vars()->names())
    if (std::find(vars.begin(), vars.end(), n) == vars.end()) names.push_back(n);
  VarSetPtr big = make_varset(names);
  std::vector<LaurentPoly> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.embed(big));
  PolyIdeal r = eliminate_front(ideal, big, vars.size(), std::move(gens), options);
  return r;
}

GroebnerBasis local_basis(const PolyIdeal& ideal, std::size_t k, const Options& options) {
  const std::size_t n = ideal.vars()->size();
  std::vector<LaurentPoly> gens;
  for (const auto& g : ideal.generators()) {
    std::vector<Term> low;
    for (const auto& t : g.terms())
      if (t.first.degree() < static_cast<std::int64_t>(k)) low.push_back(t);
    if (!low.empty()) gens.emplace_back(ideal.vars(), ideal.params(), CoeffPoly::from_terms(n, std::move(low)));
  }
  Monomial cur(n);
  std::function<void(std::size_t, std::int32_t)> gen = [&](std::size_t i, std::int32_t left) {
    if (i + 1 == n) {
      cur[i] = left;
      gens.emplace_back(ideal.vars(), ideal.params(), CoeffPoly::term(cur, RatFunc(1)));
      cur[i] = 0;
      return;
    }
    for (std::int32_t e = left; e >= 0; --e) {
      cur[i] = e;
      gen(i + 1, left - e);
    }
    cur[i] = 0;
  };
  gen(0, static_cast<std::int32_t>(k));
  return buchberger(PolyIdeal(ideal.vars(), ideal.params(), std::move(gens), MonomialOrder::grevlex()), options);
}

std::size_t local_dimension_at_origin(const PolyIdeal& ideal, std::size_t k_max, const Options& options) {
  for (const auto& g : ideal.generators())
    if (!g.constant_term().is_zero()) throw OriginNotInVariety("a generator does not vanish at the origin");
  std::optional<std::size_t> prev;
  for (std::size_t k = 1; k <= k_max; ++k) {
    std::size_t d = *local_basis(ideal, k, options).quotient_dimension();
    if (prev && *prev == d) return d;
    prev = d;
  }
  throw NotStabilized("local dimension did not stabilize by k = " + std::to_string(k_max));
}

bool ideals_equal(const PolyIdeal& a, const PolyIdeal& b, const Options& options) {
  GroebnerBasis ga = buchberger(a, options);
  GroebnerBasis gb_ = buchberger(b.with_order(a.order()), options);
  for (const auto& p : b.generators())
    if (!ga.contains(p)) return false;
  for (const auto& p : a.generators())
    if (!gb_.contains(p)) return false;
  return true;
}

bool radical_contains(const PolyIdeal& ideal, const LaurentPoly& p, const Options& options) {
  if (p.is_zero()) return true;
  std::vector<std::string> names = ideal.vars()->names();
  names.push_back(fresh_name(*ideal.vars(), "w_rad"));
  VarSetPtr big = make_varset(names);
  std::vector<LaurentPoly> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.embed(big));
  LaurentPoly w = LaurentPoly::variable(big, ideal.params(), names.size() - 1);
  gens.push_back(LaurentPoly::constant(big, ideal.params(), RatFunc(1)) - w * p.embed(big));
  return buchberger(PolyIdeal(big, ideal.params(), std::move(gens)), options).is_unit();
}

bool same_zero_set(const PolyIdeal& a, const PolyIdeal& b, const Options& options) {
  for (const auto& p : b.generators())
    if (!radical_contains(a, p, options)) return false;
  for (const auto& p : a.generators())
    if (!radical_contains(b, p, options)) return false;
  return true;
}

}  // namespace lgq::gb
