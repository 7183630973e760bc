#include "lgq/generators.hpp"

namespace lgq::gen {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

LaurentPoly monomial_term(const VarSetPtr& vars, const VarSetPtr& params, const Monomial& m, const RatFunc& c) {
  return LaurentPoly(vars, params, CoeffPoly::term(m, c));
}

}  // namespace

BigRat small_rat(Rng& rng, int num_bound, int den_bound) {
  return BigRat(uniform(rng, -num_bound, num_bound), uniform(rng, 1, den_bound));
}

BigRat nonzero_rat(Rng& rng, int num_bound, int den_bound) {
  int a = 0;
  while (a == 0) a = uniform(rng, -num_bound, num_bound);
  return BigRat(a, uniform(rng, 1, den_bound));
}

RatFunc coefficient(Rng& rng, const VarSetPtr& params) {
  RatFunc c = RatFunc::constant(params, nonzero_rat(rng));
  if (params && params->find("q") && uniform(rng, 0, 2) == 0)
    c = c * RatFunc::param(params, "q").pow(uniform(rng, -2, 2));
  return c;
}

LaurentPoly laurent(Rng& rng, const VarSetPtr& vars, const VarSetPtr& params, int terms, int lo, int hi) {
  LaurentPoly p(vars, params);
  const int count = uniform(rng, 1, terms);
  for (int t = 0; t < count; ++t) {
    Monomial m(vars->size());
    for (std::size_t v = 0; v < vars->size(); ++v) m[v] = uniform(rng, lo, hi);
    p += monomial_term(vars, params, m, coefficient(rng, params));
  }
  return p;
}

LaurentPoly polynomial(Rng& rng, const VarSetPtr& vars, const VarSetPtr& params, int terms, int degree) {
  LaurentPoly p(vars, params);
  const int count = uniform(rng, 1, terms);
  for (int t = 0; t < count; ++t) {
    Monomial m(vars->size());
    int left = uniform(rng, 0, degree);
    for (std::size_t v = 0; v < vars->size() && left > 0; ++v) {
      m[v] = uniform(rng, 0, left);
      left -= m[v];
    }
    p += monomial_term(vars, params, m, coefficient(rng, params));
  }
  return p;
}

gb::PolyIdeal zero_dimensional_ideal(Rng& rng, const VarSetPtr& vars, const VarSetPtr& params, int max_degree) {
  std::vector<LaurentPoly> gens;
  for (std::size_t v = 0; v < vars->size(); ++v) {
    const int d = uniform(rng, 1, max_degree);
    Monomial m(vars->size());
    m[v] = d;
    LaurentPoly g = monomial_term(vars, params, m, RatFunc::constant(params, BigRat(1)));
    if (d > 1) g += polynomial(rng, vars, params, 3, d - 1);
    gens.push_back(g);
  }
  LaurentPoly extra = polynomial(rng, vars, params, 3, max_degree);
  if (!extra.is_zero()) gens.push_back(extra);
  return gb::PolyIdeal(vars, params, gens);
}

gb::PolyIdeal small_ideal(Rng& rng, const VarSetPtr& vars, const VarSetPtr& params, int degree) {
  std::vector<LaurentPoly> gens;
  const int count = uniform(rng, 1, 3);
  for (int i = 0; i < count; ++i) {
    LaurentPoly g = polynomial(rng, vars, params, 3, degree);
    if (!g.is_zero()) gens.push_back(g);
  }
  return gb::PolyIdeal(vars, params, gens);
}

}  // namespace lgq::gen
