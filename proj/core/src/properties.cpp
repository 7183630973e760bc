#include "lgq/properties.hpp"

#include <algorithm>
#include <functional>

#include "lgq/gauss_manin.hpp"
#include "lgq/generators.hpp"
#include "lgq/polytext.hpp"
#include "lgq/quadric_qh.hpp"

namespace lgq::props {

namespace {

const VarSetPtr& xy() {
  static const VarSetPtr v = make_varset({"x", "y"});
  return v;
}

const VarSetPtr& xyz() {
  static const VarSetPtr v = make_varset({"x", "y", "z"});
  return v;
}

const VarSetPtr& no_params() {
  static const VarSetPtr p = make_varset(std::vector<std::string>{});
  return p;
}

/// Runs `one` for each case; a case returns an empty string on success and
/// a description otherwise. Library errors count as failures.
Outcome run(const std::string& name, std::uint64_t seed, std::size_t cases,
            const std::function<std::string(gen::Rng&)>& one) {
  Outcome o{name, cases, 0, {}};
  gen::Rng rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    std::string err;
    try {
      err = one(rng);
    } catch (const Error& e) {
      err = e.what();
    }
    if (err.empty()) continue;
    if (o.failures++ == 0) o.first_failure = "case " + std::to_string(i) + ": " + err;
  }
  return o;
}

constexpr int kBudget = 8;

const gm::Engine& engine(bool lex) {
  static const gm::Engine grevlex(1, gb::MonomialOrder::grevlex());
  static const gm::Engine lexe(1, gb::MonomialOrder::lex());
  return lex ? lexe : grevlex;
}

}  // namespace

Outcome groebner_order_invariance(std::uint64_t seed, std::size_t cases) {
  return run("groebner.order_invariance", seed, cases, [](gen::Rng& rng) -> std::string {
    const bool three = rng() % 3 == 0;
    gb::PolyIdeal I = gen::zero_dimensional_ideal(rng, three ? xyz() : xy(), no_params(), three ? 2 : 3);
    auto a = gb::buchberger(I.with_order(gb::MonomialOrder::grevlex())).quotient_dimension();
    auto b = gb::buchberger(I.with_order(gb::MonomialOrder::lex())).quotient_dimension();
    auto c = gb::buchberger(I.with_order(gb::MonomialOrder::block_order(1))).quotient_dimension();
    if (a && a == b && b == c) return {};
    return "quotient dimensions differ between orders";
  });
}

Outcome normal_form_idempotence(std::uint64_t seed, std::size_t cases) {
  return run("groebner.normal_form_idempotent", seed, cases, [](gen::Rng& rng) -> std::string {
    gb::PolyIdeal I = gen::small_ideal(rng, xy(), qh::q_params(), 3);
    auto G = gb::buchberger(I);
    LaurentPoly p = gen::polynomial(rng, xy(), qh::q_params(), 5, 4);
    LaurentPoly r = G.normal_form(p);
    if (!(G.normal_form(r) == r)) return "NF(NF(p)) != NF(p) for p = " + to_string(p);
    if (!G.contains(p - r)) return "p - NF(p) not in the ideal for p = " + to_string(p);
    return {};
  });
}

Outcome s_polynomials_reduce_to_zero(std::uint64_t seed, std::size_t cases) {
  return run("groebner.s_polynomials_vanish", seed, cases, [](gen::Rng& rng) -> std::string {
    const bool lex = rng() % 2 == 0;
    gb::PolyIdeal I = gen::small_ideal(rng, xy(), no_params(), 3);
    auto G = gb::buchberger(I.with_order(lex ? gb::MonomialOrder::lex() : gb::MonomialOrder::grevlex()));
    for (const auto& r : G.s_polynomial_remainders())
      if (!r.is_zero()) return "nonzero S-polynomial remainder " + to_string(r);
    for (const auto& g : I.generators())
      if (!G.contains(g)) return "generator " + to_string(g) + " not reduced to zero";
    return {};
  });
}

Outcome leibniz_rule(std::uint64_t seed, std::size_t cases) {
  return run("laurent.leibniz", seed, cases, [](gen::Rng& rng) -> std::string {
    LaurentPoly p = gen::laurent(rng, xyz(), qh::q_params(), 4, -2, 2);
    LaurentPoly q = gen::laurent(rng, xyz(), qh::q_params(), 4, -2, 2);
    const std::string v = xyz()->name(rng() % 3);
    if (!(partial_derivative(p * q, v) == partial_derivative(p, v) * q + p * partial_derivative(q, v)))
      return "d(pq) for p = " + to_string(p) + ", q = " + to_string(q);
    if (!(log_derivative(p * q, v) == log_derivative(p, v) * q + p * log_derivative(q, v)))
      return "v d(pq)/dv for p = " + to_string(p) + ", q = " + to_string(q);
    return {};
  });
}

Outcome substitution_morphism(std::uint64_t seed, std::size_t cases) {
  return run("laurent.substitution_morphism", seed, cases, [](gen::Rng& rng) -> std::string {
    LaurentPoly p = gen::laurent(rng, xy(), qh::q_params(), 3, -1, 2);
    LaurentPoly q = gen::laurent(rng, xy(), qh::q_params(), 3, -1, 2);
    Substitution s;
    for (const auto& v : xy()->names()) {
      LaurentPoly img = gen::laurent(rng, xyz(), qh::q_params(), 2, -1, 1);
      while (img.is_zero()) img = gen::laurent(rng, xyz(), qh::q_params(), 2, -1, 1);
      s[v] = RationalExpr(img);
    }
    if (!(substitute(p * q, s, xyz()) == substitute(p, s, xyz()) * substitute(q, s, xyz())))
      return "product not preserved for p = " + to_string(p) + ", q = " + to_string(q);
    if (!(substitute(p + q, s, xyz()) == substitute(p, s, xyz()) + substitute(q, s, xyz())))
      return "sum not preserved for p = " + to_string(p) + ", q = " + to_string(q);
    return {};
  });
}

Outcome polytext_round_trip(std::uint64_t seed, std::size_t cases) {
  return run("polytext.round_trip", seed, cases, [](gen::Rng& rng) -> std::string {
    LaurentPoly p = gen::laurent(rng, xyz(), qh::q_params(), 5, -3, 3);
    const std::string text = to_string(p);
    if (!(parse_laurent(text, xyz(), qh::q_params()) == p)) return "round trip of " + text;
    return {};
  });
}

Outcome reduction_order_independence(std::uint64_t seed, std::size_t cases) {
  return run("gauss_manin.order_independence", seed, cases, [](gen::Rng& rng) -> std::string {
    const gm::Engine& e = engine(false);
    LaurentPoly g = gen::polynomial(rng, e.delta_vars(), qh::q_params(), 3, 2);
    auto a = e.reduce_class(g, kBudget);
    auto b = engine(true).reduce_class(g, kBudget);
    int weight = 0;
    for (const auto& t : g.terms()) {
      int w = 0;
      for (std::size_t i = 0; i < t.first.size(); ++i) w += static_cast<int>(i + 1) * t.first[i];
      weight = std::max(weight, w);
    }
    if (a.theta_degree() > weight)
      return "θ-degree " + std::to_string(a.theta_degree()) + " above weighted degree for " + to_string(g);
    if (a == b) return {};
    return "[" + to_string(g) + "]: " + gm::to_string(a) + " vs " + gm::to_string(b);
  });
}

Outcome reduction_consistency(std::uint64_t seed, std::size_t cases) {
  return run("gauss_manin.rewrite_consistency", seed, cases, [](gen::Rng& rng) -> std::string {
    const gm::Engine& e = engine(false);
    LaurentPoly g = gen::polynomial(rng, e.delta_vars(), qh::q_params(), 2, 2);
    const std::size_t i = rng() % e.delta_vars()->size();
    auto lhs = e.reduce_class(g * e.log_forms()[i], kBudget);
    auto rhs = e.reduce_class(log_derivative(g, e.delta_vars()->name(i)), kBudget).shifted(1);
    if (lhs == rhs) return {};
    return "g = " + to_string(g) + ", i = " + std::to_string(i + 1) + ": " + gm::to_string(lhs) + " vs " +
           gm::to_string(rhs);
  });
}

std::vector<Outcome> run_suite(std::uint64_t seed, std::size_t total) {
  struct Part {
    Outcome (*fn)(std::uint64_t, std::size_t);
    std::size_t share;  // per thousand
  };
  const Part parts[] = {
      {groebner_order_invariance, 150}, {normal_form_idempotence, 200}, {s_polynomials_reduce_to_zero, 150},
      {leibniz_rule, 150},              {substitution_morphism, 150},   {reduction_order_independence, 100},
      {reduction_consistency, 100},
  };
  std::vector<Outcome> out;
  std::size_t used = 0;
  for (std::size_t k = 0; k < std::size(parts); ++k) {
    std::size_t n = k + 1 == std::size(parts) ? total - used : total * parts[k].share / 1000;
    used += n;
    out.push_back(parts[k].fn(seed + 7919 * (k + 1), n));
  }
  return out;
}

}  // namespace lgq::props
