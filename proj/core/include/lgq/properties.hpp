#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lgq::props {

struct Outcome {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return cases > 0 && failures == 0; }
};

Outcome groebner_order_invariance(std::uint64_t seed, std::size_t cases);
Outcome normal_form_idempotence(std::uint64_t seed, std::size_t cases);
Outcome s_polynomials_reduce_to_zero(std::uint64_t seed, std::size_t cases);
Outcome leibniz_rule(std::uint64_t seed, std::size_t cases);
Outcome substitution_morphism(std::uint64_t seed, std::size_t cases);
Outcome polytext_round_trip(std::uint64_t seed, std::size_t cases);
/// Engines with grevlex and lex column orders agree, and the θ-degree is at
/// most the weighted degree Σ i·m_i of g.
Outcome reduction_order_independence(std::uint64_t seed, std::size_t cases);
/// [g·L_i] = θ·[Δ_i∂g/∂Δ_i].
Outcome reduction_consistency(std::uint64_t seed, std::size_t cases);

/// The randomized suite, `total` cases split over the properties above
/// (round trip excluded).
std::vector<Outcome> run_suite(std::uint64_t seed, std::size_t total = 1000);

}  // namespace lgq::props
