#pragma once

#include <random>

#include "lgq/groebner.hpp"
#include "lgq/laurent.hpp"

namespace lgq::gen {

using Rng = std::mt19937_64;

/// a/b with |a| ≤ num_bound and 1 ≤ b ≤ den_bound.
BigRat small_rat(Rng& rng, int num_bound = 9, int den_bound = 5);
BigRat nonzero_rat(Rng& rng, int num_bound = 9, int den_bound = 5);

/// c·q^k with small c and |k| ≤ 2 when params holds q, else a constant.
RatFunc coefficient(Rng& rng, const VarSetPtr& params);

/// Random Laurent polynomial with up to `terms` terms and exponents in [lo, hi].
LaurentPoly laurent(Rng& rng, const VarSetPtr& vars, const VarSetPtr& params, int terms, int lo, int hi);

/// Polynomial with nonnegative exponents and total degree ≤ degree.
LaurentPoly polynomial(Rng& rng, const VarSetPtr& vars, const VarSetPtr& params, int terms, int degree);

/// v_i^{d_i} + (terms of lower total degree) for each variable, plus one
/// extra random generator: zero-dimensional for every monomial order.
gb::PolyIdeal zero_dimensional_ideal(Rng& rng, const VarSetPtr& vars, const VarSetPtr& params, int max_degree);

/// Up to three random polynomial generators (no dimension guarantee).
gb::PolyIdeal small_ideal(Rng& rng, const VarSetPtr& vars, const VarSetPtr& params, int degree);

}  // namespace lgq::gen
