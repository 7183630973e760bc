#include "lgq/quadric_qh.hpp"

#include "lgq/polytext.hpp"

namespace lgq::qh {

const VarSetPtr& q_params() {
  static const VarSetPtr p = make_varset({"q"});
  return p;
}

namespace {

RatFunc qv() { return RatFunc::param(q_params(), "q"); }
RatFunc zero() { return RatFunc::constant(q_params(), BigRat(0)); }

void require_n(int n) {
  if (n < 1) throw UsageError("n must be at least 1 (got " + std::to_string(n) + ")");
  if (2 * n + 2 > static_cast<int>(kMaxVars)) throw UsageError("n is too large");
}

}  // namespace

QhAlgebra qh_mult_matrix(int n) {
  require_n(n);
  QhAlgebra A;
  A.n = n;
  A.dim = static_cast<std::size_t>(2 * n + 2);
  const std::size_t N = static_cast<std::size_t>(n);
  A.M = RMatrix(A.dim, A.dim, zero());
  for (std::size_t i = 0; i < A.dim; ++i) {
    if (i == 2 * N) {
      A.M(2 * N + 1, i) = RatFunc(1);
      A.M(0, i) = qv();
    } else if (i == 2 * N + 1) {
      A.M(1, i) = qv();
    } else {
      A.M(i + 1, i) = RatFunc(i == N ? 2 : 1);
    }
  }
  return A;
}

InitialConditions initial_conditions(int n) {
  QhAlgebra A = qh_mult_matrix(n);
  InitialConditions ic;
  ic.U = RatFunc(2 * n + 1) * A.M;
  ic.V = RMatrix(A.dim, A.dim, zero());
  for (std::size_t i = 0; i < A.dim; ++i)
    ic.V(i, i) = RatFunc(BigRat(2 * n + 1 - 2 * static_cast<long>(i), 2));
  ic.g = poincare_pairing(n);
  ic.e.assign(A.dim, zero());
  ic.e[0] = RatFunc(1);
  return ic;
}

RMatrix poincare_pairing(int n) {
  require_n(n);
  const std::size_t d = static_cast<std::size_t>(2 * n + 2);
  RMatrix g(d, d, zero());
  for (std::size_t i = 0; i < d; ++i) g(i, d - 1 - i) = RatFunc(1);
  return g;
}

std::vector<SpectralPoint> spectral_points() {
  const VarSetPtr& P = q_params();
  const CubicExt one(P, RatFunc(1));
  const CubicExt xi = CubicExt::xi(P);
  const CubicExt q(P, qv());
  std::vector<SpectralPoint> pts;
  pts.push_back({"P0", {one, CubicExt(P), CubicExt(P), -q}});
  pts.push_back({"Pi", {one, xi, xi * xi * CubicExt(P, RatFunc(BigRat(1, 2))), q}});
  return pts;
}

std::vector<CubicExt> relation_residuals(const QhAlgebra& A, const SpectralPoint& p) {
  if (p.coords.size() != A.dim) throw Error("spectral point has the wrong dimension");
  const VarSetPtr& P = q_params();
  std::vector<CubicExt> out;
  for (std::size_t j = 0; j < A.dim; ++j) {
    CubicExt r = p.coords[1] * p.coords[j];
    for (std::size_t i = 0; i < A.dim; ++i)
      if (!A.M(i, j).is_zero()) r = r - CubicExt(P, A.M(i, j)) * p.coords[i];
    out.push_back(r);
  }
  return out;
}

bool is_homogeneous(const QhAlgebra& A) {
  for (std::size_t i = 0; i < A.dim; ++i)
    for (std::size_t j = 0; j < A.dim; ++j) {
      const RatFunc& c = A.M(i, j);
      if (c.is_zero()) continue;
      if (!c.den().is_constant() || c.num().size() != 1) return false;
      const int k = c.num().lex_leading().first[0];
      if (A.basis_degree(i) + k * A.q_degree() != A.basis_degree(j) + 2) return false;
    }
  return true;
}

bool is_self_adjoint(const RMatrix& M, const RMatrix& g) { return g.transpose() * M == M.transpose() * g; }

bool grading_compatible(const RMatrix& V, const RMatrix& g) { return (V.transpose() * g + g * V).is_zero(); }

bool minimal_polynomial_divides(const QhAlgebra& A) {
  RMatrix p = A.M;
  for (int k = 0; k < 2 * A.n; ++k) p = p * A.M;
  RMatrix I = RMatrix::identity(A.dim, zero(), RatFunc(1));
  RMatrix r = A.M * (p - RatFunc(4) * qv() * I);
  return r.is_zero();
}

std::string product_text(const QhAlgebra& A, std::size_t j) {
  std::string out;
  for (std::size_t i = A.dim; i-- > 0;) {
    const RatFunc& c = A.M(i, j);
    if (c.is_zero()) continue;
    std::string coef = to_string(c);
    std::string term = "D" + std::to_string(i);
    if (coef == "1")
      coef.clear();
    else if (c.num().size() > 1)
      coef = "(" + coef + ")";
    if (!out.empty()) out += '+';
    out += coef.empty() ? term : coef + "*" + term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace lgq::qh
