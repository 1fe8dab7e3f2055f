#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "geomr/geomcrystal.hpp"

namespace geomr {

// Ψ_{k,ℓ}(M|s, N|t) = (g(M|s)|_{λ=(-1)^{k-1}t} · N)|t for u = M|s in X_ℓ, v = N|t in X_k.
template <class F>
XPoint<F> psi(const XPoint<F>& u, const XPoint<F>& v);

// R(u, v) = (v', u') with v' = Ψ_{k,ℓ}(u, v) and u' = S Ψ_{ℓ,k}(S v, S u).
template <class F>
std::pair<XPoint<F>, XPoint<F>> geom_R(const XPoint<F>& u, const XPoint<F>& v);

// R acting on factors i and i+1 (1-based) of a product.
template <class F>
XProduct<F> apply_R(const XProduct<F>& xs, int i);

// E(u, v) = Δ_{[n-k+1,n],[k]}(g(u)g(v)) with k = min(k_1, k_2); the minor is
// constant in λ, so it is evaluated at λ = 0.
template <class F>
F geom_E(const XPoint<F>& u, const XPoint<F>& v);
// The same minor of the loop matrix, as a Laurent polynomial in λ.
template <class F>
LoopPoly<F> geom_E_loop(const XPoint<F>& u, const XPoint<F>& v);
// Cauchy-Binet expansion in the Plücker coordinates P of v and Q of u.
template <class F>
F geom_E_plucker(const XPoint<F>& u, const XPoint<F>& v);

// Both sides of the key identity for column r:
//   (t + (-1)^k λ) Q'_{[ℓ-1] ∪ {r}} / Q'_{[ℓ]}
//   Σ_a (-1)^{n+a} P'_{[n-k,n] ∖ {a}} / P'_{[n-k+1,n]} · A_{ar}
// where A = g(u)g(v), P' are the Plücker coordinates of v' and Q' = Q(u').
template <class F>
std::pair<LoopPoly<F>, LoopPoly<F>> key_identity_sides(const XPoint<F>& u, const XPoint<F>& v, int r);
template <class F>
bool key_identity_check(const XPoint<F>& u, const XPoint<F>& v, int r);

// One-row input: the ratios x_1, ..., x_n of a 1-rectangle (s = x_1 ⋯ x_n) and
// a k-rectangle Y. τ_I and κ_j are evaluated from the explicit sums over ε.
template <class F>
F one_row_tau(const std::vector<F>& x, const RectCoords<F>& Y, const IndexSet& I);
template <class F>
F one_row_kappa(const std::vector<F>& x, const RectCoords<F>& Y, int j);
template <class F>
struct OneRowResult {
  RectCoords<F> Y_prime;
  std::vector<F> x_prime;
};
template <class F>
OneRowResult<F> one_row_R(const std::vector<F>& x, const RectCoords<F>& Y);

// The ℓ = k = 1 closed form: κ_j = Σ_s y_j ⋯ y_{j+s-1} x_{j+s+1} ⋯ x_{j+n-1};
// returns (y', x') with y'_j = y_j κ_{j+1}/κ_j and x'_j = x_j κ_j/κ_{j+1}.
std::vector<Rational> one_one_kappa(const std::vector<Rational>& x, const std::vector<Rational>& y);
std::pair<std::vector<Rational>, std::vector<Rational>> one_one_R(const std::vector<Rational>& x,
                                                                  const std::vector<Rational>& y);

// Ratios x_j of a rectangle row i (X_{i,i-1} = 1, X_{i,i+n-k} = t).
template <class F>
std::vector<F> row_ratios(const RectCoords<F>& X, int i);

// Random positive points, with coordinates drawn from {1..20}/{1..20}.
class PointSampler {
 public:
  explicit PointSampler(std::uint64_t seed) : rng_(seed) {}
  Rational positive_rational();
  // Θ of a random positive rectangle: a positive point of X_k.
  XPoint<Rational> positive_point(int n, int k, const Rational& t);
  // Positive points with pairwise distinct t.
  XProduct<Rational> positive_product(int n, const std::vector<int>& ks);
  RectCoords<Rational> positive_rect(int n, int k, const Rational& t);
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace geomr
