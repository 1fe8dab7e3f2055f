#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "geomr/rmatrix.hpp"
#include "geomr/tableaux.hpp"

namespace geomr {

// A k-row rectangle (B_ij, L) lifted to X_{n-k}: X_ij = ε^{B_ij}, t = ε^L.
RectCoords<EpsRational> lift_coords(const KRectangle& r);
XPoint<EpsRational> lift(const KRectangle& r);
XProduct<EpsRational> lift(const std::vector<KRectangle>& rs);
// Valuations of the rectangle coordinates of a point of X_m (an (n-m)-row rectangle).
KRectangle read(const XPoint<EpsRational>& x);
std::vector<KRectangle> read(const XProduct<EpsRational>& xs);

// val(h(ε^{a_1}, ..., ε^{a_d})) for a positive rational map h.
long tropicalize(const std::function<EpsRational(const std::vector<EpsRational>&)>& h,
                 const std::vector<long>& a);

// R̂(a ⊗ b) = b' ⊗ a'.
std::pair<KRectangle, KRectangle> trop_R(const KRectangle& a, const KRectangle& b);
long trop_E(const KRectangle& a, const KRectangle& b);

std::vector<long> trop_gamma(const std::vector<KRectangle>& bs);
long trop_phi(const std::vector<KRectangle>& bs, int i);
long trop_eps(const std::vector<KRectangle>& bs, int i);
long trop_f(const std::vector<KRectangle>& bs);
// ê_i(c, b) for an integer c; no validity check.
std::vector<KRectangle> trop_e_raw(const std::vector<KRectangle>& bs, int i, long c);
// ê_i(1, b) when f̂ of the result is nonnegative, otherwise the crystal's 0.
std::optional<std::vector<KRectangle>> trop_e(const std::vector<KRectangle>& bs, int i);

KRectangle trop_PR(const KRectangle& r);
KRectangle trop_PR_inverse(const KRectangle& r);
KRectangle trop_S(const KRectangle& r);
// Sends a k-row rectangle to an (n-k)-row rectangle.
KRectangle trop_D(const KRectangle& r);

// Promotion on rectangular tableaux, defined as the tropical cyclic shift.
Tableau promotion(const Tableau& T);
Tableau promotion_inverse(const Tableau& T);
// ẽ_0 = pr^{-1} ∘ ẽ_1 ∘ pr.
std::optional<Tableau> crystal_e0(const Tableau& T);
std::optional<Tableau> crystal_f0(const Tableau& T);

enum class TropMap { R, E, e, PR, S, D, gamma, phi, eps, f };
std::optional<TropMap> trop_map_from_name(const std::string& name);

struct TropQuery {
  TropMap map = TropMap::R;
  std::vector<KRectangle> factors;
  int i = 0;  // crystal index for e, phi, eps
};

// Rectangles are flattened as their B_ij in row order followed by L; ê_i
// returns the flattened factors and throws EngineMisuse off the rectangle cone.
std::vector<long> trop_eval(const TropQuery& q);
std::vector<long> flatten(const KRectangle& r);

}  // namespace geomr
