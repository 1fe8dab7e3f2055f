#include "geomr/rmatrix.hpp"

#include <algorithm>

namespace geomr {

namespace {

template <class F>
F signed_t(int k, const F& t) {
  return ((k - 1) % 2 == 0) ? t : -t;
}

template <class F>
F checked_ratio(const F& num, const F& den) {
  if (detail::zero_test(den)) throw DegenerateInput("vanishing denominator");
  return num / den;
}

int mod1(int j, int n) { return ((j - 1) % n + n) % n + 1; }

}  // namespace

template <class F>
XPoint<F> psi(const XPoint<F>& u, const XPoint<F>& v) {
  if (u.n() != v.n()) throw InvalidInput("R-matrix factors must share n");
  Matrix<F> gu = g_eval(u, signed_t(v.k(), v.t));
  return XPoint<F>{GrassmannPoint<F>(gu * v.N.mat()), v.t};
}

template <class F>
std::pair<XPoint<F>, XPoint<F>> geom_R(const XPoint<F>& u, const XPoint<F>& v) {
  XPoint<F> v_prime = psi(u, v);
  XPoint<F> u_prime = S(psi(S(v), S(u)));
  return {std::move(v_prime), std::move(u_prime)};
}

template <class F>
XProduct<F> apply_R(const XProduct<F>& xs, int i) {
  if (i < 1 || i >= static_cast<int>(xs.size())) throw InvalidInput("R_i index out of range");
  XProduct<F> out = xs;
  auto [vp, up] = geom_R(xs[i - 1], xs[i]);
  out[i - 1] = std::move(vp);
  out[i] = std::move(up);
  return out;
}

template <class F>
F geom_E(const XPoint<F>& u, const XPoint<F>& v) {
  const int n = u.n(), k = std::min(u.k(), v.k());
  Matrix<F> A = g_eval(u, F(0)) * g_eval(v, F(0));
  return minor(A, interval(n - k + 1, n), interval(1, k));
}

template <class F>
LoopPoly<F> geom_E_loop(const XPoint<F>& u, const XPoint<F>& v) {
  const int n = u.n(), k = std::min(u.k(), v.k());
  return minor_delta(g_of(u) * g_of(v), interval(n - k + 1, n), interval(1, k));
}

template <class F>
F geom_E_plucker(const XPoint<F>& u, const XPoint<F>& v) {
  const int n = u.n(), k1 = u.k(), k2 = v.k();
  XPoint<F> Su = S(u);
  auto Qu = [&](const IndexSet& J) { return Su.P(w0(J, n)); };
  F q0 = Qu(interval(1, k1)), p0 = v.P(interval(n - k2 + 1, n));
  if (detail::zero_test(q0) || detail::zero_test(p0)) throw DegenerateInput("vanishing normalizing Plücker coordinate");
  F sum(0);
  if (k1 >= k2) {
    for (IndexSet I : subsets(n - k1 + k2, k2)) {
      for (int& i : I) i += k1 - k2;
      sum += Qu(join(interval(1, k1 - k2), I)) * v.P(I);
    }
  } else {
    for (const IndexSet& I : subsets(n - k2 + k1, k1))
      sum += Qu(I) * v.P(join(I, interval(n - k2 + k1 + 1, n)));
  }
  return sum / (q0 * p0);
}

template <class F>
std::pair<LoopPoly<F>, LoopPoly<F>> key_identity_sides(const XPoint<F>& u, const XPoint<F>& v, int r) {
  const int n = u.n(), l = u.k(), k = v.k();
  LoopMatrix<F> A = g_of(u) * g_of(v);
  auto [vp, up] = geom_R(u, v);
  XPoint<F> Sup = S(up);
  auto Qp = [&](const IndexSet& J) { return Sup.P(w0(J, n)); };
  LoopPoly<F> factor = LoopPoly<F>(v.t) + LoopPoly<F>::monomial(F(k % 2 == 0 ? 1 : -1), 1);
  LoopPoly<F> lhs = factor * LoopPoly<F>(checked_ratio(Qp(join(interval(1, l - 1), {r})), Qp(interval(1, l))));
  F pden = vp.P(interval(n - k + 1, n));
  LoopPoly<F> rhs;
  for (int a = std::max(1, n - k); a <= n; ++a) {
    IndexSet I;
    for (int b = n - k; b <= n; ++b)
      if (b != a) I.push_back(b);
    F c = checked_ratio(vp.P(I), pden);
    if ((n + a) % 2) c = -c;
    rhs += LoopPoly<F>(c) * A(a, r);
  }
  return {lhs, rhs};
}

template <class F>
bool key_identity_check(const XPoint<F>& u, const XPoint<F>& v, int r) {
  auto [lhs, rhs] = key_identity_sides(u, v, r);
  return lhs == rhs;
}

template <class F>
std::vector<F> row_ratios(const RectCoords<F>& X, int i) {
  std::vector<F> out;
  for (int j = i; j <= i + X.n - X.k; ++j) out.push_back(X.ratio(i, j));
  return out;
}

template <class F>
F one_row_tau(const std::vector<F>& x, const RectCoords<F>& Y, const IndexSet& Iraw) {
  const int n = Y.n, r = n - Y.k;
  if (static_cast<int>(x.size()) != n) throw InvalidInput("one-row input needs n ratios");
  IndexSet I = reduce_mod(Iraw, n);
  if (static_cast<int>(I.size()) != r) throw InvalidInput("τ_I needs an (n-k)-subset");
  XPoint<F> N = theta(Y);
  F den = N.P(I);
  if (detail::zero_test(den)) throw DegenerateInput("P_I vanishes");
  F sum(0);
  for (unsigned e = 0; e < (1u << r); ++e) {
    IndexSet J;
    F w(1);
    for (int s = 0; s < r; ++s) {
      bool shifted = e & (1u << s);
      J.push_back(shifted ? mod1(I[s] - 1, n) : I[s]);
      if (!shifted) w *= x[I[s] - 1];
    }
    if (static_cast<int>(reduce_mod(J, n).size()) != r) continue;
    if (I[0] == 1 && (e & 1u)) w *= Y.t;
    sum += w * N.P(J);
  }
  return sum / den;
}

template <class F>
F one_row_kappa(const std::vector<F>& x, const RectCoords<F>& Y, int j) {
  const int n = Y.n;
  return one_row_tau(x, Y, interval(j + Y.k, j + n - 1));
}

template <class F>
OneRowResult<F> one_row_R(const std::vector<F>& x, const RectCoords<F>& Y) {
  const int n = Y.n, k = Y.k;
  OneRowResult<F> out;
  out.Y_prime = Y;
  for (int i = 1; i <= k; ++i)
    for (int j = i; j <= i + n - k - 1; ++j) {
      F num = one_row_tau(x, Y, join(interval(i, j), interval(k + j - i + 2, n)));
      F den = one_row_tau(x, Y, join(interval(i + 1, j), interval(k + j - i + 1, n)));
      out.Y_prime.X[i - 1][j - i] = Y.X[i - 1][j - i] * checked_ratio(num, den);
    }
  std::vector<F> kappa;
  for (int j = 1; j <= n; ++j) kappa.push_back(one_row_kappa(x, Y, j));
  for (int j = 1; j <= n; ++j) out.x_prime.push_back(x[j - 1] * checked_ratio(kappa[j - 1], kappa[j % n]));
  return out;
}

std::vector<Rational> one_one_kappa(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  const int n = static_cast<int>(x.size());
  if (static_cast<int>(y.size()) != n) throw InvalidInput("one-row inputs must have equal length");
  auto X = [&](int j) { return x[mod1(j, n) - 1]; };
  auto Y = [&](int j) { return y[mod1(j, n) - 1]; };
  std::vector<Rational> kappa;
  for (int j = 1; j <= n; ++j) {
    Rational sum(0);
    for (int s = 0; s <= n - 1; ++s) {
      Rational term(1);
      for (int a = j; a <= j + s - 1; ++a) term *= Y(a);
      for (int a = j + s + 1; a <= j + n - 1; ++a) term *= X(a);
      sum += term;
    }
    kappa.push_back(sum);
  }
  return kappa;
}

std::pair<std::vector<Rational>, std::vector<Rational>> one_one_R(const std::vector<Rational>& x,
                                                                  const std::vector<Rational>& y) {
  const int n = static_cast<int>(x.size());
  std::vector<Rational> kappa = one_one_kappa(x, y), yp, xp;
  for (int j = 0; j < n; ++j) {
    const Rational& next = kappa[(j + 1) % n];
    yp.push_back(y[j] * checked_ratio(next, kappa[j]));
    xp.push_back(x[j] * checked_ratio(kappa[j], next));
  }
  return {yp, xp};
}

Rational PointSampler::positive_rational() {
  std::uniform_int_distribution<int> d(1, 20);
  int p = d(rng_);
  int q = d(rng_);
  return Rational(p) / Rational(q);
}

RectCoords<Rational> PointSampler::positive_rect(int n, int k, const Rational& t) {
  RectCoords<Rational> X;
  X.n = n;
  X.k = k;
  X.t = t;
  for (int i = 1; i <= k; ++i) {
    std::vector<Rational> row;
    for (int j = i; j <= i + n - k - 1; ++j) row.push_back(positive_rational());
    X.X.push_back(std::move(row));
  }
  return X;
}

XPoint<Rational> PointSampler::positive_point(int n, int k, const Rational& t) {
  return theta(positive_rect(n, n - k, t));
}

XProduct<Rational> PointSampler::positive_product(int n, const std::vector<int>& ks) {
  std::vector<Rational> ts;
  while (ts.size() < ks.size()) {
    Rational t = positive_rational();
    if (std::find(ts.begin(), ts.end(), t) == ts.end()) ts.push_back(t);
  }
  XProduct<Rational> out;
  for (std::size_t a = 0; a < ks.size(); ++a) out.push_back(positive_point(n, ks[a], ts[a]));
  return out;
}

#define GEOMR_INSTANTIATE(F)                                                                       \
  template XPoint<F> psi<F>(const XPoint<F>&, const XPoint<F>&);                                   \
  template std::pair<XPoint<F>, XPoint<F>> geom_R<F>(const XPoint<F>&, const XPoint<F>&);          \
  template XProduct<F> apply_R<F>(const XProduct<F>&, int);                                        \
  template F geom_E<F>(const XPoint<F>&, const XPoint<F>&);                                        \
  template LoopPoly<F> geom_E_loop<F>(const XPoint<F>&, const XPoint<F>&);                         \
  template F geom_E_plucker<F>(const XPoint<F>&, const XPoint<F>&);                                \
  template std::pair<LoopPoly<F>, LoopPoly<F>> key_identity_sides<F>(const XPoint<F>&,             \
                                                                     const XPoint<F>&, int);       \
  template bool key_identity_check<F>(const XPoint<F>&, const XPoint<F>&, int);                    \
  template std::vector<F> row_ratios<F>(const RectCoords<F>&, int);                                \
  template F one_row_tau<F>(const std::vector<F>&, const RectCoords<F>&, const IndexSet&);         \
  template F one_row_kappa<F>(const std::vector<F>&, const RectCoords<F>&, int);                   \
  template OneRowResult<F> one_row_R<F>(const std::vector<F>&, const RectCoords<F>&);

GEOMR_INSTANTIATE(Rational)
GEOMR_INSTANTIATE(EpsRational)

}  // namespace geomr
