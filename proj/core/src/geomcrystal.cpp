#include "geomr/geomcrystal.hpp"

#include <algorithm>

namespace geomr {

namespace {

template <class F>
F ratio_or_throw(const F& num, const F& den, const char* what) {
  if (detail::zero_test(den)) throw DegenerateInput(what);
  return num / den;
}

int residue(int i, int n) { return ((i % n) + n) % n; }

template <class F>
F sign_t(int k, const F& t) {
  return ((k - 1) % 2 == 0) ? t : -t;
}

template <class F>
void check_product(const XProduct<F>& xs) {
  if (xs.empty()) throw InvalidInput("empty product");
  for (const auto& x : xs)
    if (x.n() != xs[0].n()) throw InvalidInput("product factors must share n");
}

}  // namespace

template <class F>
std::vector<F> gamma(const XPoint<F>& x) {
  const int n = x.n(), k = x.k();
  std::vector<F> g;
  for (int i = 1; i <= n; ++i) {
    F v = ratio_or_throw(x.P(interval(i - k + 1, i)), x.P(interval(i - k, i - 1)),
                         "cyclic Plücker coordinate vanishes");
    g.push_back(i > k ? x.t * v : v);
  }
  return g;
}

template <class F>
F phi(const XPoint<F>& x, int i) {
  const int k = x.k();
  i = residue(i, x.n());
  F v = ratio_or_throw(x.P(join(interval(i - k + 1, i - 1), {i + 1})), x.P(interval(i - k + 1, i)),
                       "φ denominator vanishes");
  return i == 0 ? v / x.t : v;
}

template <class F>
F eps(const XPoint<F>& x, int i) {
  const int k = x.k();
  i = residue(i, x.n());
  F num = x.P(join(interval(i - k + 1, i - 1), {i + 1})) * x.P(interval(i - k + 1, i));
  F den = x.P(interval(i - k, i - 1)) * x.P(interval(i - k + 2, i + 1));
  F v = ratio_or_throw(num, den, "ε denominator vanishes");
  return i == k ? v / x.t : v;
}

template <class F>
XPoint<F> e_c(const XPoint<F>& x, int i, const F& c) {
  const int n = x.n(), k = x.k();
  i = residue(i, n);
  if (detail::zero_test(c)) throw DegenerateInput("e_i^c needs c != 0");
  F p = phi(x, i);
  if (detail::zero_test(p)) throw DegenerateInput("φ_i vanishes");
  F a = (c - F(1)) / p;
  Matrix<F> u = Matrix<F>::identity(n);
  if (i == 0)
    u(n, 1) = sign_t(k, F(1)) * a / x.t;
  else
    u(i, i + 1) = a;
  return XPoint<F>{GrassmannPoint<F>(u * x.N.mat()), x.t};
}

template <class F>
F decoration(const XPoint<F>& x) {
  const int n = x.n(), k = x.k();
  F f(0);
  for (int i = 1; i <= n; ++i) {
    if (i == k) continue;
    f += ratio_or_throw(x.P(join({i - k}, interval(i - k + 2, i))), x.P(interval(i - k + 1, i)),
                        "decoration denominator vanishes");
  }
  f += x.t * ratio_or_throw(x.P(join(interval(2, k), {n})), x.P(interval(1, k)),
                            "decoration denominator vanishes");
  return f;
}

template <class F>
std::vector<F> gamma(const XProduct<F>& xs) {
  check_product(xs);
  std::vector<F> g = gamma(xs[0]);
  for (std::size_t a = 1; a < xs.size(); ++a) {
    std::vector<F> h = gamma(xs[a]);
    for (std::size_t j = 0; j < g.size(); ++j) g[j] *= h[j];
  }
  return g;
}

namespace {

// φ_i and ε_i of every prefix (x_1, ..., x_j).
template <class F>
void prefix_data(const XProduct<F>& xs, int i, std::vector<F>& ph, std::vector<F>& ep) {
  ph = {phi(xs[0], i)};
  ep = {eps(xs[0], i)};
  for (std::size_t a = 1; a < xs.size(); ++a) {
    F py = phi(xs[a], i), ey = eps(xs[a], i);
    const F& px = ph.back();
    const F& ex = ep.back();
    F s = ex + py;
    if (detail::zero_test(s) || detail::zero_test(ex) || detail::zero_test(py))
      throw DegenerateInput("product crystal denominator vanishes");
    F np = px * s / ex, ne = ey * s / py;
    ph.push_back(np);
    ep.push_back(ne);
  }
}

}  // namespace

template <class F>
F phi(const XProduct<F>& xs, int i) {
  check_product(xs);
  std::vector<F> ph, ep;
  prefix_data(xs, i, ph, ep);
  return ph.back();
}

template <class F>
F eps(const XProduct<F>& xs, int i) {
  check_product(xs);
  std::vector<F> ph, ep;
  prefix_data(xs, i, ph, ep);
  return ep.back();
}

template <class F>
std::vector<F> product_factors(const XProduct<F>& xs, int i, const F& c) {
  check_product(xs);
  if (detail::zero_test(c)) throw DegenerateInput("e_i^c needs c != 0");
  std::vector<F> ph, ep;
  prefix_data(xs, i, ph, ep);
  std::vector<F> cs(xs.size());
  F cur = c;
  for (std::size_t a = xs.size() - 1; a >= 1; --a) {
    const F& ex = ep[a - 1];
    F py = phi(xs[a], i);
    F s = ex + py;
    F second = ex + py / cur;
    if (detail::zero_test(second)) throw DegenerateInput("product crystal denominator vanishes");
    cs[a] = s / second;
    cur = (cur * ex + py) / s;
  }
  cs[0] = cur;
  return cs;
}

template <class F>
XProduct<F> e_c(const XProduct<F>& xs, int i, const F& c) {
  std::vector<F> cs = product_factors(xs, i, c);
  XProduct<F> out;
  for (std::size_t a = 0; a < xs.size(); ++a) out.push_back(e_c(xs[a], i, cs[a]));
  return out;
}

template <class F>
F decoration(const XProduct<F>& xs) {
  check_product(xs);
  F f(0);
  for (const auto& x : xs) f += decoration(x);
  return f;
}

template <class F>
XPoint<F> PR(const XPoint<F>& x) {
  const int n = x.n(), k = x.k();
  const Matrix<F>& N = x.N.mat();
  Matrix<F> M(n, k);
  F s = sign_t(k, x.t);
  for (int j = 1; j <= k; ++j) {
    M(1, j) = s * N(n, j);
    for (int i = 2; i <= n; ++i) M(i, j) = N(i - 1, j);
  }
  return XPoint<F>{GrassmannPoint<F>(std::move(M)), x.t};
}

template <class F>
XPoint<F> PR_inverse(const XPoint<F>& x) {
  const int n = x.n(), k = x.k();
  const Matrix<F>& N = x.N.mat();
  Matrix<F> M(n, k);
  F s = sign_t(k, x.t);
  for (int j = 1; j <= k; ++j) {
    M(n, j) = N(1, j) / s;
    for (int i = 1; i < n; ++i) M(i, j) = N(i + 1, j);
  }
  return XPoint<F>{GrassmannPoint<F>(std::move(M)), x.t};
}

template <class F>
XPoint<F> S(const XPoint<F>& x) {
  Matrix<F> A = fl(g_eval(x, sign_t(x.k(), x.t)));
  return first_columns_point(A, x.k(), x.t);
}

template <class F>
F Q(const XPoint<F>& x, const IndexSet& J) {
  return S(x).P(w0(J, x.n()));
}

template <class F>
XPoint<F> mu(const XPoint<F>& x) {
  const int n = x.n(), k = x.k();
  const Matrix<F>& N = x.N.mat();
  // Rows of the system: Σ_i (-1)^{i+1} N_ij w_i = 0 for each column j.
  Matrix<F> sys(k, n);
  for (int j = 1; j <= k; ++j)
    for (int i = 1; i <= n; ++i) sys(j, i) = (i % 2 == 1) ? N(i, j) : -N(i, j);
  Matrix<F> K = kernel_basis(sys);
  Matrix<F> R(n, K.cols());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= K.cols(); ++j) R(i, j) = K(n - i + 1, j);
  return XPoint<F>{GrassmannPoint<F>(std::move(R)), x.t};
}

template <class F>
XPoint<F> D(const XPoint<F>& x) {
  return S(mu(x));
}

template <class F>
XProduct<F> PR(const XProduct<F>& xs) {
  XProduct<F> out;
  for (const auto& x : xs) out.push_back(PR(x));
  return out;
}

template <class F>
XProduct<F> PR_inverse(const XProduct<F>& xs) {
  XProduct<F> out;
  for (const auto& x : xs) out.push_back(PR_inverse(x));
  return out;
}

template <class F>
XProduct<F> S(const XProduct<F>& xs) {
  XProduct<F> out;
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) out.push_back(S(*it));
  return out;
}

template <class F>
XProduct<F> D(const XProduct<F>& xs) {
  XProduct<F> out;
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) out.push_back(D(*it));
  return out;
}

template <class F>
std::vector<int> profile(const XProduct<F>& xs) {
  std::vector<int> ks;
  for (const auto& x : xs) ks.push_back(x.k());
  return ks;
}

#define GEOMR_INSTANTIATE(F)                                                  \
  template std::vector<F> gamma<F>(const XPoint<F>&);                         \
  template F phi<F>(const XPoint<F>&, int);                                   \
  template F eps<F>(const XPoint<F>&, int);                                   \
  template XPoint<F> e_c<F>(const XPoint<F>&, int, const F&);                 \
  template F decoration<F>(const XPoint<F>&);                                 \
  template std::vector<F> gamma<F>(const XProduct<F>&);                       \
  template F phi<F>(const XProduct<F>&, int);                                 \
  template F eps<F>(const XProduct<F>&, int);                                 \
  template XProduct<F> e_c<F>(const XProduct<F>&, int, const F&);             \
  template F decoration<F>(const XProduct<F>&);                               \
  template std::vector<F> product_factors<F>(const XProduct<F>&, int, const F&); \
  template XPoint<F> PR<F>(const XPoint<F>&);                                 \
  template XPoint<F> PR_inverse<F>(const XPoint<F>&);                         \
  template XPoint<F> S<F>(const XPoint<F>&);                                  \
  template F Q<F>(const XPoint<F>&, const IndexSet&);                         \
  template XPoint<F> mu<F>(const XPoint<F>&);                                 \
  template XPoint<F> D<F>(const XPoint<F>&);                                  \
  template XProduct<F> PR<F>(const XProduct<F>&);                             \
  template XProduct<F> PR_inverse<F>(const XProduct<F>&);                     \
  template XProduct<F> S<F>(const XProduct<F>&);                              \
  template XProduct<F> D<F>(const XProduct<F>&);                              \
  template std::vector<int> profile<F>(const XProduct<F>&);

GEOMR_INSTANTIATE(Rational)
GEOMR_INSTANTIATE(EpsRational)

}  // namespace geomr
