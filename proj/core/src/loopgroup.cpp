#include "geomr/loopgroup.hpp"

#include <algorithm>
#include <climits>

namespace geomr {

namespace {

long floor_div(long a, long b) { return (a >= 0) ? a / b : -((-a + b - 1) / b); }

template <class F>
F signed_value(int sign, const F& v) {
  return sign > 0 ? v : -v;
}

int parity_sign(int e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

template <class F>
LoopMatrix<F> constant_loop(const Matrix<F>& A) {
  return A.template map<LoopPoly<F>>([](const F& x) { return LoopPoly<F>(x); });
}

template <class F>
Matrix<F> eval_lambda(const LoopMatrix<F>& A, const F& lambda) {
  return A.template map<F>([&](const LoopPoly<F>& p) { return p.eval(lambda); });
}

template <class F>
LoopMatrix<F> lambda_sign(const LoopMatrix<F>& A, int s) {
  return A.template map<LoopPoly<F>>([s](const LoopPoly<F>& p) { return p.sign_substitute(s); });
}

namespace {

// Ratio P_{[j-k+1,j-1] ∪ {i}} / P_{[j-k,j-1]} shared by g_of and g_eval.
template <class F>
Matrix<F> g_ratios(const XPoint<F>& x) {
  const int n = x.n(), k = x.k();
  if (detail::zero_test(x.t)) throw DegenerateInput("t must be nonzero");
  Matrix<F> R(n, n);
  for (int j = 1; j <= n; ++j) {
    F den = x.P(interval(j - k, j - 1));
    if (detail::zero_test(den)) throw DegenerateInput("cyclic Plücker coordinate vanishes; g undefined");
    IndexSet base = interval(j - k + 1, j - 1);
    for (int i = 1; i <= n; ++i) {
      IndexSet I = base;
      I.push_back(i);
      F num = x.P(I);
      if (!detail::zero_test(num)) R(i, j) = num / den;
    }
  }
  return R;
}

}  // namespace

template <class F>
LoopMatrix<F> g_of(const XPoint<F>& x) {
  const int n = x.n(), k = x.k();
  Matrix<F> R = g_ratios(x);
  LoopMatrix<F> A(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (detail::zero_test(R(i, j))) continue;
      if (j <= k)
        A(i, j) = LoopPoly<F>(R(i, j));
      else if (i >= j)
        A(i, j) = LoopPoly<F>(x.t * R(i, j));
      else
        A(i, j) = LoopPoly<F>::monomial(R(i, j), 1);
    }
  return A;
}

template <class F>
LoopMatrix<F> g_of(const std::vector<XPoint<F>>& xs) {
  if (xs.empty()) throw InvalidInput("g of an empty product");
  LoopMatrix<F> A = g_of(xs[0]);
  for (std::size_t a = 1; a < xs.size(); ++a) {
    if (xs[a].n() != xs[0].n()) throw InvalidInput("product factors must share n");
    A = A * g_of(xs[a]);
  }
  return A;
}

template <class F>
Matrix<F> g_eval(const XPoint<F>& x, const F& lambda) {
  const int n = x.n(), k = x.k();
  Matrix<F> A = g_ratios(x);
  for (int i = 1; i <= n; ++i)
    for (int j = k + 1; j <= n; ++j) {
      if (detail::zero_test(A(i, j))) continue;
      A(i, j) = (i >= j ? x.t : lambda) * A(i, j);
    }
  return A;
}

template <class F>
F unfold_entry(const LoopMatrix<F>& A, long I, long J) {
  const long n = A.rows();
  long r = floor_div(I - 1, n), s = floor_div(J - 1, n);
  int i = static_cast<int>(I - r * n), j = static_cast<int>(J - s * n);
  return A(i, j).coeff(static_cast<int>(r - s));
}

template <class F>
LoopMatrix<F> fold(int n, int dlo, int dhi, const std::function<F(long, long)>& X) {
  LoopMatrix<F> A(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      std::vector<F> c;
      for (int d = dlo; d <= dhi; ++d) c.push_back(X(static_cast<long>(d) * n + i, j));
      A(i, j) = LoopPoly<F>::from_coeffs(dlo, std::move(c));
    }
  return A;
}

namespace {

template <class F>
std::pair<int, int> degree_range(const LoopMatrix<F>& A) {
  int lo = INT_MAX, hi = INT_MIN;
  for (int i = 1; i <= A.rows(); ++i)
    for (int j = 1; j <= A.cols(); ++j)
      if (!A(i, j).is_zero()) {
        lo = std::min(lo, A(i, j).low());
        hi = std::max(hi, A(i, j).high());
      }
  if (lo > hi) return {0, 0};
  return {lo, hi};
}

}  // namespace

template <class F>
LoopMatrix<F> sh(const LoopMatrix<F>& A) {
  auto [lo, hi] = degree_range(A);
  return fold<F>(A.rows(), lo - 1, hi + 1,
                 [&](long i, long j) { return unfold_entry(A, i - 1, j - 1); });
}

template <class F>
LoopMatrix<F> fl(const LoopMatrix<F>& A) {
  const int n = A.rows();
  LoopMatrix<F> out(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) out(i, j) = A(n - j + 1, n - i + 1);
  return out;
}

template <class F>
Matrix<F> fl(const Matrix<F>& A) {
  const int n = A.rows();
  Matrix<F> out(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) out(i, j) = A(n - j + 1, n - i + 1);
  return out;
}

template <class F>
LoopMatrix<F> inv(const LoopMatrix<F>& A) {
  const int n = A.rows();
  LoopMatrix<F> Al = lambda_sign(A, parity_sign(n));
  if (det(Al).is_zero()) throw DegenerateInput("inv of a singular loop matrix");
  LoopMatrix<F> out(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      IndexSet rows = complement({j}, n), cols = complement({i}, n);
      out(i, j) = minor(Al, rows, cols);
    }
  return out;
}

template <class F>
LoopPoly<F> minor_delta(const LoopMatrix<F>& A, const IndexSet& I, const IndexSet& J) {
  return minor(A, I, J);
}

template <class F>
bool is_m_shifted_unipotent(const LoopMatrix<F>& A, int m) {
  const int n = A.rows();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const auto& p = A(i, j);
      for (int d = p.low(); !p.is_zero() && d <= p.high(); ++d) {
        F c = p.coeff(d);
        if (detail::zero_test(c)) continue;
        long diff = static_cast<long>(d) * n + i - j;
        if (diff > m) return false;
      }
    }
  for (int j = 1; j <= n; ++j)
    if (unfold_entry(A, j + m, j) != F(1)) return false;
  return true;
}

template <class F>
bool is_in_Bminus(const LoopMatrix<F>& A) {
  const int n = A.rows();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const auto& p = A(i, j);
      if (!p.is_zero() && p.low() < 0) return false;
      if (i == j && detail::zero_test(p.coeff(0))) return false;
      if (i < j && !detail::zero_test(p.coeff(0))) return false;
    }
  return true;
}

template <class F>
F chi(const LoopMatrix<F>& A, int m) {
  if (!is_m_shifted_unipotent(A, m)) throw InvalidInput("chi needs an m-shifted unipotent matrix");
  F s(0);
  for (int j = 1; j <= A.rows(); ++j) s += unfold_entry(A, j + m - 1, j);
  return s;
}

template <class F>
F decoration_f(const std::vector<XPoint<F>>& xs) {
  int m = 0;
  for (const auto& x : xs) m += x.n() - x.k();
  return chi(g_of(xs), m);
}

template <class F>
LoopMatrix<F> xhat(int n, int i, const F& a) {
  if (i < 0 || i >= n) throw InvalidInput("xhat index must lie in [0, n-1]");
  LoopMatrix<F> M = constant_loop(Matrix<F>::identity(n));
  if (i == 0)
    M(n, 1) = LoopPoly<F>::monomial(a, -1);
  else
    M(i, i + 1) = LoopPoly<F>(a);
  return M;
}

template <class F>
F tau_i(int i, const F& a, const LoopMatrix<F>& X) {
  F den = unfold_entry(X, i, i) + a * unfold_entry(X, i + 1, i);
  if (detail::zero_test(den)) throw DegenerateInput("tau denominator vanishes");
  return -a * unfold_entry(X, i + 1, i + 1) / den;
}

template <class F>
LoopMatrix<F> uaction_Bminus(int i, const F& a, const LoopMatrix<F>& X) {
  const int n = X.rows();
  return xhat(n, i, a) * X * xhat(n, i, tau_i(i, a, X));
}

template <class F>
F bminus_phi(int i, const LoopMatrix<F>& X) {
  F d = unfold_entry(X, i, i);
  if (detail::zero_test(d)) throw DegenerateInput("diagonal entry vanishes");
  return unfold_entry(X, i + 1, i) / d;
}

template <class F>
F bminus_eps(int i, const LoopMatrix<F>& X) {
  F d = unfold_entry(X, i + 1, i + 1);
  if (detail::zero_test(d)) throw DegenerateInput("diagonal entry vanishes");
  return unfold_entry(X, i + 1, i) / d;
}

template <class F>
std::vector<F> bminus_gamma(const LoopMatrix<F>& X) {
  std::vector<F> g;
  for (int j = 1; j <= X.rows(); ++j) g.push_back(unfold_entry(X, j, j));
  return g;
}

template <class F>
LoopMatrix<F> bminus_e(int i, const F& c, const LoopMatrix<F>& X) {
  const int n = X.rows();
  F phi = bminus_phi(i, X), eps = bminus_eps(i, X);
  if (detail::zero_test(phi) || detail::zero_test(eps)) throw DegenerateInput("φ_i or ε_i vanishes");
  return xhat(n, i, (c - F(1)) / phi) * X * xhat(n, i, (F(1) / c - F(1)) / eps);
}

template <class F>
XPoint<F> uaction_X(const LoopMatrix<F>& u, const XPoint<F>& x) {
  F lambda = signed_value(parity_sign(x.k() - 1), x.t);
  Matrix<F> M = eval_lambda(u, lambda) * x.N.mat();
  return XPoint<F>{GrassmannPoint<F>(M), x.t};
}

#define GEOMR_INSTANTIATE(F)                                                                 \
  template LoopMatrix<F> constant_loop<F>(const Matrix<F>&);                                 \
  template Matrix<F> eval_lambda<F>(const LoopMatrix<F>&, const F&);                         \
  template LoopMatrix<F> lambda_sign<F>(const LoopMatrix<F>&, int);                          \
  template LoopMatrix<F> g_of<F>(const XPoint<F>&);                                          \
  template LoopMatrix<F> g_of<F>(const std::vector<XPoint<F>>&);                             \
  template Matrix<F> g_eval<F>(const XPoint<F>&, const F&);                                  \
  template F unfold_entry<F>(const LoopMatrix<F>&, long, long);                              \
  template LoopMatrix<F> fold<F>(int, int, int, const std::function<F(long, long)>&);        \
  template LoopMatrix<F> sh<F>(const LoopMatrix<F>&);                                        \
  template LoopMatrix<F> fl<F>(const LoopMatrix<F>&);                                        \
  template Matrix<F> fl<F>(const Matrix<F>&);                                                \
  template LoopMatrix<F> inv<F>(const LoopMatrix<F>&);                                       \
  template LoopPoly<F> minor_delta<F>(const LoopMatrix<F>&, const IndexSet&, const IndexSet&); \
  template bool is_m_shifted_unipotent<F>(const LoopMatrix<F>&, int);                        \
  template bool is_in_Bminus<F>(const LoopMatrix<F>&);                                       \
  template F chi<F>(const LoopMatrix<F>&, int);                                              \
  template F decoration_f<F>(const std::vector<XPoint<F>>&);                                 \
  template LoopMatrix<F> xhat<F>(int, int, const F&);                                        \
  template F tau_i<F>(int, const F&, const LoopMatrix<F>&);                                  \
  template LoopMatrix<F> uaction_Bminus<F>(int, const F&, const LoopMatrix<F>&);             \
  template LoopMatrix<F> bminus_e<F>(int, const F&, const LoopMatrix<F>&);                   \
  template std::vector<F> bminus_gamma<F>(const LoopMatrix<F>&);                             \
  template F bminus_phi<F>(int, const LoopMatrix<F>&);                                       \
  template F bminus_eps<F>(int, const LoopMatrix<F>&);                                       \
  template XPoint<F> uaction_X<F>(const LoopMatrix<F>&, const XPoint<F>&);

GEOMR_INSTANTIATE(Rational)
GEOMR_INSTANTIATE(EpsRational)

}  // namespace geomr
