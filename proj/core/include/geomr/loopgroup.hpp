#pragma once

#include <functional>
#include <vector>

#include "geomr/grassmann.hpp"

namespace geomr {

template <class F>
using LoopPoly = LaurentPoly<F>;
// Folded n x n matrix with Laurent-polynomial entries in the loop parameter λ.
template <class F>
using LoopMatrix = Matrix<LoopPoly<F>>;

template <class F>
LoopMatrix<F> constant_loop(const Matrix<F>& A);
template <class F>
Matrix<F> eval_lambda(const LoopMatrix<F>& A, const F& lambda);
// A(λ) -> A(±λ).
template <class F>
LoopMatrix<F> lambda_sign(const LoopMatrix<F>& A, int s);

// g(N|t)_ij = c_ij P_{[j-k+1,j-1] ∪ {i}} / P_{[j-k,j-1]} with c_ij = 1 (j <= k),
// t (j > k, i >= j) or λ (j > k, i < j).
template <class F>
LoopMatrix<F> g_of(const XPoint<F>& x);
// g(x_1) ... g(x_d).
template <class F>
LoopMatrix<F> g_of(const std::vector<XPoint<F>>& xs);
// g(N|t) with λ already specialized; avoids polynomial arithmetic.
template <class F>
Matrix<F> g_eval(const XPoint<F>& x, const F& lambda);

// Unfolded entry X_{rn+i, sn+j} = coefficient of λ^{r-s} in A_ij.
template <class F>
F unfold_entry(const LoopMatrix<F>& A, long i, long j);
// Inverse of unfolding: A_ij = Σ_{d in [dlo, dhi]} X_{dn+i, j} λ^d.
template <class F>
LoopMatrix<F> fold(int n, int dlo, int dhi, const std::function<F(long, long)>& X);

// sh(X)_ij = X_{i-1,j-1} on the unfolded matrix.
template <class F>
LoopMatrix<F> sh(const LoopMatrix<F>& A);
// Reflection over the anti-diagonal.
template <class F>
LoopMatrix<F> fl(const LoopMatrix<F>& A);
template <class F>
Matrix<F> fl(const Matrix<F>& A);
// inv(A)_ij = Δ_{[n]∖{j}, [n]∖{i}}(A|_{λ -> (-1)^n λ}).
template <class F>
LoopMatrix<F> inv(const LoopMatrix<F>& A);

template <class F>
LoopPoly<F> minor_delta(const LoopMatrix<F>& A, const IndexSet& I, const IndexSet& J);

// X_ij = 0 for i - j > m and X_ij = 1 for i - j = m (unfolded).
template <class F>
bool is_m_shifted_unipotent(const LoopMatrix<F>& A, int m);
// Folded test: polynomial entries, nonzero diagonal constant terms and
// above-diagonal entries without constant term.
template <class F>
bool is_in_Bminus(const LoopMatrix<F>& A);
// χ(X) = Σ_j X_{j+m-1, j}; throws InvalidInput unless A is m-shifted unipotent.
template <class F>
F chi(const LoopMatrix<F>& A, int m);
// χ(g(x_1, ..., x_d)).
template <class F>
F decoration_f(const std::vector<XPoint<F>>& xs);

// x̂_i(a) = Id + a E_{i,i+1} for 1 <= i <= n-1 and x̂_0(a) = Id + a λ^{-1} E_{n,1}.
template <class F>
LoopMatrix<F> xhat(int n, int i, const F& a);
// τ_i(a, X) = -a X_{i+1,i+1} / (X_ii + a X_{i+1,i}).
template <class F>
F tau_i(int i, const F& a, const LoopMatrix<F>& X);
// x̂_i(a) . X = x̂_i(a) X x̂_i(τ_i(a, X)).
template <class F>
LoopMatrix<F> uaction_Bminus(int i, const F& a, const LoopMatrix<F>& X);
// Geometric crystal action induced on B^-: x̂_i((c-1)/φ_i) X x̂_i((c^{-1}-1)/ε_i).
template <class F>
LoopMatrix<F> bminus_e(int i, const F& c, const LoopMatrix<F>& X);
// Induced maps from unfolded entries: γ_j = X_jj, φ_i = X_{i+1,i}/X_ii, ε_i = X_{i+1,i}/X_{i+1,i+1}.
template <class F>
std::vector<F> bminus_gamma(const LoopMatrix<F>& X);
template <class F>
F bminus_phi(int i, const LoopMatrix<F>& X);
template <class F>
F bminus_eps(int i, const LoopMatrix<F>& X);
// u.(N|t) = (u|_{λ=(-1)^{k-1} t} N)|t.
template <class F>
XPoint<F> uaction_X(const LoopMatrix<F>& u, const XPoint<F>& x);

}  // namespace geomr
