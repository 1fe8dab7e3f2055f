#pragma once

#include <vector>

#include "geomr/loopgroup.hpp"

namespace geomr {

// A point of X_{k_1} x ... x X_{k_d}; all factors share n.
template <class F>
using XProduct = std::vector<XPoint<F>>;

// γ(N|t) = (γ_1, ..., γ_n).
template <class F>
std::vector<F> gamma(const XPoint<F>& x);
template <class F>
F phi(const XPoint<F>& x, int i);
template <class F>
F eps(const XPoint<F>& x, int i);
// e_i^c(N|t); i is a residue mod n.
template <class F>
XPoint<F> e_c(const XPoint<F>& x, int i, const F& c);
// Plücker form of the decoration.
template <class F>
F decoration(const XPoint<F>& x);

// Product structure, binary rules folded from the left.
template <class F>
std::vector<F> gamma(const XProduct<F>& xs);
template <class F>
F phi(const XProduct<F>& xs, int i);
template <class F>
F eps(const XProduct<F>& xs, int i);
template <class F>
XProduct<F> e_c(const XProduct<F>& xs, int i, const F& c);
template <class F>
F decoration(const XProduct<F>& xs);
// The scalars c_1, ..., c_d with e_i^c(x_1, ..., x_d) = (e_i^{c_1} x_1, ..., e_i^{c_d} x_d).
template <class F>
std::vector<F> product_factors(const XProduct<F>& xs, int i, const F& c);

// Rows shifted down cyclically, new first row scaled by (-1)^{k-1} t.
template <class F>
XPoint<F> PR(const XPoint<F>& x);
template <class F>
XPoint<F> PR_inverse(const XPoint<F>& x);
template <class F>
XPoint<F> S(const XPoint<F>& x);
// Q^J = P_{w0(J)}(S(x)).
template <class F>
F Q(const XPoint<F>& x, const IndexSet& J);
// T_{w0}(N^⊥)|t for the form <v_i, v_j> = (-1)^{i+1} δ_ij; lands in X_{n-k}.
template <class F>
XPoint<F> mu(const XPoint<F>& x);
template <class F>
XPoint<F> D(const XPoint<F>& x);

// PR acts factorwise; S and D act factorwise and reverse the order.
template <class F>
XProduct<F> PR(const XProduct<F>& xs);
template <class F>
XProduct<F> PR_inverse(const XProduct<F>& xs);
template <class F>
XProduct<F> S(const XProduct<F>& xs);
template <class F>
XProduct<F> D(const XProduct<F>& xs);

// Profile (k_1, ..., k_d).
template <class F>
std::vector<int> profile(const XProduct<F>& xs);

}  // namespace geomr
