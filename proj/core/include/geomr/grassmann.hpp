#pragma once

#include <vector>

#include "geomr/exactfield.hpp"
#include "geomr/matrix.hpp"

namespace geomr {

// Index sets may hold any integers; they are reduced mod n into [1, n] on use.
using IndexSet = std::vector<int>;

IndexSet interval(int a, int b);  // [a, b], empty when a > b
IndexSet join(IndexSet a, const IndexSet& b);
// Sorted distinct residues in [1, n].
IndexSet reduce_mod(const IndexSet& I, int n);
IndexSet w0(const IndexSet& J, int n);
IndexSet complement(const IndexSet& J, int n);
// J* = w0 applied to the complement of J.
IndexSet star(const IndexSet& J, int n);
// Subtract c from every element, mod n.
IndexSet shift(const IndexSet& J, int c, int n);
// Maximal runs of cyclically consecutive residues; 0 for the empty set and 1 for [n].
int cyclic_interval_count(const IndexSet& J, int n);
// All r-subsets of [n] in lexicographic order.
std::vector<IndexSet> subsets(int n, int r);

// Column span of a full-rank n x k matrix, with all Plücker coordinates
// precomputed at construction (which doubles as the rank check).
template <class F>
class GrassmannPoint {
 public:
  GrassmannPoint() = default;
  explicit GrassmannPoint(Matrix<F> mat);

  int n() const { return mat_.rows(); }
  int k() const { return mat_.cols(); }
  const Matrix<F>& mat() const { return mat_; }
  // Determinant of the rows I mod n in increasing order; 0 if |I mod n| != k.
  F plucker(const IndexSet& I) const;
  // Same subspace: Plücker vectors agree up to a common scalar.
  bool same_subspace(const GrassmannPoint& o) const;

 private:
  Matrix<F> mat_;
  std::vector<F> pl_;  // indexed by bitmask of the row set
};

// A point N|t of Gr(k, n) x C^*.
template <class F>
struct XPoint {
  GrassmannPoint<F> N;
  F t;

  int n() const { return N.n(); }
  int k() const { return N.k(); }
  F P(const IndexSet& I) const { return N.plucker(I); }
  bool operator==(const XPoint& o) const { return t == o.t && N.same_subspace(o.N); }
  bool operator!=(const XPoint& o) const { return !(*this == o); }
};

// Field-valued k-rectangle coordinates X_ij ((i,j) in R_k) together with t;
// the geometric lift of KRectangle. X[i-1][j-i] holds X_ij.
template <class F>
struct RectCoords {
  int n = 0, k = 0;
  std::vector<std::vector<F>> X;
  F t;

  // X_ij with X_{i,i-1} = 1 and X_{i,i+n-k} = t.
  F at(int i, int j) const;
  // Ratio x_ij = X_ij / X_{i,j-1}.
  F ratio(int i, int j) const { return at(i, j) / at(i, j - 1); }
  bool operator==(const RectCoords& o) const {
    return n == o.n && k == o.k && X == o.X && t == o.t;
  }
};

// Sum_{i in [a,b]} z_i E_ii + Sum_{i not in [a,b]} E_ii + Sum_{i in [a+1,b]} E_{i,i-1};
// z holds z_a, ..., z_b.
template <class F>
Matrix<F> chevalley_matrix(int n, int a, int b, const std::vector<F>& z);

// Tableau matrix of a k-rectangle: M_{[k,k+n-k]} ... M_{[1,1+n-k]} applied to the ratios x_ij.
template <class F>
Matrix<F> phi_matrix(const RectCoords<F>& X);

// Gelfand-Tsetlin parametrization of X_{n-k} by k-rectangles.
template <class F>
XPoint<F> theta(const RectCoords<F>& X);

// Inverse chart: X_ij = P_{I(i,j)} / P_{I(i+1,j)} over the basic subsets,
// giving an (n-m)-rectangle for a point of Gr(m, n).
template <class F>
RectCoords<F> theta_inverse(const XPoint<F>& x);

// The basic m-subset [i,j] ∪ [n-m+j-i+2, n].
IndexSet basic_subset(int n, int m, int i, int j);

// Span of the first k columns of an already-evaluated matrix, tagged with t.
template <class F>
XPoint<F> first_columns_point(const Matrix<F>& A, int k, const F& t);

// Directed acyclic edge-weighted graph with labelled sources and sinks.
template <class F>
struct PlanarNetwork {
  struct Edge {
    int from, to;
    F weight;
  };
  int num_vertices = 0;
  std::vector<Edge> edges;
  std::vector<int> sources;  // sources[i-1] is source i
  std::vector<int> sinks;    // sinks[j-1] is sink j'

  // Entry (i, j) sums the weights of all paths from source i to sink j'.
  Matrix<F> path_matrix() const;
};

// Signed sum over vertex-disjoint path families from sources I to sinks J.
template <class F>
F lindstrom_minor(const PlanarNetwork<F>& G, const IndexSet& I, const IndexSet& J);

// The network Γ_{k,n} whose path matrix is the tableau matrix of X.
template <class F>
PlanarNetwork<F> tableau_network(const RectCoords<F>& X);

}  // namespace geomr
