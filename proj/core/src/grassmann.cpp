#include "geomr/grassmann.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace geomr {

IndexSet interval(int a, int b) {
  IndexSet out;
  for (int i = a; i <= b; ++i) out.push_back(i);
  return out;
}

IndexSet join(IndexSet a, const IndexSet& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

IndexSet reduce_mod(const IndexSet& I, int n) {
  IndexSet out;
  for (int i : I) out.push_back(((i - 1) % n + n) % n + 1);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

IndexSet w0(const IndexSet& J, int n) {
  IndexSet out;
  for (int j : reduce_mod(J, n)) out.push_back(n - j + 1);
  std::sort(out.begin(), out.end());
  return out;
}

IndexSet complement(const IndexSet& J, int n) {
  IndexSet r = reduce_mod(J, n), out;
  for (int i = 1; i <= n; ++i)
    if (!std::binary_search(r.begin(), r.end(), i)) out.push_back(i);
  return out;
}

IndexSet star(const IndexSet& J, int n) { return w0(complement(J, n), n); }

IndexSet shift(const IndexSet& J, int c, int n) {
  IndexSet out;
  for (int j : J) out.push_back(j - c);
  return reduce_mod(out, n);
}

int cyclic_interval_count(const IndexSet& J, int n) {
  IndexSet r = reduce_mod(J, n);
  if (r.empty()) return 0;
  if (static_cast<int>(r.size()) == n) return 1;
  std::vector<bool> in(n + 1, false);
  for (int j : r) in[j] = true;
  int runs = 0;
  for (int j = 1; j <= n; ++j) {
    int prev = (j == 1) ? n : j - 1;
    if (in[j] && !in[prev]) ++runs;
  }
  return runs;
}

std::vector<IndexSet> subsets(int n, int r) {
  std::vector<IndexSet> out;
  if (r < 0 || r > n) return out;
  IndexSet cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i <= n - (r - static_cast<int>(cur.size())) + 1; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

namespace {

unsigned mask_of(const IndexSet& sorted) {
  unsigned m = 0;
  for (int i : sorted) m |= 1u << (i - 1);
  return m;
}

}  // namespace

template <class F>
GrassmannPoint<F>::GrassmannPoint(Matrix<F> mat) : mat_(std::move(mat)) {
  const int n = mat_.rows(), k = mat_.cols();
  if (n < 1 || k < 0 || k > n || n > 16) throw InvalidInput("Grassmannian point needs 0 <= k <= n <= 16");
  pl_.assign(std::size_t(1) << n, F(0));
  IndexSet cols = interval(1, k);
  bool any = false;
  for (const auto& I : subsets(n, k)) {
    F v = det(mat_.submatrix(I, cols));
    if (!detail::zero_test(v)) any = true;
    pl_[mask_of(I)] = std::move(v);
  }
  if (!any) throw DegenerateInput("matrix does not have full column rank");
}

template <class F>
F GrassmannPoint<F>::plucker(const IndexSet& I) const {
  IndexSet r = reduce_mod(I, n());
  if (static_cast<int>(r.size()) != k() || static_cast<int>(I.size()) != k()) return F(0);
  return pl_[mask_of(r)];
}

template <class F>
bool GrassmannPoint<F>::same_subspace(const GrassmannPoint& o) const {
  if (n() != o.n() || k() != o.k()) return false;
  std::size_t ref = pl_.size();
  for (std::size_t m = 0; m < pl_.size(); ++m)
    if (!detail::zero_test(pl_[m])) {
      ref = m;
      break;
    }
  if (ref == pl_.size() || detail::zero_test(o.pl_[ref])) return false;
  for (std::size_t m = 0; m < pl_.size(); ++m)
    if (pl_[m] * o.pl_[ref] != o.pl_[m] * pl_[ref]) return false;
  return true;
}

template <class F>
F RectCoords<F>::at(int i, int j) const {
  if (j == i - 1) return F(1);
  if (j == i + n - k) return t;
  if (i < 1 || i > k || j < i || j > i + n - k - 1) throw InvalidInput("rectangle index out of range");
  return X[i - 1][j - i];
}

template <class F>
Matrix<F> chevalley_matrix(int n, int a, int b, const std::vector<F>& z) {
  if (a < 1 || b > n || a > b || static_cast<int>(z.size()) != b - a + 1)
    throw InvalidInput("chevalley_matrix needs 1 <= a <= b <= n and b-a+1 values");
  Matrix<F> m = Matrix<F>::identity(n);
  for (int i = a; i <= b; ++i) m(i, i) = z[i - a];
  for (int i = a + 1; i <= b; ++i) m(i, i - 1) = F(1);
  return m;
}

namespace {

template <class F>
void check_rect(const RectCoords<F>& X) {
  if (X.k < 1 || X.k >= X.n) throw InvalidInput("rectangle needs 1 <= k <= n-1");
  if (static_cast<int>(X.X.size()) != X.k) throw InvalidInput("rectangle has the wrong number of rows");
  for (const auto& row : X.X) {
    if (static_cast<int>(row.size()) != X.n - X.k) throw InvalidInput("rectangle row has the wrong length");
    for (const auto& v : row)
      if (detail::zero_test(v)) throw DegenerateInput("rectangle coordinate is zero");
  }
  if (detail::zero_test(X.t)) throw DegenerateInput("rectangle parameter t is zero");
}

}  // namespace

template <class F>
Matrix<F> phi_matrix(const RectCoords<F>& X) {
  check_rect(X);
  const int n = X.n, k = X.k;
  Matrix<F> out = Matrix<F>::identity(n);
  for (int i = k; i >= 1; --i) {
    std::vector<F> z;
    for (int j = i; j <= i + n - k; ++j) z.push_back(X.ratio(i, j));
    out = out * chevalley_matrix(n, i, i + n - k, z);
  }
  return out;
}

template <class F>
XPoint<F> first_columns_point(const Matrix<F>& A, int k, const F& t) {
  if (detail::zero_test(t)) throw DegenerateInput("t must be nonzero");
  return XPoint<F>{GrassmannPoint<F>(A.first_columns(k)), t};
}

template <class F>
XPoint<F> theta(const RectCoords<F>& X) {
  return first_columns_point(phi_matrix(X), X.n - X.k, X.t);
}

IndexSet basic_subset(int n, int m, int i, int j) {
  return join(interval(i, j), interval(n - m + j - i + 2, n));
}

template <class F>
RectCoords<F> theta_inverse(const XPoint<F>& x) {
  const int n = x.n(), m = x.k();
  if (m < 1 || m >= n) throw InvalidInput("theta_inverse needs 1 <= k <= n-1");
  RectCoords<F> out;
  out.n = n;
  out.k = n - m;
  out.t = x.t;
  for (int i = 1; i <= n - m; ++i) {
    std::vector<F> row;
    for (int j = i; j <= i + m - 1; ++j) {
      F num = x.P(basic_subset(n, m, i, j));
      F den = x.P(basic_subset(n, m, i + 1, j));
      if (detail::zero_test(num) || detail::zero_test(den))
        throw DegenerateInput("basic Plücker coordinate vanishes");
      row.push_back(num / den);
    }
    out.X.push_back(std::move(row));
  }
  return out;
}

template <class F>
Matrix<F> PlanarNetwork<F>::path_matrix() const {
  const int ns = static_cast<int>(sources.size()), nt = static_cast<int>(sinks.size());
  // Kahn order so that path sums can be pushed forward once.
  std::vector<int> indeg(num_vertices, 0);
  std::vector<std::vector<const Edge*>> out(num_vertices);
  for (const auto& e : edges) {
    ++indeg[e.to];
    out[e.from].push_back(&e);
  }
  std::vector<int> order;
  for (int v = 0; v < num_vertices; ++v)
    if (indeg[v] == 0) order.push_back(v);
  for (std::size_t h = 0; h < order.size(); ++h)
    for (const Edge* e : out[order[h]])
      if (--indeg[e->to] == 0) order.push_back(e->to);
  if (static_cast<int>(order.size()) != num_vertices) throw InvalidInput("network has a cycle");
  Matrix<F> M(ns, nt);
  for (int s = 0; s < ns; ++s) {
    std::vector<F> w(num_vertices, F(0));
    w[sources[s]] = F(1);
    for (int v : order) {
      if (detail::zero_test(w[v])) continue;
      for (const Edge* e : out[v]) w[e->to] += w[v] * e->weight;
    }
    for (int t = 0; t < nt; ++t) M(s + 1, t + 1) = w[sinks[t]];
  }
  return M;
}

template <class F>
F lindstrom_minor(const PlanarNetwork<F>& G, const IndexSet& I, const IndexSet& J) {
  if (I.size() != J.size()) throw InvalidInput("Lindström minor needs |I| = |J|");
  const int r = static_cast<int>(I.size());
  std::vector<std::vector<const typename PlanarNetwork<F>::Edge*>> out(G.num_vertices);
  for (const auto& e : G.edges) out[e.from].push_back(&e);

  struct Path {
    std::vector<int> vertices;
    F weight;
  };
  auto all_paths = [&](int from, int to) {
    std::vector<Path> paths;
    std::vector<int> stack{from};
    std::function<void(int, F)> dfs = [&](int v, F w) {
      if (v == to) {
        paths.push_back({stack, w});
        return;
      }
      for (const auto* e : out[v]) {
        stack.push_back(e->to);
        dfs(e->to, w * e->weight);
        stack.pop_back();
      }
    };
    dfs(from, F(1));
    return paths;
  };

  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  F total(0);
  do {
    int inversions = 0;
    for (int a = 0; a < r; ++a)
      for (int b = a + 1; b < r; ++b)
        if (perm[a] > perm[b]) ++inversions;
    std::vector<std::vector<Path>> choices(r);
    for (int s = 0; s < r; ++s)
      choices[s] = all_paths(G.sources[I[s] - 1], G.sinks[J[perm[s]] - 1]);
    std::vector<char> used(G.num_vertices, 0);
    std::function<F(int)> rec = [&](int s) -> F {
      if (s == r) return F(1);
      F acc(0);
      for (const auto& p : choices[s]) {
        bool clash = false;
        for (int v : p.vertices)
          if (used[v]) clash = true;
        if (clash) continue;
        for (int v : p.vertices) used[v] = 1;
        F rest = rec(s + 1);
        if (!detail::zero_test(rest)) acc += p.weight * rest;
        for (int v : p.vertices) used[v] = 0;
      }
      return acc;
    };
    F term = rec(0);
    total += (inversions % 2) ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

template <class F>
PlanarNetwork<F> tableau_network(const RectCoords<F>& X) {
  check_rect(X);
  const int n = X.n, k = X.k;
  PlanarNetwork<F> G;
  std::map<std::pair<int, int>, int> id;
  auto vertex = [&](int level, int col) {
    auto key = std::make_pair(level, col);
    auto it = id.find(key);
    if (it != id.end()) return it->second;
    id[key] = G.num_vertices;
    return G.num_vertices++;
  };
  for (int j = 1; j <= n; ++j) G.sources.push_back(vertex(k, j - k));
  for (int j = 1; j <= n; ++j) G.sinks.push_back(vertex(0, j));
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= n - k; ++j) G.edges.push_back({vertex(i, j), vertex(i - 1, j), F(1)});
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= n; ++j) {
      F w = (j - i >= 0 && j - i <= n - k) ? X.ratio(i, j) : F(1);
      G.edges.push_back({vertex(i, j - i), vertex(i - 1, j - i + 1), w});
    }
  return G;
}

#define GEOMR_INSTANTIATE(F)                                                          \
  template class GrassmannPoint<F>;                                                   \
  template struct RectCoords<F>;                                                      \
  template struct PlanarNetwork<F>;                                                   \
  template Matrix<F> chevalley_matrix<F>(int, int, int, const std::vector<F>&);       \
  template Matrix<F> phi_matrix<F>(const RectCoords<F>&);                             \
  template XPoint<F> theta<F>(const RectCoords<F>&);                                  \
  template RectCoords<F> theta_inverse<F>(const XPoint<F>&);                          \
  template XPoint<F> first_columns_point<F>(const Matrix<F>&, int, const F&);         \
  template F lindstrom_minor<F>(const PlanarNetwork<F>&, const IndexSet&, const IndexSet&); \
  template PlanarNetwork<F> tableau_network<F>(const RectCoords<F>&);

GEOMR_INSTANTIATE(Rational)
GEOMR_INSTANTIATE(EpsRational)

}  // namespace geomr
