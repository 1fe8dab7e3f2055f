#include "geomr/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>

#include "geomr/errors.hpp"

namespace geomr {

bool Tableau::is_rectangular() const {
  for (const auto& r : rows)
    if (r.size() != rows[0].size()) return false;
  return true;
}

Tableau Tableau::trimmed() const {
  Tableau out{n, {}};
  for (const auto& r : rows)
    if (!r.empty()) out.rows.push_back(r);
  return out;
}

void validate(const Tableau& T) {
  if (T.n < 1) throw InvalidInput("tableau entry bound n must be positive");
  for (std::size_t r = 0; r < T.rows.size(); ++r) {
    const auto& row = T.rows[r];
    if (r > 0 && row.size() > T.rows[r - 1].size())
      throw InvalidInput("tableau rows must weakly decrease in length");
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] < 1 || row[c] > T.n) throw InvalidInput("tableau entry out of [1, n]");
      if (c > 0 && row[c] < row[c - 1]) throw InvalidInput("tableau row not weakly increasing");
      if (r > 0 && c < T.rows[r - 1].size() && row[c] <= T.rows[r - 1][c])
        throw InvalidInput("tableau column not strictly increasing");
    }
  }
}

std::vector<int> content(const Tableau& T) {
  std::vector<int> out(T.n, 0);
  for (const auto& r : T.rows)
    for (int x : r) ++out[x - 1];
  return out;
}

bool GTPattern::is_valid() const {
  if (static_cast<int>(A.size()) != n) return false;
  for (int j = 1; j <= n; ++j) {
    if (static_cast<int>(A[j - 1].size()) != j) return false;
    for (int i = 1; i <= j; ++i) {
      if (at(i, j) < 0) return false;
      if (j < n && (at(i, j + 1) < at(i, j) || at(i, j) < at(i + 1, j + 1))) return false;
    }
  }
  return true;
}

GTPattern gt_from_tableau(const Tableau& T) {
  validate(T);
  GTPattern P{T.n, {}};
  for (int j = 1; j <= T.n; ++j) {
    std::vector<long> row(j, 0);
    for (int i = 1; i <= j && i <= T.num_rows(); ++i) {
      const auto& r = T.rows[i - 1];
      row[i - 1] = std::count_if(r.begin(), r.end(), [j](int x) { return x <= j; });
    }
    P.A.push_back(std::move(row));
  }
  return P;
}

Tableau tableau_from_gt(const GTPattern& P) {
  if (!P.is_valid()) throw InvalidInput("not a Gelfand-Tsetlin pattern");
  Tableau T{P.n, {}};
  for (int i = 1; i <= P.n; ++i) {
    std::vector<int> row;
    for (int j = i; j <= P.n; ++j) {
      long prev = (j - 1 >= i) ? P.at(i, j - 1) : 0;
      for (long c = prev; c < P.at(i, j); ++c) row.push_back(j);
    }
    if (row.empty()) break;
    T.rows.push_back(std::move(row));
  }
  return T;
}

long KRectangle::at(int i, int j) const {
  if (j == i - 1) return 0;
  if (j == i + n - k) return L;
  if (i < 1 || i > k || j < i || j > i + n - k - 1) throw InvalidInput("k-rectangle index out of range");
  return B[i - 1][j - i];
}

bool KRectangle::is_valid() const {
  if (k < 1 || k > n || L < 0 || static_cast<int>(B.size()) != k) return false;
  for (int i = 1; i <= k; ++i)
    if (static_cast<int>(B[i - 1].size()) != n - k) return false;
  return gt_completion(*this).is_valid();
}

KRectangle make_krect(int n, int k, const std::vector<long>& flat_B, long L) {
  if (k < 1 || k > n) throw InvalidInput("k-rectangle needs 1 <= k <= n");
  if (static_cast<int>(flat_B.size()) != k * (n - k))
    throw InvalidInput("k-rectangle needs k*(n-k) coordinates");
  KRectangle r{n, k, {}, L};
  for (int i = 0; i < k; ++i)
    r.B.emplace_back(flat_B.begin() + i * (n - k), flat_B.begin() + (i + 1) * (n - k));
  return r;
}

GTPattern gt_completion(const KRectangle& r) {
  GTPattern P{r.n, {}};
  for (int j = 1; j <= r.n; ++j) {
    std::vector<long> row(j, 0);
    for (int i = 1; i <= j && i <= r.k; ++i)
      row[i - 1] = (j <= i + r.n - r.k - 1) ? r.B[i - 1][j - i] : r.L;
    P.A.push_back(std::move(row));
  }
  return P;
}

Tableau rectangle_tableau(const KRectangle& r) {
  if (!r.is_valid()) throw InvalidInput("k-rectangle coordinates do not interlace");
  Tableau T{r.n, {}};
  for (int i = 1; i <= r.k; ++i) {
    std::vector<int> row;
    for (int j = i; j <= i + r.n - r.k; ++j)
      for (long c = 0; c < r.count(i, j); ++c) row.push_back(j);
    T.rows.push_back(std::move(row));
  }
  return T;
}

KRectangle tableau_rectangle(const Tableau& T) {
  validate(T);
  if (!T.is_rectangular() || T.rows.empty()) throw InvalidInput("tableau is not a rectangle");
  int n = T.n, k = T.num_rows();
  KRectangle r{n, k, {}, T.num_cols()};
  for (int i = 1; i <= k; ++i) {
    const auto& row = T.rows[i - 1];
    std::vector<long> Bi;
    for (int j = i; j <= i + n - k - 1; ++j)
      Bi.push_back(std::count_if(row.begin(), row.end(), [j](int x) { return x <= j; }));
    r.B.push_back(std::move(Bi));
  }
  if (!r.is_valid()) throw InvalidInput("tableau entries violate the row bounds of a rectangle");
  return r;
}

namespace {

void row_insert(std::vector<std::vector<int>>& P, int x) {
  for (auto& row : P) {
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return;
    }
    std::swap(*it, x);
  }
  P.push_back({x});
}

}  // namespace

Tableau schensted_product(const Tableau& T, const Tableau& U) {
  if (T.n != U.n) throw InvalidInput("tableau product needs a shared entry bound");
  Tableau out = T.trimmed();
  for (auto r = U.rows.rbegin(); r != U.rows.rend(); ++r)
    for (int x : *r) row_insert(out.rows, x);
  return out;
}

std::vector<Tableau> enumerate_rect(int n, int k, int L) {
  if (n < 1 || k < 1 || k > n || L < 0) throw InvalidInput("enumerate_rect needs 1 <= k <= n, L >= 0");
  std::vector<Tableau> out;
  Tableau T{n, std::vector<std::vector<int>>(k, std::vector<int>(L, 0))};
  std::function<void(int)> fill = [&](int cell) {
    if (cell == k * L) {
      out.push_back(T);
      return;
    }
    int r = cell / L, c = cell % L;
    int lo = 1;
    if (c > 0) lo = std::max(lo, T.rows[r][c - 1]);
    if (r > 0) lo = std::max(lo, T.rows[r - 1][c] + 1);
    int hi = n - (k - 1 - r);
    for (int v = lo; v <= hi; ++v) {
      T.rows[r][c] = v;
      fill(cell + 1);
    }
  };
  if (L == 0)
    out.push_back(T);
  else
    fill(0);
  return out;
}

namespace {

const std::vector<Tableau>& cached_rect(int n, int k, int L) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::vector<Tableau>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(n, k, L);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, enumerate_rect(n, k, L)).first;
  return it->second;
}

void require_rect(const Tableau& T, const char* what) {
  validate(T);
  if (T.rows.empty() || !T.is_rectangular())
    throw InvalidInput(std::string(what) + " must be a rectangular tableau with at least one row");
}

}  // namespace

std::pair<Tableau, Tableau> comb_R_oracle(const Tableau& T, const Tableau& U) {
  require_rect(T, "T");
  require_rect(U, "U");
  if (T.n != U.n) throw InvalidInput("tableaux must share n");
  const int n = T.n;
  Tableau target = schensted_product(T, U).trimmed();
  std::vector<int> want = content(target);
  const auto& lefts = cached_rect(n, U.num_rows(), U.num_cols());
  const auto& rights = cached_rect(n, T.num_rows(), T.num_cols());
  std::optional<std::pair<Tableau, Tableau>> found;
  for (const auto& Up : lefts) {
    std::vector<int> rest = want;
    bool ok = true;
    for (const auto& row : Up.rows)
      for (int x : row)
        if (--rest[x - 1] < 0) ok = false;
    if (!ok) continue;
    for (const auto& Tp : rights) {
      if (content(Tp) != rest) continue;
      if (schensted_product(Up, Tp).trimmed() != target) continue;
      if (found) throw std::logic_error("combinatorial R-matrix factorization is not unique");
      found.emplace(Up, Tp);
    }
  }
  if (!found) throw std::logic_error("no factorization U' * T' = T * U found");
  return *found;
}

int comb_coenergy(const Tableau& T, const Tableau& U) {
  Tableau P = schensted_product(T, U).trimmed();
  int rows = std::max(T.num_rows(), U.num_rows());
  int out = 0;
  for (int r = rows; r < P.num_rows(); ++r) out += static_cast<int>(P.rows[r].size());
  return out;
}

std::vector<std::pair<int, int>> reading_order(const Tableau& T, ReadingWord w) {
  std::vector<std::pair<int, int>> out;
  if (w == ReadingWord::ColumnsRightToLeftTopDown) {
    int width = 0;
    for (const auto& r : T.rows) width = std::max(width, static_cast<int>(r.size()));
    for (int c = width - 1; c >= 0; --c)
      for (int r = 0; r < T.num_rows(); ++r)
        if (c < static_cast<int>(T.rows[r].size())) out.emplace_back(r, c);
  } else {
    for (int r = T.num_rows() - 1; r >= 0; --r)
      for (int c = 0; c < static_cast<int>(T.rows[r].size()); ++c) out.emplace_back(r, c);
  }
  return out;
}

CrystalData tensor_data(CrystalData a, CrystalData b) {
  return {b.eps + std::max(0, a.eps - b.phi), a.phi + std::max(0, b.phi - a.eps)};
}

namespace {

struct WordScan {
  std::vector<std::pair<int, int>> cells;
  std::vector<CrystalData> letter;  // per position
  std::vector<CrystalData> prefix;  // prefix[p] = data of the first p letters
};

WordScan scan(const Tableau& T, int i, ReadingWord w) {
  if (i < 1 || i >= T.n) throw InvalidInput("classical crystal index must lie in [1, n-1]");
  WordScan s;
  s.cells = reading_order(T, w);
  s.prefix.push_back({0, 0});
  for (auto [r, c] : s.cells) {
    int x = T.rows[r][c];
    CrystalData d{x == i + 1 ? 1 : 0, x == i ? 1 : 0};
    s.letter.push_back(d);
    s.prefix.push_back(tensor_data(s.prefix.back(), d));
  }
  return s;
}

}  // namespace

std::optional<Tableau> crystal_e(const Tableau& T, int i, ReadingWord w) {
  WordScan s = scan(T, i, w);
  if (s.prefix.back().eps == 0) return std::nullopt;
  std::size_t p = s.cells.size();
  while (p > 0 && tensor_e_acts_left(s.prefix[p - 1], s.letter[p - 1])) --p;
  if (p == 0 || s.letter[p - 1].eps == 0) return std::nullopt;
  Tableau out = T;
  auto [r, c] = s.cells[p - 1];
  out.rows[r][c] = i;
  return out;
}

std::optional<Tableau> crystal_f(const Tableau& T, int i, ReadingWord w) {
  WordScan s = scan(T, i, w);
  if (s.prefix.back().phi == 0) return std::nullopt;
  std::size_t p = s.cells.size();
  while (p > 0 && tensor_f_acts_left(s.prefix[p - 1], s.letter[p - 1])) --p;
  if (p == 0 || s.letter[p - 1].phi == 0) return std::nullopt;
  Tableau out = T;
  auto [r, c] = s.cells[p - 1];
  out.rows[r][c] = i + 1;
  return out;
}

int crystal_eps(const Tableau& T, int i, ReadingWord w) { return scan(T, i, w).prefix.back().eps; }
int crystal_phi(const Tableau& T, int i, ReadingWord w) { return scan(T, i, w).prefix.back().phi; }
std::vector<int> crystal_weight(const Tableau& T) { return content(T); }

Tableau promotion_jdt(const Tableau& T) {
  require_rect(T, "promotion input");
  const int k = T.num_rows(), L = T.num_cols(), n = T.n;
  const int hole = 0;
  auto P = T.rows;
  std::vector<int> hole_cols;
  for (int c = 0; c < L; ++c)
    if (P[k - 1][c] == n) {
      P[k - 1][c] = hole;
      hole_cols.push_back(c);
    }
  for (int c0 : hole_cols) {
    int r = k - 1, c = c0;
    while (true) {
      bool up = r > 0 && P[r - 1][c] != hole;
      bool left = c > 0 && P[r][c - 1] != hole;
      if (!up && !left) break;
      if (up && (!left || P[r - 1][c] >= P[r][c - 1])) {
        P[r][c] = P[r - 1][c];
        P[r - 1][c] = hole;
        --r;
      } else {
        P[r][c] = P[r][c - 1];
        P[r][c - 1] = hole;
        --c;
      }
    }
  }
  for (auto& row : P)
    for (int& x : row) x = (x == hole) ? 1 : x + 1;
  return Tableau{n, P};
}

Tableau rectangle_evacuation(const Tableau& T) {
  require_rect(T, "evacuation input");
  Tableau out{T.n, T.rows};
  std::reverse(out.rows.begin(), out.rows.end());
  for (auto& row : out.rows) {
    std::reverse(row.begin(), row.end());
    for (int& x : row) x = T.n + 1 - x;
  }
  return out;
}

Tableau column_complement(const Tableau& T) {
  require_rect(T, "column complement input");
  const int k = T.num_rows(), L = T.num_cols(), n = T.n;
  if (k >= n) throw InvalidInput("column complement needs k < n");
  Tableau out{n, std::vector<std::vector<int>>(n - k)};
  for (int c = L - 1; c >= 0; --c) {
    std::vector<bool> used(n + 1, false);
    for (int r = 0; r < k; ++r) used[T.rows[r][c]] = true;
    int r = 0;
    for (int v = 1; v <= n; ++v)
      if (!used[v]) out.rows[r++].push_back(v);
  }
  return out;
}

std::vector<long> one_row_kappa(const std::vector<long>& a, const std::vector<long>& b) {
  const int n = static_cast<int>(a.size());
  if (n < 1 || static_cast<int>(b.size()) != n) throw InvalidInput("one-row inputs need equal length n");
  auto at = [n](const std::vector<long>& v, int j) { return v[((j - 1) % n + n) % n]; };
  std::vector<long> kappa(n);
  for (int j = 1; j <= n; ++j) {
    long best = 0;
    for (int r = 0; r <= n - 1; ++r) {
      long s = 0;
      for (int m = j; m <= j + r - 1; ++m) s += at(b, m);
      for (int m = j + r + 1; m <= j + n - 1; ++m) s += at(a, m);
      if (r == 0 || s < best) best = s;
    }
    kappa[j - 1] = best;
  }
  return kappa;
}

std::pair<std::vector<long>, std::vector<long>> one_row_comb_R(const std::vector<long>& a,
                                                               const std::vector<long>& b) {
  const int n = static_cast<int>(a.size());
  for (long x : a)
    if (x < 0) throw InvalidInput("one-row counts must be nonnegative");
  for (long x : b)
    if (x < 0) throw InvalidInput("one-row counts must be nonnegative");
  std::vector<long> kappa = one_row_kappa(a, b);
  std::vector<long> bp(n), ap(n);
  for (int j = 0; j < n; ++j) {
    long next = kappa[(j + 1) % n];
    bp[j] = b[j] + next - kappa[j];
    ap[j] = a[j] + kappa[j] - next;
  }
  return {bp, ap};
}

Tableau one_row_tableau(int n, const std::vector<long>& counts) {
  if (static_cast<int>(counts.size()) != n) throw InvalidInput("one-row tableau needs n counts");
  Tableau T{n, {{}}};
  for (int j = 1; j <= n; ++j)
    for (long c = 0; c < counts[j - 1]; ++c) T.rows[0].push_back(j);
  return T;
}

}  // namespace geomr
