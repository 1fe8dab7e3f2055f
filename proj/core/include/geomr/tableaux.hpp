#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace geomr {

// Semistandard tableau with entries in [1, n]. Rows are listed top to bottom;
// intermediate products may be non-rectangular. A rectangle B^{k,0} is stored
// as k empty rows so that the row count survives.
struct Tableau {
  int n = 0;
  std::vector<std::vector<int>> rows;

  int num_rows() const { return static_cast<int>(rows.size()); }
  int num_cols() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }
  bool is_rectangular() const;
  // Shape with empty rows dropped; products are compared in this form.
  Tableau trimmed() const;
  bool operator==(const Tableau& o) const { return n == o.n && rows == o.rows; }
  bool operator!=(const Tableau& o) const { return !(*this == o); }
  bool operator<(const Tableau& o) const { return rows < o.rows; }
};

// Throws InvalidInput unless T is semistandard with entries in [1, n].
void validate(const Tableau& T);
std::vector<int> content(const Tableau& T);

// Triangular array A[j-1][i-1] = A_ij for 1 <= i <= j <= n; row j is the
// shape of the subtableau of entries <= j.
struct GTPattern {
  int n = 0;
  std::vector<std::vector<long>> A;

  long at(int i, int j) const { return A[j - 1][i - 1]; }
  bool is_valid() const;
};

GTPattern gt_from_tableau(const Tableau& T);
// Inverse of gt_from_tableau; trailing zero rows of the shape are dropped.
Tableau tableau_from_gt(const GTPattern& P);

// Integer coordinates (B_ij, L) of a k-row rectangular tableau. B[i-1][j-i]
// holds B_ij for i <= j <= i+n-k-1; the array may violate the interlacing
// inequalities (the tropical engine evaluates maps on arbitrary integer
// points), see is_valid().
struct KRectangle {
  int n = 0, k = 0;
  std::vector<std::vector<long>> B;
  long L = 0;

  // B_ij with the boundary conventions B_{i,i-1} = 0 and B_{i,i+n-k} = L.
  long at(int i, int j) const;
  // Number of j's in row i.
  long count(int i, int j) const { return at(i, j) - at(i, j - 1); }
  // The completion to a full Gelfand-Tsetlin pattern interlaces.
  bool is_valid() const;
  bool operator==(const KRectangle& o) const {
    return n == o.n && k == o.k && B == o.B && L == o.L;
  }
  bool operator!=(const KRectangle& o) const { return !(*this == o); }
};

KRectangle make_krect(int n, int k, const std::vector<long>& flat_B, long L);
GTPattern gt_completion(const KRectangle& r);
Tableau rectangle_tableau(const KRectangle& r);
KRectangle tableau_rectangle(const Tableau& T);

// Row insertion of U's entries into T, U read from its bottom row upwards,
// each row left to right.
Tableau schensted_product(const Tableau& T, const Tableau& U);
std::vector<Tableau> enumerate_rect(int n, int k, int L);

// The unique (U', T') with U' * T' = T * U, found by exhaustive search.
std::pair<Tableau, Tableau> comb_R_oracle(const Tableau& T, const Tableau& U);
// Boxes of T * U outside the first max(k1, k2) rows.
int comb_coenergy(const Tableau& T, const Tableau& U);

// Letters of a tableau in the order of its crystal embedding into words.
enum class ReadingWord {
  ColumnsRightToLeftTopDown,  // read columns from the right, each column top to bottom
  RowsBottomUpLeftRight,      // read rows from the bottom, each row left to right
};
// The convention validated against the tropicalized crystal operators.
inline constexpr ReadingWord kReadingWord = ReadingWord::RowsBottomUpLeftRight;

std::vector<std::pair<int, int>> reading_order(const Tableau& T, ReadingWord w);

struct CrystalData {
  int eps = 0;
  int phi = 0;
};

// Classical operators ẽ_i, f̃_i (1 <= i <= n-1) by the bracketing rule on the
// reading word; std::nullopt is the crystal's distinguished 0.
std::optional<Tableau> crystal_e(const Tableau& T, int i, ReadingWord w = kReadingWord);
std::optional<Tableau> crystal_f(const Tableau& T, int i, ReadingWord w = kReadingWord);
int crystal_eps(const Tableau& T, int i, ReadingWord w = kReadingWord);
int crystal_phi(const Tableau& T, int i, ReadingWord w = kReadingWord);
std::vector<int> crystal_weight(const Tableau& T);

// Tensor product rule on a ⊗ b: returns the combined (eps, phi).
CrystalData tensor_data(CrystalData a, CrystalData b);
// True when ẽ_i on a ⊗ b acts on the left factor.
inline bool tensor_e_acts_left(CrystalData a, CrystalData b) { return a.eps > b.phi; }
// True when f̃_i on a ⊗ b acts on the left factor.
inline bool tensor_f_acts_left(CrystalData a, CrystalData b) { return a.eps >= b.phi; }

// Promotion by jeu de taquin: delete the n's, slide the rest to the
// south-east, add 1 to every entry and fill the vacated cells with 1.
// Cross-check for the tropical promotion, which is the primary definition.
Tableau promotion_jdt(const Tableau& T);
// Schützenberger involution of a rectangle: rotate by 180 degrees and
// replace each entry x by n+1-x.
Tableau rectangle_evacuation(const Tableau& T);
// Replace each column by its complement in [n] and reverse the column order.
Tableau column_complement(const Tableau& T);

// One-row combinatorial R-matrix via the min-plus formula for κ̃.
std::pair<std::vector<long>, std::vector<long>> one_row_comb_R(const std::vector<long>& a,
                                                               const std::vector<long>& b);
std::vector<long> one_row_kappa(const std::vector<long>& a, const std::vector<long>& b);
Tableau one_row_tableau(int n, const std::vector<long>& counts);

}  // namespace geomr
