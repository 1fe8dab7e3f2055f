#include "json_io.hpp"

#include "geomr/errors.hpp"

namespace geomr::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

long integer(const json& j, const char* what) {
  if (!j.is_number_integer()) throw InvalidInput(std::string(what) + " must be an integer");
  return j.get<long>();
}

int dimension(const json& j) {
  long n = integer(field(j, "n"), "n");
  if (n < 1 || n > 64) throw InvalidInput("n must lie in [1, 64]");
  return static_cast<int>(n);
}

}  // namespace

json to_json(const Rational& x) { return to_string(x); }

json to_json(const Tableau& T) { return {{"n", T.n}, {"rows", T.rows}}; }

json to_json(const KRectangle& r) { return {{"n", r.n}, {"k", r.k}, {"B", r.B}, {"L", r.L}}; }

json to_json(const XPoint<Rational>& x) {
  json mat = json::array();
  const auto& M = x.N.mat();
  for (int i = 1; i <= M.rows(); ++i) {
    json row = json::array();
    for (int j = 1; j <= M.cols(); ++j) row.push_back(to_json(M(i, j)));
    mat.push_back(row);
  }
  return {{"n", x.n()}, {"k", x.k()}, {"mat", mat}, {"t", to_json(x.t)}};
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InvalidInput("rational must be an integer or a \"p/q\" string");
}

Tableau tableau_from_json(const json& j) {
  Tableau T{dimension(j), {}};
  const json& rows = field(j, "rows");
  if (!rows.is_array()) throw InvalidInput("rows must be an array");
  for (const auto& row : rows) {
    if (!row.is_array()) throw InvalidInput("each row must be an array");
    std::vector<int> r;
    for (const auto& v : row) r.push_back(static_cast<int>(integer(v, "tableau entry")));
    T.rows.push_back(std::move(r));
  }
  validate(T);
  return T;
}

KRectangle krect_from_json(const json& j) {
  if (is_tableau(j)) {
    Tableau T = tableau_from_json(j);
    if (T.rows.empty() || !T.is_rectangular()) throw InvalidInput("tableau must be a nonempty rectangle");
    return tableau_rectangle(T);
  }
  KRectangle r{dimension(j), static_cast<int>(integer(field(j, "k"), "k")), {}, integer(field(j, "L"), "L")};
  if (r.k < 1 || r.k > r.n) throw InvalidInput("k must lie in [1, n]");
  const json& B = field(j, "B");
  if (!B.is_array() || static_cast<int>(B.size()) != r.k) throw InvalidInput("B must have k rows");
  for (const auto& row : B) {
    if (!row.is_array() || static_cast<int>(row.size()) != r.n - r.k) throw InvalidInput("each row of B needs n-k entries");
    std::vector<long> out;
    for (const auto& v : row) out.push_back(integer(v, "B entry"));
    r.B.push_back(std::move(out));
  }
  return r;
}

XPoint<Rational> point_from_json(const json& j) {
  const int n = dimension(j);
  const long k = integer(field(j, "k"), "k");
  if (k < 1 || k >= n) throw InvalidInput("k must lie in [1, n-1]");
  const json& mat = field(j, "mat");
  if (!mat.is_array() || static_cast<int>(mat.size()) != n) throw InvalidInput("mat must have n rows");
  Matrix<Rational> M(n, static_cast<int>(k));
  for (int i = 0; i < n; ++i) {
    if (!mat[i].is_array() || static_cast<long>(mat[i].size()) != k) throw InvalidInput("each row of mat needs k entries");
    for (int c = 0; c < k; ++c) M(i + 1, c + 1) = rational_from_json(mat[i][c]);
  }
  return XPoint<Rational>{GrassmannPoint<Rational>(M), rational_from_json(field(j, "t"))};
}

bool is_tableau(const json& j) { return j.is_object() && j.contains("rows"); }
bool is_point(const json& j) { return j.is_object() && j.contains("mat"); }

const json& factors(const json& request, std::size_t expected) {
  const json& fs = field(request, "factors");
  if (!fs.is_array() || fs.empty()) throw InvalidInput("factors must be a nonempty array");
  if (expected && fs.size() != expected)
    throw InvalidInput("expected " + std::to_string(expected) + " factors, got " + std::to_string(fs.size()));
  return fs;
}

}  // namespace geomr::io
