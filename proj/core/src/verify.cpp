#include "geomr/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "geomr/errors.hpp"

namespace geomr {

namespace {

using LP = LoopPoly<Rational>;
using LM = LoopMatrix<Rational>;

constexpr std::size_t kMaxDumps = 5;

int parity(int e) { return (e % 2 == 0) ? 1 : -1; }

LP linear_power(const Rational& t, int sign, int e) {
  LP base = LP(t) + LP::monomial(Rational(sign), 1);
  LP out(1);
  for (int a = 0; a < e; ++a) out *= base;
  return out;
}

bool same(const XProduct<Rational>& a, const XProduct<Rational>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

// (-1)^{(r-1)i} f_i >= 0 for every λ-coefficient.
bool r_nonnegative(const LP& f, int r) {
  if (f.is_zero()) return true;
  for (int e = f.low(); e <= f.high(); ++e) {
    Rational c = f.coeff(e);
    if (((r - 1) * e) % 2 != 0) c = -c;
    if (c < 0) return false;
  }
  return true;
}

std::string describe_set(const IndexSet& I) {
  std::ostringstream os;
  os << '{';
  for (std::size_t a = 0; a < I.size(); ++a) os << (a ? "," : "") << I[a];
  os << '}';
  return os.str();
}

void check_profile(const VerifyConfig& cfg, const std::vector<int>& ks, std::size_t len) {
  if (cfg.n < 2) throw InvalidInput("n must be at least 2");
  if (cfg.trials < 1) throw InvalidInput("trials must be at least 1");
  if (len && ks.size() != len) throw InvalidInput("profile must have " + std::to_string(len) + " entries");
  for (int k : ks)
    if (k < 1 || k > cfg.n - 1) throw InvalidInput("profile entries must lie in [1, n-1]");
}

std::vector<int> profile_or(const VerifyConfig& cfg, std::vector<int> fallback) {
  return cfg.profile.empty() ? fallback : cfg.profile;
}

void gr_identity(const VerifyConfig& cfg, Report& rep) {
  auto ks = profile_or(cfg, {2, 2});
  check_profile(cfg, ks, 0);
  if (ks.size() < 2) throw InvalidInput("profile needs at least two factors");
  PointSampler ps(cfg.seed);
  CheckResult eq{"g(u)g(v) = g(R(u,v))"}, shape{"R preserves k and t of each factor"};
  for (int trial = 0; trial < cfg.trials; ++trial) {
    auto xs = ps.positive_product(cfg.n, ks);
    for (int i = 1; i < static_cast<int>(xs.size()); ++i) {
      auto ys = apply_R(xs, i);
      eq.record(g_of(xs) == g_of(ys), describe(xs));
      shape.record(ys[i - 1].k() == xs[i].k() && ys[i].k() == xs[i - 1].k() && ys[i - 1].t == xs[i].t &&
                       ys[i].t == xs[i - 1].t,
                   describe(xs));
    }
  }
  rep.checks = {eq, shape};
}

void involution(const VerifyConfig& cfg, Report& rep) {
  auto ks = profile_or(cfg, {2, 2});
  check_profile(cfg, ks, 0);
  if (ks.size() < 2) throw InvalidInput("profile needs at least two factors");
  PointSampler ps(cfg.seed);
  CheckResult inv{"R^2 = Id"};
  for (int trial = 0; trial < cfg.trials; ++trial) {
    auto xs = ps.positive_product(cfg.n, ks);
    for (int i = 1; i < static_cast<int>(xs.size()); ++i) inv.record(same(apply_R(apply_R(xs, i), i), xs), describe(xs));
  }
  rep.checks = {inv};
}

void yang_baxter(const VerifyConfig& cfg, Report& rep) {
  auto ks = profile_or(cfg, {1, 2, 1});
  check_profile(cfg, ks, 3);
  PointSampler ps(cfg.seed);
  CheckResult yb{"R1 R2 R1 = R2 R1 R2"};
  for (int trial = 0; trial < cfg.trials; ++trial) {
    auto xs = ps.positive_product(cfg.n, ks);
    yb.record(same(apply_R(apply_R(apply_R(xs, 1), 2), 1), apply_R(apply_R(apply_R(xs, 2), 1), 2)), describe(xs));
  }
  rep.checks = {yb};
}

void equivariance(const VerifyConfig& cfg, Report& rep) {
  auto ks = profile_or(cfg, {1, 2});
  check_profile(cfg, ks, 2);
  PointSampler ps(cfg.seed);
  CheckResult ec{"R e_i^c = e_i^c R"}, pr{"R PR = PR R"}, s{"R S = S R"}, d{"R D = D R"};
  for (int trial = 0; trial < cfg.trials; ++trial) {
    auto xs = ps.positive_product(cfg.n, ks);
    auto rx = apply_R(xs, 1);
    for (int i = 0; i < cfg.n; ++i) {
      Rational c = ps.positive_rational();
      ec.record(same(apply_R(e_c(xs, i, c), 1), e_c(rx, i, c)),
                describe(xs) + " i=" + std::to_string(i) + " c=" + to_string(c));
    }
    pr.record(same(apply_R(PR(xs), 1), PR(rx)), describe(xs));
    s.record(same(apply_R(S(xs), 1), S(rx)), describe(xs));
    d.record(same(apply_R(D(xs), 1), D(rx)), describe(xs));
  }
  rep.checks = {ec, pr, s, d};
}

void trop_agreement(const VerifyConfig& cfg, Report& rep) {
  check_profile(cfg, cfg.profile, cfg.profile.empty() ? 0 : 2);
  std::vector<std::pair<int, int>> pairs;
  if (cfg.profile.empty()) {
    for (int k1 = 1; k1 <= std::min(2, cfg.n - 1); ++k1)
      for (int k2 = 1; k2 <= std::min(2, cfg.n - 1); ++k2) pairs.push_back({k1, k2});
  } else {
    pairs.push_back({cfg.profile[0], cfg.profile[1]});
  }
  CheckResult r{"Trop R = combinatorial R"}, e{"Trop E = combinatorial coenergy"};
  for (auto [k1, k2] : pairs)
    for (int L1 = 0; L1 <= cfg.max_L; ++L1)
      for (int L2 = 0; L2 <= cfg.max_L; ++L2) {
        auto As = enumerate_rect(cfg.n, k1, L1), Bs = enumerate_rect(cfg.n, k2, L2);
        for (const auto& T : As)
          for (const auto& U : Bs) {
            auto [Up, Tp] = comb_R_oracle(T, U);
            auto [bp, ap] = trop_R(tableau_rectangle(T), tableau_rectangle(U));
            bool ok = bp.is_valid() && ap.is_valid() && rectangle_tableau(bp) == Up && rectangle_tableau(ap) == Tp;
            std::string dump = describe(T) + " (x) " + describe(U);
            if (!ok) dump += " expected " + describe(Up) + " (x) " + describe(Tp);
            r.record(ok, dump);
            long got = trop_E(tableau_rectangle(T), tableau_rectangle(U));
            int want = comb_coenergy(T, U);
            e.record(got == want, describe(T) + " (x) " + describe(U) + " expected " + std::to_string(want) +
                                      " got " + std::to_string(got));
          }
      }
  rep.checks = {r, e};
}

int eps0(const Tableau& T) { return crystal_eps(promotion(T), 1); }
int phi0(const Tableau& T) { return crystal_phi(promotion(T), 1); }

void coenergy_law(const VerifyConfig& cfg, Report& rep) {
  auto ks = profile_or(cfg, {1, 2});
  check_profile(cfg, ks, 2);
  PointSampler ps(cfg.seed);
  CheckResult geo{"E(e_0^c(u,v)) law"}, inv{"E invariant under e_i^c, i != 0"}, comb{"combinatorial coenergy law"};
  for (int trial = 0; trial < cfg.trials; ++trial) {
    auto xs = ps.positive_product(cfg.n, ks);
    auto rx = apply_R(xs, 1);
    const auto &u = xs[0], &v = xs[1], &vp = rx[0], &up = rx[1];
    Rational c = ps.positive_rational();
    auto moved = e_c(xs, 0, c);
    Rational expected = geom_E(u, v) * ((eps(u, 0) + phi(v, 0) / c) / (eps(u, 0) + phi(v, 0))) *
                        ((c * eps(vp, 0) + phi(up, 0)) / (eps(vp, 0) + phi(up, 0)));
    geo.record(geom_E(moved[0], moved[1]) == expected, describe(xs) + " c=" + to_string(c));
    for (int i = 1; i < cfg.n; ++i) {
      auto ei = e_c(xs, i, c);
      inv.record(geom_E(ei[0], ei[1]) == geom_E(u, v), describe(xs) + " i=" + std::to_string(i));
    }
  }
  for (int L1 = 0; L1 <= cfg.max_L; ++L1)
    for (int L2 = 0; L2 <= cfg.max_L; ++L2)
      for (const auto& a : enumerate_rect(cfg.n, ks[0], L1))
        for (const auto& b : enumerate_rect(cfg.n, ks[1], L2)) {
          bool acts_left = eps0(a) > phi0(b);
          std::optional<Tableau> na = acts_left ? crystal_e0(a) : std::optional<Tableau>(a);
          std::optional<Tableau> nb = acts_left ? std::optional<Tableau>(b) : crystal_e0(b);
          if (!na || !nb) continue;
          auto [bp, ap] = comb_R_oracle(a, b);
          bool first = eps0(a) > phi0(b), second = eps0(bp) > phi0(ap);
          int delta = (first && second) ? 1 : (!first && !second) ? -1 : 0;
          comb.record(comb_coenergy(*na, *nb) - comb_coenergy(a, b) == delta, describe(a) + " (x) " + describe(b));
        }
  rep.checks = {geo, inv, comb};
}

void symmetry_laws(const VerifyConfig& cfg, Report& rep) {
  check_profile(cfg, cfg.profile, 0);
  const int n = cfg.n;
  std::vector<int> ks = cfg.profile;
  if (ks.empty())
    for (int k = 1; k < n; ++k) ks.push_back(k);
  PointSampler ps(cfg.seed);
  CheckResult dt{"det g = (t + (-1)^k lambda)^(n-k)"}, shc{"g(PR x) = sh g(x)"}, flc{"g(S x) = fl g(x)"},
      invc{"beta g(D x) = inv g(x)"}, rk{"rank g at lambda = (-1)^(k-1) t is k"}, prm{"PR minor law, r <= 3"},
      dm{"D minor law, r <= 3"}, inv2{"S^2 = D^2 = PR^n = Id"};
  for (int trial = 0; trial < cfg.trials; ++trial)
    for (int k : ks) {
      XPoint<Rational> x = ps.positive_point(n, k, ps.positive_rational());
      const std::string dump = describe(x);
      LM A = g_of(x);
      dt.record(det(A) == linear_power(x.t, parity(k), n - k), dump);
      shc.record(g_of(PR(x)) == sh(A), dump);
      flc.record(g_of(S(x)) == fl(A), dump);
      LP beta = linear_power(x.t, parity(k + n), n - k - 1);
      invc.record(g_of(D(x)).map<LP>([&](const LP& p) { return beta * p; }) == inv(A), dump);
      rk.record(rank(g_eval(x, parity(k - 1) > 0 ? x.t : -x.t)) == k, dump);
      XPoint<Rational> y = x;
      for (int a = 0; a < n; ++a) y = PR(y);
      inv2.record(S(S(x)) == x && D(D(x)) == x && y == x, dump);

      LM Apr = g_of(PR(x)), Ad = g_of(D(x));
      LM Aswap = A.map<LP>([n](const LP& p) { return p.sign_substitute(parity(n)); });
      LP alpha = linear_power(x.t, parity(n - k), 1);
      bool pr_ok = true, d_ok = true;
      for (int r = 1; r <= std::min(3, n); ++r)
        for (const auto& I : subsets(n, r))
          for (const auto& J : subsets(n, r)) {
            auto down = [n](const IndexSet& S) { return reduce_mod(shift(S, 1, n), n); };
            LP base = minor_delta(A, down(I), down(J));
            bool in_I = std::find(I.begin(), I.end(), 1) != I.end();
            bool in_J = std::find(J.begin(), J.end(), 1) != J.end();
            LP expected = base;
            if (in_I && !in_J) expected = LP::monomial(Rational(parity(r - 1)), 1) * base;
            if (in_J && !in_I) expected = LP::monomial(Rational(parity(r - 1)), -1) * base;
            pr_ok = pr_ok && minor_delta(Apr, I, J) == expected;
            // Multiply through by powers of α to keep exponents nonnegative.
            LP left_scale(1), right_scale(1);
            for (int a = r; a < n - k; ++a) left_scale *= alpha;
            for (int a = n - k; a < r; ++a) right_scale *= alpha;
            d_ok = d_ok && minor_delta(Ad, I, J) * left_scale ==
                               minor_delta(Aswap, complement(J, n), complement(I, n)) * right_scale;
          }
      prm.record(pr_ok, dump);
      dm.record(d_ok, dump);
    }
  rep.checks = {dt, shc, flc, invc, rk, inv2, prm, dm};
}

void minor_positivity(const VerifyConfig& cfg, Report& rep) {
  const int n = cfg.n;
  std::vector<int> ks = cfg.profile;
  if (ks.empty()) {
    for (int k = 1; k < n; ++k) ks.push_back(k);
  }
  check_profile(cfg, ks, 0);
  PointSampler ps(cfg.seed);
  CheckResult low{"r-positivity of minors, r <= k"}, high{"(t + (-1)^k lambda)^(r-k) divides and quotient is r-positive, r > k"};
  for (int trial = 0; trial < cfg.trials; ++trial)
    for (int k : ks) {
      XPoint<Rational> x = ps.positive_point(n, k, ps.positive_rational());
      LM A = g_of(x);
      LP factor = linear_power(x.t, parity(k), 1);
      for (int r = 1; r <= n; ++r)
        for (const auto& I : subsets(n, r))
          for (const auto& J : subsets(n, r)) {
            if (cyclic_interval_count(I, n) > 2 && cyclic_interval_count(J, n) > 2) continue;
            LP m = minor_delta(A, I, J);
            const std::string dump = describe(x) + " I=" + describe_set(I) + " J=" + describe_set(J);
            if (r <= k) {
              low.record(r_nonnegative(m, r), dump);
              continue;
            }
            LP divisor(1);
            for (int a = k; a < r; ++a) divisor *= factor;
            auto q = exact_divide(m, divisor);
            high.record(q.has_value() && r_nonnegative(*q, r), dump);
          }
    }
  rep.checks = {low};
  if (high.trials > 0) rep.checks.push_back(high);
}

void lindstrom(const VerifyConfig& cfg, Report& rep) {
  check_profile(cfg, cfg.profile, 0);
  const int n = cfg.n;
  std::vector<int> ks = cfg.profile;
  if (ks.empty())
    for (int k = 1; k < n; ++k) ks.push_back(k);
  PointSampler ps(cfg.seed);
  CheckResult path{"network path matrix is the tableau matrix"}, minors{"Lindstrom minors equal determinants, r <= 3"};
  for (int trial = 0; trial < cfg.trials; ++trial)
    for (int k : ks) {
      RectCoords<Rational> X = ps.positive_rect(n, k, ps.positive_rational());
      auto G = tableau_network(X);
      Matrix<Rational> M = phi_matrix(X);
      const std::string dump = describe(theta(X));
      path.record(G.path_matrix() == M, dump);
      bool ok = true;
      for (int r = 1; r <= std::min(3, n); ++r)
        for (const auto& I : subsets(n, r))
          for (const auto& J : subsets(n, r)) ok = ok && lindstrom_minor(G, I, J) == minor(M, I, J);
      minors.record(ok, dump);
    }
  rep.checks = {path, minors};
}

void serre(const VerifyConfig& cfg, Report& rep) {
  check_profile(cfg, cfg.profile, 0);
  const int n = cfg.n;
  std::vector<int> ks = cfg.profile;
  if (ks.empty())
    for (int k = 1; k < n; ++k) ks.push_back(k);
  PointSampler ps(cfg.seed);
  CheckResult far{"e_i e_j = e_j e_i for non-adjacent i, j"}, near{"Verma relation for adjacent i, j"};
  for (int trial = 0; trial < cfg.trials; ++trial)
    for (int k : ks) {
      XPoint<Rational> x = ps.positive_point(n, k, ps.positive_rational());
      Rational c1 = ps.positive_rational(), c2 = ps.positive_rational();
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          int d = ((i - j) % n + n) % n;
          if (d == 0) continue;
          const std::string dump = describe(x) + " i=" + std::to_string(i) + " j=" + std::to_string(j);
          if (d != 1 && d != n - 1) {
            far.record(e_c(e_c(x, j, c2), i, c1) == e_c(e_c(x, i, c1), j, c2), dump);
          } else if (n > 2) {
            auto lhs = e_c(e_c(e_c(x, i, c2), j, c1 * c2), i, c1);
            auto rhs = e_c(e_c(e_c(x, j, c1), i, c1 * c2), j, c2);
            near.record(lhs == rhs, dump);
          }
        }
    }
  rep.checks = {near};
  if (far.trials > 0) rep.checks.push_back(far);
}

const std::map<std::string, std::function<void(const VerifyConfig&, Report&)>>& registry() {
  static const std::map<std::string, std::function<void(const VerifyConfig&, Report&)>> suites{
      {"gr-identity", gr_identity},       {"involution", involution},       {"yang-baxter", yang_baxter},
      {"equivariance", equivariance},     {"trop-agreement", trop_agreement}, {"coenergy-law", coenergy_law},
      {"symmetry-laws", symmetry_laws},   {"minor-positivity", minor_positivity}, {"lindstrom", lindstrom},
      {"serre", serre}};
  return suites;
}

}  // namespace

void CheckResult::record(bool ok, const std::string& dump) {
  ++trials;
  if (ok) return;
  ++failures;
  if (counterexamples.size() < kMaxDumps) counterexamples.push_back(dump);
}

bool Report::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"gr-identity",   "involution",    "yang-baxter",      "equivariance",
                                              "trop-agreement", "coenergy-law", "symmetry-laws",    "minor-positivity",
                                              "lindstrom",     "serre"};
  return names;
}

Report run_suite(const std::string& suite, const VerifyConfig& cfg) {
  auto it = registry().find(suite);
  if (it == registry().end()) throw InvalidInput("unknown suite: " + suite);
  Report rep{suite, cfg, {}};
  it->second(cfg, rep);
  return rep;
}

std::string describe(const XPoint<Rational>& x) {
  std::ostringstream os;
  os << "{k=" << x.k() << " t=" << to_string(x.t) << " N=[";
  const auto& M = x.N.mat();
  for (int i = 1; i <= M.rows(); ++i) {
    os << (i > 1 ? "; " : "");
    for (int j = 1; j <= M.cols(); ++j) os << (j > 1 ? " " : "") << to_string(M(i, j));
  }
  os << "]}";
  return os.str();
}

std::string describe(const XProduct<Rational>& xs) {
  std::string out;
  for (std::size_t a = 0; a < xs.size(); ++a) out += (a ? " (x) " : "") + describe(xs[a]);
  return out;
}

std::string describe(const Tableau& T) {
  std::string out;
  for (std::size_t r = 0; r < T.rows.size(); ++r) {
    if (r) out += '/';
    for (int v : T.rows[r]) out += std::to_string(v);
  }
  return out.empty() ? "()" : out;
}

}  // namespace geomr
