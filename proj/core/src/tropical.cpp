#include "geomr/tropical.hpp"

#include <map>

namespace geomr {

namespace {

long checked_val(const EpsRational& x) {
  if (x.is_zero()) throw EngineMisuse("tropical evaluation produced 0; the map is not positive here");
  return x.val();
}

void check_factors(const std::vector<KRectangle>& bs) {
  if (bs.empty()) throw InvalidInput("tropical query needs at least one rectangle");
  for (const auto& b : bs) {
    if (b.n != bs[0].n) throw InvalidInput("rectangles must share n");
    if (b.k < 1 || b.k >= b.n) throw InvalidInput("rectangle needs 1 <= k <= n-1");
    if (static_cast<int>(b.B.size()) != b.k) throw InvalidInput("rectangle has the wrong number of rows");
    for (const auto& row : b.B)
      if (static_cast<int>(row.size()) != b.n - b.k) throw InvalidInput("rectangle row has the wrong length");
  }
}

}  // namespace

RectCoords<EpsRational> lift_coords(const KRectangle& r) {
  check_factors({r});
  RectCoords<EpsRational> X;
  X.n = r.n;
  X.k = r.k;
  X.t = eps_monomial(static_cast<int>(r.L));
  for (const auto& row : r.B) {
    std::vector<EpsRational> out;
    for (long b : row) out.push_back(eps_monomial(static_cast<int>(b)));
    X.X.push_back(std::move(out));
  }
  return X;
}

XPoint<EpsRational> lift(const KRectangle& r) { return theta(lift_coords(r)); }

XProduct<EpsRational> lift(const std::vector<KRectangle>& rs) {
  XProduct<EpsRational> out;
  for (const auto& r : rs) out.push_back(lift(r));
  return out;
}

KRectangle read(const XPoint<EpsRational>& x) {
  RectCoords<EpsRational> X = theta_inverse(x);
  KRectangle r{X.n, X.k, {}, checked_val(X.t)};
  for (const auto& row : X.X) {
    std::vector<long> out;
    for (const auto& v : row) out.push_back(checked_val(v));
    r.B.push_back(std::move(out));
  }
  return r;
}

std::vector<KRectangle> read(const XProduct<EpsRational>& xs) {
  std::vector<KRectangle> out;
  for (const auto& x : xs) out.push_back(read(x));
  return out;
}

long tropicalize(const std::function<EpsRational(const std::vector<EpsRational>&)>& h,
                 const std::vector<long>& a) {
  std::vector<EpsRational> z;
  for (long v : a) z.push_back(eps_monomial(static_cast<int>(v)));
  return checked_val(h(z));
}

std::pair<KRectangle, KRectangle> trop_R(const KRectangle& a, const KRectangle& b) {
  check_factors({a, b});
  auto [vp, up] = geom_R(lift(a), lift(b));
  return {read(vp), read(up)};
}

long trop_E(const KRectangle& a, const KRectangle& b) {
  check_factors({a, b});
  return checked_val(geom_E(lift(a), lift(b)));
}

std::vector<long> trop_gamma(const std::vector<KRectangle>& bs) {
  check_factors(bs);
  std::vector<long> out;
  for (const auto& g : gamma(lift(bs))) out.push_back(checked_val(g));
  return out;
}

long trop_phi(const std::vector<KRectangle>& bs, int i) {
  check_factors(bs);
  return checked_val(phi(lift(bs), i));
}

long trop_eps(const std::vector<KRectangle>& bs, int i) {
  check_factors(bs);
  return checked_val(eps(lift(bs), i));
}

long trop_f(const std::vector<KRectangle>& bs) {
  check_factors(bs);
  return checked_val(decoration(lift(bs)));
}

std::vector<KRectangle> trop_e_raw(const std::vector<KRectangle>& bs, int i, long c) {
  check_factors(bs);
  return read(e_c(lift(bs), i, eps_monomial(static_cast<int>(c))));
}

std::optional<std::vector<KRectangle>> trop_e(const std::vector<KRectangle>& bs, int i) {
  std::vector<KRectangle> out = trop_e_raw(bs, i, 1);
  if (trop_f(out) < 0) return std::nullopt;
  return out;
}

KRectangle trop_PR(const KRectangle& r) { return read(PR(lift(r))); }
KRectangle trop_PR_inverse(const KRectangle& r) { return read(PR_inverse(lift(r))); }
KRectangle trop_S(const KRectangle& r) { return read(S(lift(r))); }
KRectangle trop_D(const KRectangle& r) { return read(D(lift(r))); }

Tableau promotion(const Tableau& T) { return rectangle_tableau(trop_PR(tableau_rectangle(T))); }

Tableau promotion_inverse(const Tableau& T) {
  return rectangle_tableau(trop_PR_inverse(tableau_rectangle(T)));
}

std::optional<Tableau> crystal_e0(const Tableau& T) {
  auto e = crystal_e(promotion(T), 1);
  if (!e) return std::nullopt;
  return promotion_inverse(*e);
}

std::optional<Tableau> crystal_f0(const Tableau& T) {
  auto f = crystal_f(promotion(T), 1);
  if (!f) return std::nullopt;
  return promotion_inverse(*f);
}

std::optional<TropMap> trop_map_from_name(const std::string& name) {
  static const std::map<std::string, TropMap> names = {
      {"R", TropMap::R},       {"E", TropMap::E},         {"e", TropMap::e},     {"PR", TropMap::PR},
      {"S", TropMap::S},       {"D", TropMap::D},         {"gamma", TropMap::gamma},
      {"phi", TropMap::phi},   {"eps", TropMap::eps},     {"f", TropMap::f}};
  auto it = names.find(name);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

std::vector<long> flatten(const KRectangle& r) {
  std::vector<long> out;
  for (const auto& row : r.B) out.insert(out.end(), row.begin(), row.end());
  out.push_back(r.L);
  return out;
}

std::vector<long> trop_eval(const TropQuery& q) {
  check_factors(q.factors);
  const auto& fs = q.factors;
  auto need = [&](std::size_t count) {
    if (fs.size() != count) throw InvalidInput("wrong number of rectangles for this tropical map");
  };
  auto concat = [](const std::vector<KRectangle>& rs) {
    std::vector<long> out;
    for (const auto& r : rs) {
      auto f = flatten(r);
      out.insert(out.end(), f.begin(), f.end());
    }
    return out;
  };
  switch (q.map) {
    case TropMap::R: {
      need(2);
      auto [bp, ap] = trop_R(fs[0], fs[1]);
      return concat({bp, ap});
    }
    case TropMap::E:
      need(2);
      return {trop_E(fs[0], fs[1])};
    case TropMap::e: {
      auto out = trop_e(fs, q.i);
      if (!out) throw EngineMisuse("ê_i leaves the rectangle cone (the crystal operator is undefined)");
      return concat(*out);
    }
    case TropMap::PR:
      need(1);
      return flatten(trop_PR(fs[0]));
    case TropMap::S:
      need(1);
      return flatten(trop_S(fs[0]));
    case TropMap::D:
      need(1);
      return flatten(trop_D(fs[0]));
    case TropMap::gamma:
      return trop_gamma(fs);
    case TropMap::phi:
      return {trop_phi(fs, q.i)};
    case TropMap::eps:
      return {trop_eps(fs, q.i)};
    case TropMap::f:
      return {trop_f(fs)};
  }
  throw InvalidInput("unknown tropical map");
}

}  // namespace geomr
