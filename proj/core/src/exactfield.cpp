#include "geomr/exactfield.hpp"

#include <sstream>

namespace geomr {

std::string to_string(const Rational& x) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(x) << "/" << boost::multiprecision::denominator(x);
  return os.str();
}

Rational parse_rational(const std::string& s) {
  auto parse_int = [&](const std::string& part) {
    if (part.empty()) throw InvalidInput("malformed rational: \"" + s + "\"");
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw InvalidInput("malformed rational: \"" + s + "\"");
    for (std::size_t i = start; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') throw InvalidInput("malformed rational: \"" + s + "\"");
    return Integer(part[0] == '+' ? part.substr(1) : part);
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_int(s));
  Integer num = parse_int(s.substr(0, slash));
  Integer den = parse_int(s.substr(slash + 1));
  if (den == 0) throw InvalidInput("zero denominator in \"" + s + "\"");
  return Rational(num, den);
}

namespace poly {

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  if (a.size() == 1 && a[0] == 1) return b;
  if (b.size() == 1 && b[0] == 1) return a;
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  trim(out);
  return out;
}

Poly add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.empty()) throw DegenerateInput("polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  Poly rem = a;
  Poly q(a.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  for (std::size_t i = q.size(); i-- > 0;) {
    Rational c = rem[i + b.size() - 1] / lead;
    if (c.is_zero()) continue;
    q[i] = c;
    for (std::size_t j = 0; j < b.size(); ++j) rem[i + j] -= c * b[j];
  }
  rem.resize(b.size() - 1);
  trim(rem);
  trim(q);
  return {q, rem};
}

static Poly monic(Poly p) {
  if (p.empty()) return p;
  Rational lead = p.back();
  if (lead != 1)
    for (auto& c : p) c /= lead;
  return p;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    if (y.size() == 1) return Poly{Rational(1)};
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = monic(std::move(r));
  }
  return monic(std::move(x));
}

}  // namespace poly

namespace {

bool is_one(const poly::Poly& p) { return p.size() == 1 && p[0] == 1; }

poly::Poly exact_quotient(const poly::Poly& a, const poly::Poly& g) {
  if (is_one(g)) return a;
  return poly::divmod(a, g).first;
}

}  // namespace

EpsRational::EpsRational(const Rational& c) {
  if (!c.is_zero()) p_ = {c};
}

EpsRational EpsRational::monomial(const Rational& c, int a) {
  EpsRational r(c);
  if (!r.is_zero()) r.val_ = a;
  return r;
}

EpsRational EpsRational::make(int val, std::vector<Rational> p, std::vector<Rational> q) {
  poly::trim(p);
  poly::trim(q);
  if (q.empty()) throw DegenerateInput("EpsRational with zero denominator");
  EpsRational r;
  if (p.empty()) return r;
  std::size_t lp = 0;
  while (p[lp].is_zero()) ++lp;
  std::size_t lq = 0;
  while (q[lq].is_zero()) ++lq;
  if (lp > 0) p.erase(p.begin(), p.begin() + lp);
  if (lq > 0) q.erase(q.begin(), q.begin() + lq);
  val += static_cast<int>(lp) - static_cast<int>(lq);
  if (q.size() > 1 && p.size() > 1) {
    poly::Poly g = poly::gcd(p, q);
    if (!is_one(g)) {
      p = poly::divmod(p, g).first;
      q = poly::divmod(q, g).first;
    }
  }
  Rational lead = q.back();
  if (lead != 1) {
    for (auto& c : p) c /= lead;
    for (auto& c : q) c /= lead;
  }
  r.val_ = val;
  r.p_ = std::move(p);
  r.q_ = std::move(q);
  return r;
}

EpsRational EpsRational::from_laurent(const LaurentPoly<Rational>& num,
                                      const LaurentPoly<Rational>& den) {
  if (den.is_zero()) throw DegenerateInput("EpsRational with zero denominator");
  if (num.is_zero()) return EpsRational();
  return make(num.low() - den.low(), num.coeffs(), den.coeffs());
}

int EpsRational::val() const {
  if (is_zero()) throw DegenerateInput("valuation of zero");
  return val_;
}

Rational EpsRational::leading_coeff() const {
  if (is_zero()) throw DegenerateInput("leading coefficient of zero");
  return p_[0] / q_[0];
}

LaurentPoly<Rational> EpsRational::numerator() const {
  return LaurentPoly<Rational>::from_coeffs(val_, p_);
}

LaurentPoly<Rational> EpsRational::denominator() const {
  return LaurentPoly<Rational>::from_coeffs(0, q_);
}

Rational EpsRational::eval(const Rational& eps) const {
  if (is_zero()) return Rational(0);
  Rational d = denominator().eval(eps);
  if (d.is_zero()) throw DegenerateInput("EpsRational denominator vanishes at evaluation point");
  if (eps.is_zero() && val_ < 0) throw DegenerateInput("EpsRational has a pole at eps = 0");
  return numerator().eval(eps) / d;
}

EpsRational EpsRational::operator-() const {
  EpsRational r = *this;
  for (auto& c : r.p_) c = -c;
  return r;
}

EpsRational EpsRational::operator+(const EpsRational& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  int v = std::min(val_, o.val_);
  auto lifted = [v](const EpsRational& x) {
    poly::Poly p(x.val_ - v, Rational(0));
    p.insert(p.end(), x.p_.begin(), x.p_.end());
    return p;
  };
  poly::Poly pa = lifted(*this), pb = lifted(o);
  if (q_ == o.q_) {
    return make(v, poly::add(pa, pb), q_);
  }
  poly::Poly g = poly::gcd(q_, o.q_);
  poly::Poly qa = exact_quotient(q_, g), qb = exact_quotient(o.q_, g);
  poly::Poly num = poly::add(poly::mul(pa, qb), poly::mul(pb, qa));
  return make(v, std::move(num), poly::mul(q_, qb));
}

EpsRational EpsRational::operator*(const EpsRational& o) const {
  if (is_zero() || o.is_zero()) return EpsRational();
  // Both operands are reduced, so only cross cancellation is possible.
  poly::Poly g1 = (p_.size() > 1 && o.q_.size() > 1) ? poly::gcd(p_, o.q_) : poly::Poly{1};
  poly::Poly g2 = (o.p_.size() > 1 && q_.size() > 1) ? poly::gcd(o.p_, q_) : poly::Poly{1};
  EpsRational r;
  r.val_ = val_ + o.val_;
  r.p_ = poly::mul(exact_quotient(p_, g1), exact_quotient(o.p_, g2));
  r.q_ = poly::mul(exact_quotient(q_, g2), exact_quotient(o.q_, g1));
  // Quotients of monic polynomials by monic gcds stay monic.
  return r;
}

EpsRational EpsRational::inverse() const {
  if (is_zero()) throw DegenerateInput("division by zero in EpsRational");
  EpsRational r;
  r.val_ = -val_;
  Rational lead = p_.back();
  r.q_ = p_;
  r.p_ = q_;
  if (lead != 1) {
    for (auto& c : r.q_) c /= lead;
    for (auto& c : r.p_) c /= lead;
  }
  return r;
}

EpsRational EpsRational::operator/(const EpsRational& o) const {
  if (o.is_zero()) throw DegenerateInput("division by zero in EpsRational");
  return *this * o.inverse();
}

namespace {

std::string poly_str(const poly::Poly& p, int shift) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    int e = static_cast<int>(i) + shift;
    os << p[i];
    if (e != 0) os << "*eps^" << e;
  }
  return first ? "0" : os.str();
}

}  // namespace

std::string EpsRational::str() const {
  if (is_zero()) return "0";
  std::string num = poly_str(p_, val_);
  if (is_one(q_)) return num;
  return "(" + num + ")/(" + poly_str(q_, 0) + ")";
}

std::ostream& operator<<(std::ostream& os, const EpsRational& f) { return os << f.str(); }

}  // namespace geomr
