#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "geomr/errors.hpp"

namespace geomr {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

inline bool is_zero(const Rational& x) { return x.is_zero(); }

// Canonical "p/q" form; the denominator is always printed.
std::string to_string(const Rational& x);
// Accepts "p/q" or "p"; throws InvalidInput otherwise or on a zero denominator.
Rational parse_rational(const std::string& s);

namespace detail {
template <class R>
bool zero_test(const R& c) {
  return is_zero(c);
}
}  // namespace detail

// Laurent polynomial sum_e c_e z^e over a commutative ring R, stored densely
// from the lowest nonzero exponent. The zero polynomial has no coefficients.
template <class R>
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const R& c) : coef_{c} { trim(); }
  LaurentPoly(int c) : coef_{R(c)} { trim(); }

  static LaurentPoly monomial(const R& c, int e) {
    LaurentPoly p(c);
    if (!p.is_zero()) p.low_ = e;
    return p;
  }
  static LaurentPoly from_coeffs(int low, std::vector<R> coeffs) {
    LaurentPoly p;
    p.low_ = low;
    p.coef_ = std::move(coeffs);
    p.trim();
    return p;
  }

  bool is_zero() const { return coef_.empty(); }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coef_.size()) - 1; }
  const std::vector<R>& coeffs() const { return coef_; }

  R coeff(int e) const {
    if (coef_.empty() || e < low_ || e > high()) return R(0);
    return coef_[e - low_];
  }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& c : r.coef_) c = -c;
    return r;
  }
  LaurentPoly operator+(const LaurentPoly& o) const { return combine(o, false); }
  LaurentPoly operator-(const LaurentPoly& o) const { return combine(o, true); }
  LaurentPoly operator*(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<R> out(coef_.size() + o.coef_.size() - 1, R(0));
    for (std::size_t a = 0; a < coef_.size(); ++a) {
      if (geomr_is_zero(coef_[a])) continue;
      for (std::size_t b = 0; b < o.coef_.size(); ++b) {
        if (geomr_is_zero(o.coef_[b])) continue;
        out[a + b] = out[a + b] + coef_[a] * o.coef_[b];
      }
    }
    return from_coeffs(low_ + o.low_, std::move(out));
  }
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  bool operator==(const LaurentPoly& o) const {
    if (coef_.size() != o.coef_.size()) return false;
    if (coef_.empty()) return true;
    return low_ == o.low_ && coef_ == o.coef_;
  }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Multiply by z^e.
  LaurentPoly shift(int e) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.low_ += e;
    return r;
  }
  // p(z) -> p(s*z) for s = +1 or -1.
  LaurentPoly sign_substitute(int s) const {
    if (s == 1) return *this;
    LaurentPoly r = *this;
    for (std::size_t i = 0; i < r.coef_.size(); ++i)
      if (((low_ + static_cast<int>(i)) % 2 + 2) % 2 == 1) r.coef_[i] = -r.coef_[i];
    return r;
  }
  // Value at z = x; x must be invertible when negative exponents occur.
  R eval(const R& x) const {
    if (is_zero()) return R(0);
    R acc(0);
    for (std::size_t i = coef_.size(); i-- > 0;) acc = acc * x + coef_[i];
    if (low_ > 0) {
      for (int i = 0; i < low_; ++i) acc = acc * x;
    } else if (low_ < 0) {
      for (int i = 0; i < -low_; ++i) acc = acc / x;
    }
    return acc;
  }

 private:
  static bool geomr_is_zero(const R& c) { return detail::zero_test(c); }

  void trim() {
    std::size_t lo = 0;
    while (lo < coef_.size() && geomr_is_zero(coef_[lo])) ++lo;
    if (lo == coef_.size()) {
      coef_.clear();
      low_ = 0;
      return;
    }
    std::size_t hi = coef_.size();
    while (geomr_is_zero(coef_[hi - 1])) --hi;
    if (lo > 0 || hi < coef_.size()) {
      coef_ = std::vector<R>(coef_.begin() + lo, coef_.begin() + hi);
      low_ += static_cast<int>(lo);
    }
  }

  LaurentPoly combine(const LaurentPoly& o, bool subtract) const {
    if (o.is_zero()) return *this;
    if (is_zero()) return subtract ? -o : o;
    int lo = std::min(low_, o.low_);
    int hi = std::max(high(), o.high());
    std::vector<R> out(hi - lo + 1, R(0));
    for (std::size_t i = 0; i < coef_.size(); ++i) out[low_ - lo + i] = coef_[i];
    for (std::size_t i = 0; i < o.coef_.size(); ++i) {
      auto& slot = out[o.low_ - lo + i];
      slot = subtract ? slot - o.coef_[i] : slot + o.coef_[i];
    }
    return from_coeffs(lo, std::move(out));
  }

  int low_ = 0;
  std::vector<R> coef_;
};

template <class R>
bool is_zero(const LaurentPoly<R>& p) {
  return p.is_zero();
}

template <class R>
LaurentPoly<R> operator*(const R& c, const LaurentPoly<R>& p) {
  return LaurentPoly<R>(c) * p;
}

// Exact quotient a/b when b divides a in the Laurent ring over a field,
// std::nullopt otherwise. Throws DegenerateInput when b = 0.
template <class R>
std::optional<LaurentPoly<R>> exact_divide(const LaurentPoly<R>& a, const LaurentPoly<R>& b) {
  if (b.is_zero()) throw DegenerateInput("division of a Laurent polynomial by zero");
  if (a.is_zero()) return LaurentPoly<R>();
  // Normalize both to ordinary polynomials with nonzero constant term.
  std::vector<R> rem = a.coeffs();
  const std::vector<R>& d = b.coeffs();
  if (rem.size() < d.size()) return std::nullopt;
  std::vector<R> q(rem.size() - d.size() + 1, R(0));
  for (std::size_t i = q.size(); i-- > 0;) {
    R c = rem[i + d.size() - 1] / d.back();
    q[i] = c;
    if (detail::zero_test(c)) continue;
    for (std::size_t j = 0; j < d.size(); ++j) rem[i + j] = rem[i + j] - c * d[j];
  }
  for (const auto& r : rem)
    if (!detail::zero_test(r)) return std::nullopt;
  return LaurentPoly<R>::from_coeffs(a.low() - b.low(), std::move(q));
}

// Element of Q(eps), kept as eps^val * p(eps)/q(eps) with p(0) != 0, q(0) != 0,
// gcd(p, q) = 1 and q monic, so equal values have identical representations.
class EpsRational {
 public:
  EpsRational() = default;
  EpsRational(int c) : EpsRational(Rational(c)) {}
  EpsRational(const Rational& c);

  static EpsRational monomial(int a) { return monomial(Rational(1), a); }
  static EpsRational monomial(const Rational& c, int a);
  static EpsRational from_laurent(const LaurentPoly<Rational>& num,
                                  const LaurentPoly<Rational>& den);

  bool is_zero() const { return p_.empty(); }
  // Order of vanishing at eps = 0; throws DegenerateInput on zero.
  int val() const;
  // Coefficient of eps^val in the Laurent expansion at eps = 0.
  Rational leading_coeff() const;
  LaurentPoly<Rational> numerator() const;
  LaurentPoly<Rational> denominator() const;
  // Value at a rational point; throws DegenerateInput if the denominator vanishes there.
  Rational eval(const Rational& eps) const;

  EpsRational operator-() const;
  EpsRational operator+(const EpsRational& o) const;
  EpsRational operator-(const EpsRational& o) const { return *this + (-o); }
  EpsRational operator*(const EpsRational& o) const;
  EpsRational operator/(const EpsRational& o) const;
  EpsRational& operator+=(const EpsRational& o) { return *this = *this + o; }
  EpsRational& operator-=(const EpsRational& o) { return *this = *this - o; }
  EpsRational& operator*=(const EpsRational& o) { return *this = *this * o; }
  EpsRational& operator/=(const EpsRational& o) { return *this = *this / o; }
  bool operator==(const EpsRational& o) const {
    return val_ == o.val_ && p_ == o.p_ && q_ == o.q_;
  }
  bool operator!=(const EpsRational& o) const { return !(*this == o); }

  std::string str() const;

 private:
  static EpsRational make(int val, std::vector<Rational> p, std::vector<Rational> q);
  EpsRational inverse() const;

  int val_ = 0;
  std::vector<Rational> p_;
  std::vector<Rational> q_{Rational(1)};
};

inline bool is_zero(const EpsRational& x) { return x.is_zero(); }
inline EpsRational eps_monomial(int a) { return EpsRational::monomial(a); }
inline int val(const EpsRational& f) { return f.val(); }
std::ostream& operator<<(std::ostream& os, const EpsRational& f);

// Division that reports a zero divisor as DegenerateInput for either field
// (Rational's own operator/ raises std::overflow_error).
template <class F>
F checked_div(const F& a, const F& b) {
  if (is_zero(b)) throw DegenerateInput("division by zero");
  return a / b;
}

// Dense univariate polynomial helpers over Q (index = degree, no trailing zeros).
namespace poly {
using Poly = std::vector<Rational>;
void trim(Poly& p);
Poly mul(const Poly& a, const Poly& b);
Poly add(const Poly& a, const Poly& b);
// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
}  // namespace poly

}  // namespace geomr
