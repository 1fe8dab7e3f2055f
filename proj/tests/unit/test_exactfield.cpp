#include "doctest.h"

#include <functional>
#include <random>

#include "geomr/exactfield.hpp"

using geomr::DegenerateInput;
using geomr::EpsRational;
using geomr::InvalidInput;
using geomr::Rational;
using geomr::eps_monomial;

namespace {

const EpsRational eps = eps_monomial(1);

EpsRational random_eps_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-6, 6), expo(-3, 3), terms(1, 3);
  auto random_poly = [&] {
    EpsRational p(0);
    for (int a = terms(rng); a > 0; --a) {
      int c = coeff(rng);
      p += EpsRational::monomial(Rational(c == 0 ? 1 : c), expo(rng));
    }
    return p;
  };
  EpsRational num = random_poly(), den = random_poly();
  while (den.is_zero()) den = random_poly();
  return num / den;
}

// Random expression tree over +, *, / whose leaves are eps^a with a positive
// coefficient.
EpsRational random_positive_tree(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> op(0, 3), expo(-4, 4), coeff(1, 9);
  if (depth == 0 || op(rng) == 0) return EpsRational::monomial(Rational(coeff(rng)), expo(rng));
  EpsRational a = random_positive_tree(rng, depth - 1), b = random_positive_tree(rng, depth - 1);
  switch (op(rng)) {
    case 1:
      return a + b;
    case 2:
      return a * b;
    default:
      return a / b;
  }
}

}  // namespace

TEST_CASE("rational arithmetic and canonical strings") {
  CHECK(Rational(1) / 2 + Rational(1) / 3 == Rational(5) / 6);
  CHECK(geomr::to_string(Rational(5) / 6) == "5/6");
  CHECK(geomr::to_string(Rational(-4) / 2) == "-2/1");
  CHECK(geomr::parse_rational("6/-4") == Rational(-3) / 2);
  CHECK(geomr::parse_rational("7") == Rational(7));
  CHECK_THROWS_AS(geomr::parse_rational("1/0"), InvalidInput);
  CHECK_THROWS_AS(geomr::parse_rational("x/2"), InvalidInput);
  CHECK_THROWS_AS(geomr::parse_rational(""), InvalidInput);
}

TEST_CASE("cancellation in the eps field") {
  EpsRational f = (eps + eps * eps) / (EpsRational(2) * eps_monomial(3));
  EpsRational expected = (EpsRational(1) + eps) / (EpsRational(2) * eps_monomial(2));
  CHECK(f == expected);
  CHECK(f.val() == -2);
  CHECK(f.leading_coeff() == Rational(1) / 2);
  CHECK((eps - eps).is_zero());
  CHECK((eps - eps) == EpsRational(0));
}

TEST_CASE("valuation examples") {
  CHECK((eps_monomial(2) + EpsRational(3) * eps_monomial(3)).val() == 2);
  CHECK((eps_monomial(-1) + EpsRational(1)).val() == -1);
  CHECK(eps_monomial(0) == EpsRational(1));
  CHECK(eps_monomial(3) == eps * eps * eps);
  CHECK(eps_monomial(-2) * eps * eps == EpsRational(1));
  for (int a = -5; a <= 5; ++a) CHECK(eps_monomial(a).val() == a);
}

TEST_CASE("zero divisors and val(0) raise DegenerateInput") {
  CHECK_THROWS_AS(EpsRational(1) / EpsRational(0), DegenerateInput);
  CHECK_THROWS_AS(EpsRational(0).val(), DegenerateInput);
  CHECK_THROWS_AS(EpsRational(0).leading_coeff(), DegenerateInput);
  CHECK_THROWS_AS(geomr::checked_div(Rational(1), Rational(0)), DegenerateInput);
  CHECK_THROWS_AS(geomr::checked_div(eps, eps - eps), DegenerateInput);
  CHECK(geomr::checked_div(Rational(3), Rational(4)) == Rational(3) / 4);
}

TEST_CASE("evaluation at a rational point") {
  EpsRational f = (EpsRational(1) + eps) / (EpsRational(2) * eps_monomial(2));
  CHECK(f.eval(Rational(1)) == Rational(1));
  CHECK(f.eval(Rational(2)) == Rational(3) / 8);
  CHECK_THROWS_AS(f.eval(Rational(0)), DegenerateInput);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    EpsRational a = random_eps_rational(rng), b = random_eps_rational(rng), c = random_eps_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a == EpsRational(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("val is a valuation") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    EpsRational a = random_eps_rational(rng), b = random_eps_rational(rng);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK((a * b).val() == a.val() + b.val());
    CHECK((a / b).val() == a.val() - b.val());
  }
}

TEST_CASE("canonical form is unique per value") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    EpsRational a = random_eps_rational(rng), b = random_eps_rational(rng), c = random_eps_rational(rng);
    if (c.is_zero()) continue;
    // Two different routes to the same value.
    EpsRational lhs = (a * c + b * c) / c;
    EpsRational rhs = b + a;
    REQUIRE(lhs == rhs);
    CHECK(lhs.str() == rhs.str());
    CHECK(lhs.numerator() == rhs.numerator());
    CHECK(lhs.denominator() == rhs.denominator());
    if (!lhs.is_zero()) {
      // The stored denominator is monic, in particular its leading coefficient is positive.
      auto den = lhs.denominator();
      CHECK(den.coeffs().back() == Rational(1));
    }
  }
}

TEST_CASE("subtraction-free expressions keep positive leading coefficients") {
  std::mt19937_64 rng(314159);
  for (int trial = 0; trial < 200; ++trial) {
    EpsRational f = random_positive_tree(rng, 8);
    REQUIRE_FALSE(f.is_zero());
    CHECK(f.leading_coeff() > 0);
  }
}

TEST_CASE("val of a sum with positive leading coefficients is the minimum") {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 100; ++trial) {
    EpsRational a = random_positive_tree(rng, 4), b = random_positive_tree(rng, 4);
    CHECK((a + b).val() == std::min(a.val(), b.val()));
  }
}

TEST_CASE("Laurent polynomial exact division") {
  using LP = geomr::LaurentPoly<Rational>;
  LP t_plus = LP(Rational(3)) + LP::monomial(Rational(1), 1);
  LP p = t_plus * t_plus * LP::monomial(Rational(2), -1);
  auto q = geomr::exact_divide(p, t_plus);
  REQUIRE(q.has_value());
  CHECK(*q == t_plus * LP::monomial(Rational(2), -1));
  CHECK_FALSE(geomr::exact_divide(p + LP(Rational(1)), t_plus).has_value());
  CHECK_THROWS_AS(geomr::exact_divide(p, LP()), DegenerateInput);
}
