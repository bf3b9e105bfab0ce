#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "conifold/novikov.hpp"

using namespace conifold;

namespace {
NovikovNum mono(int c, const Scalar& e) {
  return NovikovNum::monomial(GaussianRational(c), e);
}
}  // namespace

TEST_CASE("scalar and extended-scalar basics") {
  CHECK(Scalar(1, 2) + Scalar(1, 2) == Scalar(1));
  CHECK(Scalar(1, 3) * Scalar(3) == Scalar(1));
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), DomainError);

  CHECK(min(ExtScalar::pos_inf(), ExtScalar(2)) == ExtScalar(2));
  CHECK(ExtScalar::pos_inf() + ExtScalar(5) == ExtScalar::pos_inf());
  CHECK_THROWS_AS(ExtScalar::pos_inf() + ExtScalar::neg_inf(), IndeterminateForm);
  CHECK(median(ExtScalar::pos_inf(), ExtScalar(2), ExtScalar(1)) == ExtScalar(2));
  CHECK(median(ExtScalar(1), ExtScalar(2), ExtScalar(3)) == ExtScalar(2));
  CHECK(median(ExtScalar::neg_inf(), ExtScalar(2), ExtScalar(1)) == ExtScalar(1));
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("1/4") == Rational(1, 4));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("0.5") == Rational(1, 2));
  CHECK(parse_rational("-2.25") == Rational(-9, 4));
  CHECK_THROWS_AS(parse_rational("abc"), DomainError);
}

TEST_CASE("series construction and arithmetic") {
  // (T^{1/2} + T) + (T - T^{1/2}) = 2T
  NovikovNum a = mono(1, Scalar(1, 2)) + mono(1, Scalar(1));
  NovikovNum b = mono(1, Scalar(1)) - mono(1, Scalar(1, 2));
  NovikovNum s = a + b;
  REQUIRE(s.terms().size() == 1);
  CHECK(s.terms()[0].coeff == GaussianRational(2));
  CHECK(ExtScalar(s.terms()[0].expo) == ExtScalar(1));

  // val(1+y) with y = -1 + T is 1.
  NovikovNum y = mono(-1, Scalar(0)) + mono(1, Scalar(1));
  CHECK((1 + y).val() == ExtScalar(1));

  // from_terms merges equal exponents and drops zeros.
  NovikovNum m = NovikovNum::from_terms({{GaussianRational(1), Scalar(2)},
                                         {GaussianRational(-1), Scalar(2)},
                                         {GaussianRational(3), Scalar(1)}});
  REQUIRE(m.terms().size() == 1);
  CHECK(m.val() == ExtScalar(1));
}

TEST_CASE("valuation laws") {
  NovikovNum a = mono(2, Scalar(1, 2)) + mono(1, Scalar(3));
  NovikovNum b = mono(1, Scalar(-1)) + mono(-5, Scalar(0));
  CHECK((a * b).val() == a.val() + b.val());
  CHECK((a + b).val() == min(a.val(), b.val()));
  CHECK(NovikovNum::zero().val() == ExtScalar::pos_inf());
  NovikovNum cancel = a - a;
  CHECK(!cancel.has_terms());
  CHECK(cancel.val() == ExtScalar::pos_inf());  // exact zero stays exact
}

TEST_CASE("truncation tracking") {
  NovikovNum a = NovikovNum::from_terms({{GaussianRational(1), Scalar(0)}},
                                        ExtScalar(3));
  NovikovNum b = NovikovNum::from_terms({{GaussianRational(1), Scalar(2)}},
                                        ExtScalar(5));
  CHECK((a + b).trunc() == ExtScalar(3));
  // Product truncation: min(val(a)+trunc(b), val(b)+trunc(a)).
  CHECK((a * b).trunc() == ExtScalar(5));
  NovikovNum t = mono(1, Scalar(4));
  CHECK((a + t).trunc() == ExtScalar(3));  // the T^4 term is unknowable
  CHECK((a + t).terms().size() == 1);

  // Indeterminate valuation: no terms below a finite trunc.
  NovikovNum u = NovikovNum::zero(ExtScalar(3));
  CHECK_THROWS_AS(u.val(), IndeterminateValuation);
  CHECK(u.val_lower_bound() == ExtScalar(3));
}

TEST_CASE("inversion") {
  // inv(1+T, 3) = 1 - T + T^2 (mod T^3)
  NovikovNum a = 1 + mono(1, Scalar(1));
  NovikovNum i = a.inv(ExtScalar(3));
  NovikovNum want = NovikovNum::from_terms({{GaussianRational(1), Scalar(0)},
                                            {GaussianRational(-1), Scalar(1)},
                                            {GaussianRational(1), Scalar(2)}},
                                           ExtScalar(3));
  CHECK(i.equal_upto_common_trunc(want));
  CHECK(!(a * i - NovikovNum::one()).has_terms());

  // Monomial inversion is exact.
  NovikovNum m = mono(2, Scalar(5));
  NovikovNum mi = m.inv(ExtScalar(100));
  CHECK((m * mi).equal_upto_common_trunc(NovikovNum::one()));
  CHECK(mi.val() == ExtScalar(-5));

  CHECK_THROWS_AS(NovikovNum::zero().inv(ExtScalar(3)), DomainError);
}

TEST_CASE("gaussian coefficients") {
  GaussianRational i(0, 1);
  CHECK(i * i == GaussianRational(-1));
  CHECK(i * i.inverse() == GaussianRational(1));
  NovikovNum a = NovikovNum::monomial(GaussianRational(1, 1), Scalar(1));
  NovikovNum b = NovikovNum::monomial(GaussianRational(1, -1), Scalar(1));
  NovikovNum p = a * b;  // (1+i)(1-i) T^2 = 2 T^2
  REQUIRE(p.terms().size() == 1);
  CHECK(p.terms()[0].coeff == GaussianRational(2));
}

TEST_CASE("serialization") {
  NovikovNum n = NovikovNum::from_terms({{GaussianRational(1), Scalar(0)},
                                         {GaussianRational(-1), Scalar(1)},
                                         {GaussianRational(1), Scalar(2)}},
                                        ExtScalar(3));
  CHECK(n.str() == "1 - 1*T^1 + 1*T^2 (trunc 3)");
  CHECK(NovikovNum::zero().str() == "0");
  CHECK(rational_str(Rational(-3, 4)) == "-3/4");
}

TEST_CASE("projective values") {
  ProjValue zero{NovikovNum::zero(), NovikovNum::one()};
  CHECK(zero.val() == ExtScalar::pos_inf());
  ProjValue inf{NovikovNum::one(), NovikovNum::zero()};
  CHECK(inf.val() == ExtScalar::neg_inf());
  ProjValue gen{mono(1, Scalar(3)), mono(2, Scalar(1))};
  CHECK(gen.val() == ExtScalar(2));
  ProjValue bad{NovikovNum::zero(), NovikovNum::zero()};
  CHECK_THROWS_AS(bad.val(), DomainError);
}

TEST_CASE("float mode tolerance") {
  set_num_mode(NumMode::Float);
  Scalar a = Scalar::from_double(1.0);
  Scalar b = Scalar::from_double(1.0 + 1e-12);
  CHECK(a == b);
  CHECK(a != Scalar::from_double(1.001));
  set_num_mode(NumMode::Exact);
}
