#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "conifold/aside.hpp"

using namespace conifold;
using aside::ASide;
using aside::Complex;
using aside::XPoint;

namespace {
ASide default_aside() { return ASide(WallConfig{}); }
}  // namespace

TEST_CASE("constants") {
  ASide as = default_aside();
  CHECK(as.c1() == doctest::Approx(std::exp(1.0)));
  CHECK(as.c2() == doctest::Approx(1.0));
}

TEST_CASE("pi_map oracle") {
  ASide as = default_aside();
  double e = std::exp(1.0);
  XPoint p{0.0, 0.0, 1.0, 1.0 - e, -e};
  auto q = as.pi_map(p);
  CHECK(q[0] == doctest::Approx(0.0));
  CHECK(q[1] == doctest::Approx((1.0 - (1.0 - e) * (1.0 - e)) / 2.0).epsilon(1e-3));
  CHECK(q[1] == doctest::Approx(-0.976).epsilon(1e-3));
  CHECK(q[2] == doctest::Approx(1.0));
  // The image lies on Delta_1: q1 = 0, q3 = w1.
  CHECK_THROWS_AS(as.wall_predicate(q), DomainError);

  XPoint bad{1.0, 1.0, 1.0, 1.0, 5.0};  // violates the equations
  CHECK_THROWS_AS(as.pi_map(bad), DomainError);
  XPoint z0{1.0, 0.0, 1.0, 0.0, 0.0};
  CHECK_THROWS_AS(as.pi_map(z0), DomainError);
}

TEST_CASE("wall predicate") {
  ASide as = default_aside();
  CHECK(as.wall_predicate({3, 5, 1}) == Wall::H1Plus);
  CHECK(as.wall_predicate({-3, 5, 1}) == Wall::H1Minus);
  CHECK(as.wall_predicate({3, 5, 0}) == Wall::H2Plus);
  CHECK(as.wall_predicate({3, -5, 0}) == Wall::H2Minus);
  CHECK(as.wall_predicate({3, 5, 0.5}) == Wall::None);
  CHECK_THROWS_AS(as.wall_predicate({0, 5, 1}), DomainError);
}

TEST_CASE("fiber points and torus action") {
  ASide as = default_aside();
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> box(-3.0, 3.0), ang(0.0, 6.28);
  for (int i = 0; i < 500; ++i) {
    std::array<double, 3> q{box(rng), box(rng), box(rng)};
    XPoint p = as.fiber_point(q, ang(rng), ang(rng), ang(rng));
    REQUIRE(as.residual(p) <= 1e-9);
    auto back = as.pi_map(p);
    for (int j = 0; j < 3; ++j) CHECK(std::fabs(back[j] - q[j]) <= 1e-9);
    XPoint moved = ASide::torus_act(p, ang(rng), ang(rng));
    CHECK(as.residual(moved) <= 1e-9);
    auto after = as.pi_map(moved);
    for (int j = 0; j < 3; ++j) CHECK(std::fabs(after[j] - back[j]) <= 1e-12);
  }
}

TEST_CASE("fixed-point curves") {
  ASide as = default_aside();
  double d = as.c2() - as.c1();  // u2 v2 on C-hat_1
  XPoint p1 = as.chat_point(1, Complex(2.0, 1.0), d / Complex(2.0, 1.0));
  auto q1 = as.pi_map(p1);
  CHECK(std::fabs(q1[0]) <= 1e-9);
  CHECK(q1[2] == doctest::Approx(1.0));
  XPoint p2 = as.chat_point(2, Complex(0.5, -1.0), -d / Complex(0.5, -1.0));
  auto q2 = as.pi_map(p2);
  CHECK(std::fabs(q2[1]) <= 1e-9);
  CHECK(q2[2] == doctest::Approx(0.0));
  CHECK_THROWS_AS(as.chat_point(1, Complex(1.0, 0.0), Complex(1.0, 0.0)), DomainError);
}
