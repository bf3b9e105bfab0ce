#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "conifold/mirror.hpp"

using namespace conifold;
using mirror::BSide;
using mirror::MirrorPoint;
using mirror::Sampler;
using mirror::Smoothness;
using mirror::Triple;
using mirror::YPoint;

namespace {

ChartAtlas default_atlas() {
  return ChartAtlas(WallConfig{}, std::make_shared<RationalPsiModel>());
}

NovikovNum mono(int c, const Scalar& e) {
  return NovikovNum::monomial(GaussianRational(c), e);
}
NovikovNum T(const Scalar& e) { return mono(1, e); }

bool eq5(const Vec5& a, const Vec5& b) {
  for (int i = 0; i < 5; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

}  // namespace

TEST_CASE("transition maps phi") {
  Triple y = {T(Scalar(2)), T(Scalar(1)), T(Scalar(1))};
  Triple p12 = mirror::phi12(y);
  CHECK(p12[0].equal_upto_common_trunc(T(Scalar(2))));
  CHECK(p12[1].equal_upto_common_trunc(T(Scalar(1))));
  CHECK(p12[2].equal_upto_common_trunc(T(Scalar(1)) + T(Scalar(3))));
  Triple p23 = mirror::phi23(y);
  CHECK(p23[2].equal_upto_common_trunc(T(Scalar(1)) + T(Scalar(2))));
  // phi12 with y1 = 0 is the identity on y3.
  Triple y0 = {NovikovNum::zero(), T(Scalar(1)), T(Scalar(1))};
  CHECK(mirror::phi12(y0)[2].equal_upto_common_trunc(T(Scalar(1))));
}

TEST_CASE("superpotentials") {
  Triple y = {T(Scalar(1)), T(Scalar(1)), T(Scalar(1))};
  NovikovNum w1 = mirror::W(1, y);
  CHECK(w1.equal_upto_common_trunc(T(Scalar(1)) + mono(2, Scalar(2)) + T(Scalar(3))));
  NovikovNum w2 = mirror::W(2, {T(Scalar(5)), T(Scalar(1)), T(Scalar(1))});
  CHECK(w2.equal_upto_common_trunc(T(Scalar(1)) + T(Scalar(2))));
  CHECK(mirror::W(3, y).equal_upto_common_trunc(T(Scalar(1))));
  // Gluing identities on a fixed triple.
  CHECK(mirror::W(1, y).equal_upto_common_trunc(mirror::W(2, mirror::phi12(y))));
  CHECK(mirror::W(2, y).equal_upto_common_trunc(mirror::W(3, mirror::phi23(y))));
}

TEST_CASE("chart embeddings g") {
  ChartAtlas atlas = default_atlas();
  BSide bside(atlas);
  // g1(T, T, T^5) = (T^{-5}, T^5(1+T)^2, z = T^5(1+T)) with the y's carried.
  YPoint p = bside.g(1, {T(Scalar(1)), T(Scalar(1)), T(Scalar(5))});
  CHECK(p.x1.equal_upto_common_trunc(T(Scalar(-5))));
  CHECK(p.x2.equal_upto_common_trunc(T(Scalar(5)) + mono(2, Scalar(6)) + T(Scalar(7))));
  CHECK(p.z.val() == ExtScalar(5));
  CHECK(bside.y_membership(p));

  // g2 with y1 = -1 + T kills the pole: x1 = 1.
  NovikovNum y1 = mono(-1, Scalar(0)) + T(Scalar(1));
  YPoint p2 = bside.g(2, {y1, T(Scalar(1)), T(Scalar(1))});
  CHECK(p2.x1.equal_upto_common_trunc(NovikovNum::one()));
  CHECK(bside.y_membership(p2));

  YPoint p3 = bside.g(3, {T(Scalar(1)), T(Scalar(1)), T(Scalar(1, 2))});
  CHECK(bside.y_membership(p3));
}

TEST_CASE("y membership rejects") {
  BSide bside(default_atlas());
  YPoint bad{NovikovNum::zero(), NovikovNum::zero(),
             {NovikovNum::zero(), NovikovNum::one()},
             mono(-1, Scalar(0)) + T(Scalar(1)), T(Scalar(1))};
  CHECK(!bside.y_membership(bad));
}

TEST_CASE("F_map oracles") {
  ChartAtlas atlas = default_atlas();
  BSide bside(atlas);

  // C1 point: y1 = -1 exactly, x2 = 0, z = 0, val(y2) = -1.
  YPoint c1{mono(2, Scalar(-3)), NovikovNum::zero(),
            {NovikovNum::zero(), NovikovNum::one()}, mono(-1, Scalar(0)),
            T(Scalar(-1))};
  CHECK(eq5(bside.F_map(c1), {Scalar(-3), Scalar(1), Scalar(2), Scalar(0), Scalar(-1)}));
  BasePoint f1 = bside.f_map(c1);
  CHECK(f1 == BasePoint{Scalar(0), Scalar(-1), Scalar(1)});

  // C2 point: y2 = -1 exactly, x1 = 0, z = inf, val(y1) = 3.
  YPoint c2{NovikovNum::zero(), T(Scalar(3, 2)),
            {NovikovNum::one(), NovikovNum::zero()}, T(Scalar(3)),
            mono(-1, Scalar(0))};
  CHECK(eq5(bside.F_map(c2), {Scalar(-2), Scalar(1), Scalar(1), Scalar(3), Scalar(0)}));
  CHECK(bside.f_map(c2) == BasePoint{Scalar(3), Scalar(0), Scalar(0)});

  // Generic point with val(x2) = 1/2 over (q1, q2) = (2, 3).
  Sampler sampler(11);
  YPoint g = bside.preimage_at(T(Scalar(2)), T(Scalar(3)), Scalar(1, 2),
                               NovikovNum::zero());
  CHECK(eq5(bside.F_map(g), {Scalar(-2), Scalar(1, 2), Scalar(1), Scalar(2), Scalar(3)}));
  CHECK(bside.y_membership(g));

  // f_map needs val(x2) > 0.
  YPoint low = bside.preimage_at(T(Scalar(2)), T(Scalar(3)), Scalar(1, 2),
                                 NovikovNum::zero());
  low.x2 = T(Scalar(0)) + low.x2;
  CHECK_THROWS_AS(bside.f_map(low), DomainError);
}

TEST_CASE("tau_base oracles") {
  BSide bside(default_atlas());
  CHECK(bside.tau_base({3, {T(Scalar(0)) + T(Scalar(1)), mono(2, Scalar(0)), T(Scalar(1, 2))}}) ==
        BasePoint{Scalar(0), Scalar(0), Scalar(-1)});
  CHECK(bside.tau_base({2, {T(Scalar(1)), T(Scalar(-2)), T(Scalar(7, 2))}}) ==
        BasePoint{Scalar(1), Scalar(-2), Scalar(1, 2)});
  CHECK(bside.tau_base({1, {T(Scalar(-1)), T(Scalar(2)), T(Scalar(5))}}) ==
        BasePoint{Scalar(-1), Scalar(2), Scalar(3)});
  // trop(y) outside the chart image is rejected.
  CHECK_THROWS_AS(bside.tau_base({3, {T(Scalar(0)), T(Scalar(0)), T(Scalar(100))}}),
                  DomainError);
}

TEST_CASE("diagram identity on fixed points") {
  ChartAtlas atlas = default_atlas();
  BSide bside(atlas);
  // Chart 3 point y = (T, T, T^{1/2}): both sides equal (-2, 1/2, 1, 1, 1).
  MirrorPoint m{3, {T(Scalar(1)), T(Scalar(1)), T(Scalar(1, 2))}};
  Vec5 lhs = bside.F_map(bside.g_glued(m));
  Vec5 rhs = atlas.j_embed(bside.tau_base(m));
  CHECK(eq5(lhs, rhs));
  CHECK(eq5(lhs, {Scalar(-2), Scalar(1, 2), Scalar(1), Scalar(1), Scalar(1)}));
  // g3 image over q = (0,0,-1) maps back to (0,0,-1) under f.
  MirrorPoint m0{3, {mono(2, Scalar(0)), mono(3, Scalar(0)), T(Scalar(1, 2))}};
  CHECK(bside.f_map(bside.g_glued(m0)) == BasePoint{Scalar(0), Scalar(0), Scalar(-1)});
}

TEST_CASE("randomized diagram per chart") {
  ChartAtlas atlas = default_atlas();
  BSide bside(atlas);
  for (int chart = 1; chart <= 3; ++chart) {
    mirror::DiagramReport rep = mirror::verify_diagram_chart(bside, chart, 300, 5, 2);
    CHECK(rep.samples == 300);
    CHECK(rep.passed == 300);
    if (!rep.first_failures.empty()) {
      CAPTURE(rep.first_failures[0]);
      CHECK(rep.first_failures.empty());
    }
  }
}

TEST_CASE("symbolic diagram proof") {
  for (int chart = 1; chart <= 3; ++chart) {
    mirror::SymbolicChartReport rep = mirror::verify_diagram_symbolic(chart);
    CHECK(rep.report.ok());
    CHECK(rep.report.cells_checked >= 9);
    CHECK(rep.empty_cases == 0);
    CHECK(rep.sign_cases == 16);
  }
  // Negative control: corrupted chart fact is detected.
  mirror::SymbolicChartReport bad = mirror::verify_diagram_symbolic(1, true);
  CHECK((!bad.report.ok() || bad.report.no_feasible_cells ||
         bad.empty_cases == bad.sign_cases));
}

TEST_CASE("classification") {
  ChartAtlas atlas = default_atlas();
  BSide bside(atlas);
  CHECK(bside.classify_smooth({Scalar(-3), Scalar(1), Scalar(2), Scalar(0), Scalar(-1)}) ==
        Smoothness::Singular);  // corner A' of the (0,-1) slice
  CHECK(bside.classify_smooth({Scalar(-2), Scalar(1), Scalar(1), Scalar(3), Scalar(0)}) ==
        Smoothness::Singular);  // corner A of the (3,0) slice
  CHECK(bside.classify_smooth({Scalar(-3), Scalar(1), Scalar(1), Scalar(0), Scalar(-1)}) ==
        Smoothness::Smooth);  // corner A of a q1=0, q2!=0 slice
  CHECK(bside.classify_smooth({Scalar(-2), Scalar(1, 2), Scalar(1), Scalar(2), Scalar(3)}) ==
        Smoothness::Smooth);  // generic first-segment point
  CHECK_THROWS_AS(
      bside.classify_smooth({Scalar(0), Scalar(0), Scalar(0), Scalar(0), Scalar(0)}),
      DomainError);
}

TEST_CASE("corner and middle preimages") {
  ChartAtlas atlas = default_atlas();
  BSide bside(atlas);
  // Corner A' over (0, 3): val(x1) >= -P1, val(x2) >= P1.
  NovikovNum y1 = mono(-1, Scalar(0)) + T(Scalar(5));
  YPoint pA = bside.preimage_corner_Aprime(y1, T(Scalar(3)), Scalar(3));
  CHECK(bside.y_membership(pA));
  CHECK(eq5(bside.F_map(pA), {Scalar(-2), Scalar(1), Scalar(2), Scalar(0), Scalar(3)}));

  // Corner A over (2, 0), z finite and z infinite branches.
  NovikovNum y2 = mono(-1, Scalar(0)) + T(Scalar(2));
  YPoint pB = bside.preimage_corner_A(T(Scalar(2)), y2, Scalar(1, 2), false);
  CHECK(bside.y_membership(pB));
  CHECK(eq5(bside.F_map(pB), {Scalar(-2), Scalar(1), Scalar(1), Scalar(2), Scalar(0)}));
  YPoint pC = bside.preimage_corner_A(T(Scalar(2)), mono(-1, Scalar(0)), Scalar(4), true);
  CHECK(bside.y_membership(pC));
  CHECK(eq5(bside.F_map(pC), {Scalar(-2), Scalar(1), Scalar(1), Scalar(2), Scalar(0)}));

  // Middle segment over (0, 0).
  YPoint pM = bside.preimage_middle(Scalar(3, 2), Scalar(1), Scalar(1));
  CHECK(bside.y_membership(pM));
  CHECK(eq5(bside.F_map(pM), {Scalar(-2), Scalar(1), Scalar(3, 2), Scalar(0), Scalar(0)}));

  CHECK_THROWS_AS(bside.preimage_middle(Scalar(10), Scalar(1), Scalar(1)), DomainError);
  CHECK_THROWS_AS(bside.preimage_corner_Aprime(T(Scalar(1)), T(Scalar(3)), Scalar(3)),
                  DomainError);
}

TEST_CASE("sampled locus curves map onto the singular lines") {
  ChartAtlas atlas = default_atlas();
  BSide bside(atlas);
  Sampler sampler(3);
  for (int i = 0; i < 200; ++i) {
    YPoint c1 = sampler.sample_C(atlas, 1);
    BasePoint f1 = bside.f_map(c1);
    CHECK(atlas.delta_contains(f1) == DeltaComponent::Delta1);
    YPoint c2 = sampler.sample_C(atlas, 2);
    BasePoint f2 = bside.f_map(c2);
    CHECK(atlas.delta_contains(f2) == DeltaComponent::Delta2);
  }
}
