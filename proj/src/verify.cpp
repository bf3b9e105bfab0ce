#include "conifold/verify.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "conifold/aside.hpp"
#include "conifold/novikov.hpp"
#include "conifold/plexpr.hpp"

namespace conifold {
namespace verify {

namespace {

using mirror::BSide;
using mirror::MirrorPoint;
using mirror::Sampler;
using mirror::Triple;
using mirror::YPoint;

struct SuiteAcc {
  long total = 0;
  long passed = 0;
  std::vector<std::string> failures;

  void check(bool ok, const std::string& what) {
    total++;
    if (ok) {
      passed++;
    } else if (failures.size() < 10) {
      failures.push_back(what);
    }
  }

  template <typename Fn>
  void guarded(Fn&& fn, const std::string& what) {
    try {
      check(fn(), what);
    } catch (const std::exception& e) {
      check(false, what + " (exception: " + e.what() + ")");
    }
  }

  Json report(const std::string& suite, long elapsed_ms) const {
    Json j;
    j["schema"] = 1;
    j["suite"] = suite;
    j["samples_or_cells"] = total;
    j["passed"] = passed;
    j["failed"] = total - passed;
    j["first_failures"] = failures;
    j["elapsed_ms"] = elapsed_ms;
    return j;
  }
};

bool vec3_eq(const Vec3& a, const Vec3& b) {
  return a[0] == b[0] && a[1] == b[1] && a[2] == b[2];
}

bool vec5_eq(const Vec5& a, const Vec5& b) {
  for (int i = 0; i < 5; ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

bool ypoint_eq(const YPoint& a, const YPoint& b) {
  // Projective z compared by cross-multiplication.
  NovikovNum cross = a.z.num * b.z.den - a.z.den * b.z.num;
  return a.x1.equal_upto_common_trunc(b.x1) && a.x2.equal_upto_common_trunc(b.x2) &&
         !cross.has_terms() && a.y1.equal_upto_common_trunc(b.y1) &&
         a.y2.equal_upto_common_trunc(b.y2);
}

Vec3 trop(const Triple& y) {
  return {y[0].val().finite(), y[1].val().finite(), y[2].val().finite()};
}

// ---------------------------------------------------------------------------
// novikov: field laws and valuation laws on random truncated series.
// ---------------------------------------------------------------------------
SuiteAcc suite_novikov(const RunConfig& cfg, const ChartAtlas&) {
  SuiteAcc acc;
  Sampler sampler(cfg.seed, cfg.trunc_order);
  for (long i = 0; i < cfg.samples; ++i) {
    NovikovNum a = sampler.series_with_val(sampler.grid(-8, 8), true);
    NovikovNum b = sampler.series_with_val(sampler.grid(-8, 8), true);
    NovikovNum c = sampler.series_with_val(sampler.grid(-8, 8), true);
    std::string tag = " #" + std::to_string(i);

    acc.guarded([&] { return (a * b).val() == a.val() + b.val(); },
                "val(ab) = val(a)+val(b)" + tag);
    acc.guarded(
        [&] {
          ExtScalar lb = (a + b).val_lower_bound();
          if (!(lb >= min(a.val(), b.val()))) return false;
          if (a.val() != b.val() && (a + b).val() != min(a.val(), b.val())) return false;
          return true;
        },
        "val(a+b) >= min, equality for distinct valuations" + tag);
    acc.guarded(
        [&] {
          NovikovNum r = a * a.inv(ExtScalar(Scalar(8)) - a.val()) - NovikovNum::one();
          return !r.has_terms();
        },
        "inversion residual beyond truncation only" + tag);
    acc.guarded([&] { return ((a + b) + c).equal_upto_common_trunc(a + (b + c)); },
                "additive associativity" + tag);
    acc.guarded([&] { return ((a * b) * c).equal_upto_common_trunc(a * (b * c)); },
                "multiplicative associativity" + tag);
    acc.guarded([&] { return (a * (b + c)).equal_upto_common_trunc(a * b + a * c); },
                "distributivity" + tag);
    acc.guarded([&] { return (a * b).equal_upto_common_trunc(b * a); },
                "commutativity" + tag);
    acc.guarded(
        [&] {
          NovikovNum u = sampler.series_with_val(Scalar(0), true);
          NovikovNum v = sampler.series_with_val(Scalar(0), true);
          return (u * v).val() == ExtScalar(0) &&
                 u.inv(ExtScalar(Scalar(8))).val() == ExtScalar(0);
        },
        "U_Lambda closed under product and inverse" + tag);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// gluing: superpotential and embedding compatibility, trop vs transitions.
// ---------------------------------------------------------------------------
SuiteAcc suite_gluing(const RunConfig& cfg, const ChartAtlas& atlas) {
  SuiteAcc acc;
  Sampler sampler(cfg.seed, cfg.trunc_order);
  BSide bside(atlas, cfg.trunc_order);
  for (long i = 0; i < cfg.samples; ++i) {
    // y1, y2 keep 1+y_i determinate (an exact -1 would put g off-domain);
    // leading coefficient -1 is stressed by the diagram suite instead.
    Triple y = {sampler.series_with_val(sampler.grid(-8, 8), false),
                sampler.series_with_val(sampler.grid(-8, 8), false),
                sampler.series_with_val(sampler.grid(-8, 8), true)};
    std::string tag = " #" + std::to_string(i);

    acc.guarded(
        [&] {
          return mirror::W(1, y).equal_upto_common_trunc(mirror::W(2, mirror::phi12(y)));
        },
        "W1 = W2 o Phi12" + tag);
    acc.guarded(
        [&] {
          return mirror::W(2, y).equal_upto_common_trunc(mirror::W(3, mirror::phi23(y)));
        },
        "W2 = W3 o Phi23" + tag);
    acc.guarded([&] { return ypoint_eq(bside.g(2, mirror::phi12(y)), bside.g(1, y)); },
                "g2 o Phi12 = g1" + tag);
    acc.guarded([&] { return ypoint_eq(bside.g(3, mirror::phi23(y)), bside.g(2, y)); },
                "g3 o Phi23 = g2" + tag);

    // trop(Phi(y)) equals the affine chart transition applied to trop(y),
    // on points of the wall-tube overlaps; side = sign of the shear variable.
    acc.guarded(
        [&] {
          const WallConfig& wc = atlas.walls();
          std::uniform_int_distribution<int> d8(1, 7), dsign(0, 1);
          Scalar q3 = wc.w1 - wc.delta * Scalar(Rational(d8(sampler.rng()), 8));
          Scalar q1 = (dsign(sampler.rng()) ? Scalar(1) : Scalar(-1)) *
                      (wc.delta + sampler.grid(1, 8));
          BasePoint q{q1, sampler.grid(-8, 8), q3};
          if (!atlas.chart_contains(1, q) || !atlas.chart_contains(2, q)) return false;
          Vec3 c = atlas.chart_map(1, q);
          Triple yy = {sampler.series_with_val(c[0], true),
                       sampler.series_with_val(c[1], true),
                       sampler.series_with_val(c[2], true)};
          Side side = q1 > Scalar(0) ? Side::Plus : Side::Minus;
          return vec3_eq(trop(mirror::phi12(yy)),
                         transition(1, 2, side).apply(trop(yy)));
        },
        "trop o Phi12 = transition(1,2,sign q1) o trop" + tag);
    acc.guarded(
        [&] {
          const WallConfig& wc = atlas.walls();
          std::uniform_int_distribution<int> d8(1, 7), dsign(0, 1);
          Scalar q3 = wc.w2 - wc.delta * Scalar(Rational(d8(sampler.rng()), 8));
          Scalar q2 = (dsign(sampler.rng()) ? Scalar(1) : Scalar(-1)) *
                      (wc.delta + sampler.grid(1, 8));
          BasePoint q{sampler.grid(-8, 8), q2, q3};
          if (!atlas.chart_contains(2, q) || !atlas.chart_contains(3, q)) return false;
          Vec3 c = atlas.chart_map(2, q);
          Triple yy = {sampler.series_with_val(c[0], true),
                       sampler.series_with_val(c[1], true),
                       sampler.series_with_val(c[2], true)};
          Side side = q2 > Scalar(0) ? Side::Plus : Side::Minus;
          return vec3_eq(trop(mirror::phi23(yy)),
                         transition(2, 3, side).apply(trop(yy)));
        },
        "trop o Phi23 = transition(2,3,sign q2) o trop" + tag);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// diagram: randomized F o g = j o tau per chart.
// ---------------------------------------------------------------------------
SuiteAcc suite_diagram(const RunConfig& cfg, const ChartAtlas& atlas, Json* detail) {
  SuiteAcc acc;
  BSide bside(atlas, cfg.trunc_order);
  Json charts = Json::array();
  for (int k = 1; k <= 3; ++k) {
    mirror::DiagramReport rep =
        mirror::verify_diagram_chart(bside, k, cfg.samples, cfg.seed, 8);
    acc.total += rep.samples;
    acc.passed += rep.passed;
    for (const auto& f : rep.first_failures)
      if (acc.failures.size() < 10) acc.failures.push_back(f);
    charts.push_back({{"chart", k}, {"samples", rep.samples}, {"passed", rep.passed}});
  }
  if (detail) (*detail)["charts"] = charts;
  return acc;
}

// ---------------------------------------------------------------------------
// symbolic: PL proof of the diagram identity per chart + negative control.
// ---------------------------------------------------------------------------
SuiteAcc suite_symbolic(const RunConfig&, const ChartAtlas&, Json* detail) {
  SuiteAcc acc;
  Json charts = Json::array();
  for (int k = 1; k <= 3; ++k) {
    mirror::SymbolicChartReport rep = mirror::verify_diagram_symbolic(k);
    acc.total += rep.report.cells_checked;
    acc.passed += rep.report.cells_passed;
    for (const auto& f : rep.report.failures)
      if (acc.failures.size() < 10)
        acc.failures.push_back("chart " + std::to_string(k) + " cell " + f.cell.str() +
                               ": " + f.lhs.str() + " != " + f.rhs.str());
    bool healthy = !rep.report.no_feasible_cells && rep.empty_cases == 0 &&
                   rep.report.cells_checked >= 9;
    acc.check(healthy, "chart " + std::to_string(k) +
                           ": feasible cells present (got " +
                           std::to_string(rep.report.cells_checked) + ")");
    charts.push_back({{"chart", k},
                      {"cells_checked", rep.report.cells_checked},
                      {"cells_passed", rep.report.cells_passed},
                      {"sign_cases", rep.sign_cases}});
  }
  // Negative control: a corrupted chart fact must not silently pass.
  mirror::SymbolicChartReport bad = mirror::verify_diagram_symbolic(1, true);
  bool detected = !bad.report.ok() || bad.report.no_feasible_cells ||
                  bad.empty_cases == bad.sign_cases;
  acc.check(detected, "negative control: corrupted fact detected");
  if (detail) {
    (*detail)["charts"] = charts;
    (*detail)["negative_control_empty_cases"] = bad.empty_cases;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// aside: float A-side fibration checks.
// ---------------------------------------------------------------------------
SuiteAcc suite_aside(const RunConfig& cfg, const ChartAtlas& atlas) {
  SuiteAcc acc;
  aside::ASide as(atlas.walls());
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> box(-3.0, 3.0), angle(0.0, 6.283185307179586);
  double w1 = atlas.walls().w1.as_double();
  double w2 = atlas.walls().w2.as_double();
  for (long i = 0; i < cfg.samples; ++i) {
    std::array<double, 3> q{box(rng), box(rng), box(rng)};
    // Stay off the singular locus.
    if ((std::fabs(q[2] - w1) < 1e-6 && std::fabs(q[0]) < 1e-6) ||
        (std::fabs(q[2] - w2) < 1e-6 && std::fabs(q[1]) < 1e-6))
      q[0] = q[1] = 1.0;
    double phi = angle(rng), a1 = angle(rng), a2 = angle(rng);
    std::string tag = " #" + std::to_string(i);

    aside::XPoint p = as.fiber_point(q, phi, a1, a2);
    acc.check(as.residual(p) <= 1e-9, "fiber_point residual <= 1e-9" + tag);
    acc.guarded(
        [&] {
          std::array<double, 3> back = as.pi_map(p);
          for (int j = 0; j < 3; ++j)
            if (std::fabs(back[j] - q[j]) > 1e-9) return false;
          return true;
        },
        "pi o fiber_point roundtrip <= 1e-9" + tag);
    acc.guarded(
        [&] {
          double s = angle(rng), t = angle(rng);
          aside::XPoint moved = aside::ASide::torus_act(p, s, t);
          std::array<double, 3> before = as.pi_map(p), after = as.pi_map(moved);
          for (int j = 0; j < 3; ++j)
            if (std::fabs(before[j] - after[j]) > 1e-12) return false;
          return true;
        },
        "T^2-invariance of pi to 1e-12" + tag);

    // Divisor images: u1 = 0 forces z = -c1, so q3 = w1 and q1 <= 0.
    acc.guarded(
        [&] {
          std::complex<double> v1(box(rng), box(rng));
          std::complex<double> u2 = std::polar(std::exp(box(rng) / 3.0), angle(rng));
          aside::XPoint d;
          d.u1 = 0.0;
          d.v1 = v1;
          d.u2 = u2;
          d.v2 = (as.c2() - as.c1()) / u2;
          d.z = -as.c1();
          std::array<double, 3> img = as.pi_map(d);
          return img[0] <= 1e-9 && std::fabs(img[2] - w1) <= 1e-9;
        },
        "divisor {u1=0} maps into {q1<=0, q3=w1}" + tag);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// images: slice = broken line (Cases 1-4), j(B) = F(Y), classification.
// ---------------------------------------------------------------------------
void slice_check(SuiteAcc& acc, const BSide& bside, Sampler& sampler, const Scalar& q1,
                 const Scalar& q2, long n) {
  const ChartAtlas& atlas = bside.atlas();
  BrokenLine bl = atlas.broken_line(q1, q2);
  std::string where = " at (" + q1.str() + "," + q2.str() + ")";
  for (long i = 0; i < n; ++i) {
    std::string tag = where + " #" + std::to_string(i);
    // Free-val(x2) branch covers every t > 0 in both directions.
    acc.guarded(
        [&] {
          Scalar t = sampler.grid(1, 16);
          NovikovNum y1 = sampler.series_with_val(q1, q1 != Scalar(0));
          NovikovNum y2 = sampler.series_with_val(q2, q2 != Scalar(0));
          YPoint p = bside.preimage_at(y1, y2, t, sampler.tail_above(t));
          if (!bside.y_membership(p)) return false;
          Vec5 F = bside.F_map(p);
          Vec3 r = bl.eval(t);
          if (!(F[0] == r[0] && F[1] == r[1] && F[2] == r[2])) return false;
          bside.classify_smooth(F);  // throws if off the broken line
          return F[3] == q1 && F[4] == q2;
        },
        "slice preimage lands on r(t)" + tag);
  }
  if (q1 == Scalar(0)) {
    for (long i = 0; i < std::max<long>(n / 10, 3); ++i) {
      acc.guarded(
          [&] {
            // Corner A' branch: val(x1) >= -P1+m and val(x2) >= P1.
            bool exact_minus_one = i % 3 == 0;
            Scalar zeta = atlas.P1() - min0(q2) + sampler.grid(0, 4);
            Scalar e1 = zeta - (atlas.P1() - min0(q2)) + sampler.grid(1, 8);
            NovikovNum y1 =
                exact_minus_one
                    ? NovikovNum::monomial(GaussianRational(-1), Scalar(0))
                    : NovikovNum::from_terms(
                          {{GaussianRational(-1), Scalar(0)}, {GaussianRational(1), e1}});
            NovikovNum y2 = sampler.series_with_val(q2, q2 != Scalar(0));
            YPoint p = bside.preimage_corner_Aprime(y1, y2, zeta);
            if (!bside.y_membership(p)) return false;
            Vec5 F = bside.F_map(p);
            Vec3 c = bl.corner_Aprime();
            if (!(F[0] == c[0] && F[1] == c[1] && F[2] == c[2])) return false;
            return bside.classify_smooth(F) == mirror::Smoothness::Singular;
          },
          "corner A' branch" + where + " #" + std::to_string(i));
    }
  }
  if (q2 == Scalar(0)) {
    for (long i = 0; i < std::max<long>(n / 10, 3); ++i) {
      acc.guarded(
          [&] {
            bool z_inf = i % 3 == 0;
            NovikovNum y1 = sampler.series_with_val(q1, q1 != Scalar(0));
            Scalar zeta = z_inf ? atlas.P2() + sampler.grid(0, 4)
                                : atlas.P2() - sampler.grid(0, 4);
            Scalar e2 = atlas.P2() - zeta + sampler.grid(1, 8);
            NovikovNum y2 =
                z_inf ? NovikovNum::monomial(GaussianRational(-1), Scalar(0))
                      : NovikovNum::from_terms(
                            {{GaussianRational(-1), Scalar(0)}, {GaussianRational(1), e2}});
            YPoint p = bside.preimage_corner_A(y1, y2, zeta, z_inf);
            if (!bside.y_membership(p)) return false;
            Vec5 F = bside.F_map(p);
            Vec3 c = bl.corner_A();
            if (!(F[0] == c[0] && F[1] == c[1] && F[2] == c[2])) return false;
            return bside.classify_smooth(F) == mirror::Smoothness::Singular;
          },
          "corner A branch" + where + " #" + std::to_string(i));
    }
  }
  if (q1 == Scalar(0) && q2 == Scalar(0)) {
    for (long i = 0; i < std::max<long>(n / 10, 3); ++i) {
      acc.guarded(
          [&] {
            // Middle segment with free val(z) in [P2, P1].
            std::uniform_int_distribution<int> d(0, 8);
            Scalar zeta = atlas.P2() + (atlas.P1() - atlas.P2()) *
                                           Scalar(Rational(d(sampler.rng()), 8));
            YPoint p =
                bside.preimage_middle(zeta, sampler.grid(1, 8), sampler.grid(1, 8));
            if (!bside.y_membership(p)) return false;
            Vec5 F = bside.F_map(p);
            return F[0] == -atlas.P1() && F[1] == atlas.P2() && F[2] == zeta;
          },
          "middle free-val(z) branch" + where + " #" + std::to_string(i));
    }
  }
}

SuiteAcc suite_images(const RunConfig& cfg, const ChartAtlas& atlas) {
  SuiteAcc acc;
  Sampler sampler(cfg.seed, cfg.trunc_order);
  BSide bside(atlas, cfg.trunc_order);
  long n = std::max<long>(cfg.samples / 4, 4);

  // Cases 1-4: both q_i nonzero, q1 = 0, q2 = 0, both zero.
  slice_check(acc, bside, sampler, Scalar(2), Scalar(3), n);
  slice_check(acc, bside, sampler, Scalar(0), Scalar(3), n);
  slice_check(acc, bside, sampler, Scalar(2), Scalar(0), n);
  slice_check(acc, bside, sampler, Scalar(0), Scalar(0), n);

  for (long i = 0; i < cfg.samples; ++i) {
    std::string tag = " #" + std::to_string(i);
    // j(B) = F(Y'): a preimage exists over every base point, and F of the
    // val(x2) > 0 locus lands in j(B).
    acc.guarded(
        [&] {
          BasePoint q{sampler.grid(-12, 12), sampler.grid(-12, 12),
                      sampler.grid(-12, 12)};
          Scalar t = atlas.psi(q);
          NovikovNum y1 = sampler.series_with_val(q.q1, q.q1 != Scalar(0));
          NovikovNum y2 = sampler.series_with_val(q.q2, q.q2 != Scalar(0));
          YPoint p = bside.preimage_at(y1, y2, t, sampler.tail_above(t));
          if (!(p.x2.val_lower_bound() > ExtScalar(0))) return false;
          if (!vec5_eq(bside.F_map(p), atlas.j_embed(q))) return false;
          BasePoint back = bside.f_map(p);
          return back == q;
        },
        "j(B) = F(Y): constructed preimage and j_inverse roundtrip" + tag);
    // Smooth/singular classification on image points.
    acc.guarded(
        [&] {
          Scalar s = sampler.grid(-8, 8);
          Vec5 d1 = atlas.j_embed({Scalar(0), s, atlas.walls().w1});
          Vec5 d2 = atlas.j_embed({s, Scalar(0), atlas.walls().w2});
          return bside.classify_smooth(d1) == mirror::Smoothness::Singular &&
                 bside.classify_smooth(d2) == mirror::Smoothness::Singular;
        },
        "j(Delta) classified singular" + tag);
    acc.guarded(
        [&] {
          std::uniform_int_distribution<int> dz(0, 3);
          Scalar q1 = dz(sampler.rng()) == 0 ? Scalar(0) : sampler.grid(-8, 8);
          Scalar q2 = dz(sampler.rng()) == 0 ? Scalar(0) : sampler.grid(-8, 8);
          Scalar t = sampler.grid(1, 16);
          Vec3 r = atlas.broken_line_eval(q1, q2, t);
          bool want_singular = (q1 == Scalar(0) && t == atlas.P1()) ||
                               (q2 == Scalar(0) && t == atlas.P2());
          mirror::Smoothness got = bside.classify_smooth({r[0], r[1], r[2], q1, q2});
          return (got == mirror::Smoothness::Singular) == want_singular;
        },
        "classification matches corner/slice rule" + tag);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// locus: f(C_i) = Delta_i exactly; pi(C-hat_i) in Delta_i with bin coverage.
// ---------------------------------------------------------------------------
SuiteAcc suite_locus(const RunConfig& cfg, const ChartAtlas& atlas) {
  SuiteAcc acc;
  Sampler sampler(cfg.seed, cfg.trunc_order);
  BSide bside(atlas, cfg.trunc_order);
  for (long i = 0; i < cfg.samples; ++i) {
    std::string tag = " #" + std::to_string(i);
    acc.guarded(
        [&] {
          YPoint c1 = sampler.sample_C(atlas, 1);
          BasePoint f = bside.f_map(c1);
          return atlas.delta_contains(f) == DeltaComponent::Delta1 &&
                 f.q2 == c1.y2.val().finite();
        },
        "f(C1) in Delta_1" + tag);
    acc.guarded(
        [&] {
          YPoint c2 = sampler.sample_C(atlas, 2);
          BasePoint f = bside.f_map(c2);
          return atlas.delta_contains(f) == DeltaComponent::Delta2 &&
                 f.q1 == c2.y1.val().finite();
        },
        "f(C2) in Delta_2" + tag);
  }

  // A-side fixed-point curves, float: pi(C-hat_i) subset Delta_i with
  // 100-bin coverage of the parameter interval.
  aside::ASide as(atlas.walls());
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0),
      angle(0.0, 6.283185307179586);
  double w1 = atlas.walls().w1.as_double(), w2 = atlas.walls().w2.as_double();
  std::array<std::array<bool, 100>, 2> bins{};
  for (long i = 0; i < cfg.samples; ++i) {
    std::string tag = " #" + std::to_string(i);
    double u = 2.0 * unit(rng) - 1.0;  // parameter of the sweep
    int bin = std::min(99, static_cast<int>((u + 1.0) / 2.0 * 100.0));
    std::complex<double> a = std::polar(std::exp(u), angle(rng));
    acc.guarded(
        [&] {
          aside::XPoint p = as.chat_point(1, a, (as.c2() - as.c1()) / a);
          std::array<double, 3> img = as.pi_map(p);
          bins[0][bin] = true;
          return std::fabs(img[0]) <= 1e-9 && std::fabs(img[2] - w1) <= 1e-9;
        },
        "pi(C-hat_1) in Delta_1" + tag);
    acc.guarded(
        [&] {
          aside::XPoint p = as.chat_point(2, a, (as.c1() - as.c2()) / a);
          std::array<double, 3> img = as.pi_map(p);
          bins[1][bin] = true;
          return std::fabs(img[1]) <= 1e-9 && std::fabs(img[2] - w2) <= 1e-9;
        },
        "pi(C-hat_2) in Delta_2" + tag);
  }
  if (cfg.samples >= 1000) {
    for (int c = 0; c < 2; ++c) {
      long hit = 0;
      for (bool b : bins[c]) hit += b ? 1 : 0;
      acc.check(hit == 100, "C-hat_" + std::to_string(c + 1) +
                                " parameter sweep covers all 100 bins (hit " +
                                std::to_string(hit) + ")");
    }
  }
  return acc;
}

// ---------------------------------------------------------------------------
// base: j roundtrip, atlas covering and facts, monodromy, disk lattice.
// ---------------------------------------------------------------------------
SuiteAcc suite_base(const RunConfig& cfg, const ChartAtlas& atlas) {
  SuiteAcc acc;
  Sampler sampler(cfg.seed, cfg.trunc_order);
  const WallConfig& wc = atlas.walls();

  for (long i = 0; i < cfg.samples; ++i) {
    std::string tag = " #" + std::to_string(i);
    BasePoint q{sampler.grid(-12, 12), sampler.grid(-12, 12), sampler.grid(-12, 12)};
    acc.guarded(
        [&] {
          BasePoint back = atlas.j_inverse(atlas.j_embed(q));
          return back == q;
        },
        "j_inverse o j_embed = id" + tag);
    acc.guarded(
        [&] {
          BasePoint q2{q.q1 + Scalar(1, 4), q.q2, q.q3};
          return !vec5_eq(atlas.j_embed(q), atlas.j_embed(q2));
        },
        "j injective on distinct points" + tag);
    acc.guarded(
        [&] {
          // Covering holds off the walls; denominator 997 never hits them.
          std::uniform_int_distribution<int> d(-3 * 997, 3 * 997);
          BasePoint p{Scalar(Rational(d(sampler.rng()), 997)),
                      Scalar(Rational(d(sampler.rng()), 997)),
                      Scalar(Rational(d(sampler.rng()), 997))};
          if (p.q3 == wc.w1 || p.q3 == wc.w2) return true;  // measure-zero resample
          return atlas.chart_contains(1, p) || atlas.chart_contains(2, p) ||
                 atlas.chart_contains(3, p);
        },
        "atlas covers off-wall points" + tag);
    acc.guarded(
        [&] {
          Scalar s = sampler.grid(-8, 8);
          BasePoint d1{Scalar(0), s, wc.w1}, d2{s, Scalar(0), wc.w2};
          for (int k = 1; k <= 3; ++k)
            if (atlas.chart_contains(k, d1) || atlas.chart_contains(k, d2)) return false;
          return atlas.delta_contains(d1) == DeltaComponent::Delta1 &&
                 atlas.delta_contains(d2) == DeltaComponent::Delta2;
        },
        "no chart contains Delta; delta_contains classifies" + tag);
    acc.guarded(
        [&] {
          // Chart facts consumed by the symbolic prover.
          Scalar P = atlas.psi(sampler.base_in_chart(atlas, 1, false, false));
          if (!(P > atlas.P2())) return false;
          Scalar Pz = atlas.psi(sampler.base_in_chart(atlas, 1, true, false));
          if (!(Pz > atlas.P1())) return false;
          Scalar Q = atlas.psi(sampler.base_in_chart(atlas, 2, false, false));
          if (!(Q < atlas.P1())) return false;
          Scalar Qz = atlas.psi(sampler.base_in_chart(atlas, 2, false, true));
          if (!(Qz > atlas.P2())) return false;
          Scalar R = atlas.psi(sampler.base_in_chart(atlas, 3, false, false));
          return R < atlas.P2();
        },
        "chart psi facts" + tag);
    acc.guarded(
        [&] {
          BrokenLine bl = atlas.broken_line(q.q1, q.q2);
          return vec3_eq(bl.eval(atlas.P2()), bl.corner_A()) &&
                 vec3_eq(bl.eval(atlas.P1()), bl.corner_Aprime());
        },
        "broken line continuous through corners" + tag);
    acc.guarded(
        [&] {
          Scalar s = sampler.grid(-8, 8);
          Vec5 jd1 = atlas.j_embed({Scalar(0), s, wc.w1});
          Vec5 jd2 = atlas.j_embed({s, Scalar(0), wc.w2});
          BrokenLine b1 = atlas.broken_line(Scalar(0), s);
          BrokenLine b2 = atlas.broken_line(s, Scalar(0));
          Vec3 a1 = b1.corner_Aprime(), a2 = b2.corner_A();
          return vec5_eq(jd1, {a1[0], a1[1], a1[2], Scalar(0), s}) &&
                 vec5_eq(jd2, {a2[0], a2[1], a2[2], s, Scalar(0)});
        },
        "j(Delta_1) = A' points, j(Delta_2) = A points" + tag);
  }

  // Monodromy around the two singular lines (loop words fixed).
  acc.guarded(
      [&] {
        AffineMap3 m1 = monodromy({{{1, 2}, Side::Minus}, {{2, 1}, Side::Plus}});
        AffineMap3 want1{{{{1, 0, 0}, {0, 1, 0}, {1, 0, 1}}}, {0, 0, 0}};
        AffineMap3 oracle1 =
            transition(2, 1, Side::Plus).compose(transition(1, 2, Side::Minus));
        return m1 == want1 && m1 == oracle1 && m1.det() == 1;
      },
      "monodromy around Delta_1 is the q1-shear");
  acc.guarded(
      [&] {
        AffineMap3 m2 = monodromy({{{2, 3}, Side::Minus}, {{3, 2}, Side::Plus}});
        AffineMap3 want2{{{{1, 0, 0}, {0, 1, 0}, {0, 1, 1}}}, {0, 0, 0}};
        return m2 == want2 && m2.det() == 1;
      },
      "monodromy around Delta_2 is the q2-shear");
  acc.guarded(
      [&] {
        AffineMap3 t = monodromy({{{1, 2}, Side::Plus}, {{2, 1}, Side::Plus}});
        return t == AffineMap3::identity();
      },
      "trivial loop has trivial monodromy");
  acc.guarded([&] { return DiskLattice::relations_check(nullptr); },
              "disk lattice relations");
  acc.guarded(
      [&] {
        std::vector<std::string> diag;
        return !DiskLattice::relations_check(&diag, true) && !diag.empty();
      },
      "disk lattice negative control");
  return acc;
}

}  // namespace

void RunConfig::validate() const {
  if (!(w1 > w2)) throw DomainError("config: requires w1 > w2");
  if (!(delta > 0 && delta < (w1 - w2) / 2))
    throw DomainError("config: requires 0 < delta < (w1-w2)/2");
  if (psi_model != "rational" && psi_model != "exp")
    throw DomainError("config: psi_model must be rational or exp");
  if (mode != "exact" && mode != "float")
    throw DomainError("config: mode must be exact or float");
  if (psi_model == "exp" && mode != "float")
    throw DomainError("config: the exp psi model requires float mode");
  if (samples < 1) throw DomainError("config: samples >= 1");
  if (trunc_order <= 0) throw DomainError("config: trunc_order > 0");
}

ChartAtlas RunConfig::make_atlas() const {
  validate();
  set_num_mode(mode == "float" ? NumMode::Float : NumMode::Exact);
  std::shared_ptr<const PsiModel> model;
  if (psi_model == "exp")
    model = std::make_shared<ExpPsiModel>();
  else
    model = std::make_shared<RationalPsiModel>();
  return ChartAtlas(WallConfig{Scalar(w1), Scalar(w2), Scalar(delta)}, model);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "novikov", "gluing", "diagram", "symbolic", "aside", "images", "locus", "base"};
  return names;
}

Json run_suite(const std::string& name, const RunConfig& cfg) {
  ChartAtlas atlas = cfg.make_atlas();
  auto t0 = std::chrono::steady_clock::now();
  SuiteAcc acc;
  Json detail;
  if (name == "novikov")
    acc = suite_novikov(cfg, atlas);
  else if (name == "gluing")
    acc = suite_gluing(cfg, atlas);
  else if (name == "diagram")
    acc = suite_diagram(cfg, atlas, &detail);
  else if (name == "symbolic")
    acc = suite_symbolic(cfg, atlas, &detail);
  else if (name == "aside")
    acc = suite_aside(cfg, atlas);
  else if (name == "images")
    acc = suite_images(cfg, atlas);
  else if (name == "locus")
    acc = suite_locus(cfg, atlas);
  else if (name == "base")
    acc = suite_base(cfg, atlas);
  else
    throw DomainError("unknown suite: " + name);
  auto t1 = std::chrono::steady_clock::now();
  long ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return acc.report(name, ms);
}

Json run_all(const RunConfig& cfg) {
  Json out;
  out["schema"] = 1;
  out["suites"] = Json::array();
  long passed = 0, failed = 0;
  for (const auto& name : suite_names()) {
    Json r = run_suite(name, cfg);
    passed += r["passed"].get<long>();
    failed += r["failed"].get<long>();
    out["suites"].push_back(std::move(r));
  }
  out["passed"] = passed;
  out["failed"] = failed;
  return out;
}

bool report_ok(const Json& report) {
  if (report.contains("failed")) return report["failed"].get<long>() == 0;
  return false;
}

}  // namespace verify
}  // namespace conifold
