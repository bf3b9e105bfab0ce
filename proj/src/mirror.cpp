#include "conifold/mirror.hpp"

#include <sstream>
#include <thread>

namespace conifold {
namespace mirror {

namespace {

NovikovNum one_plus(const NovikovNum& y) { return NovikovNum::one() + y; }

bool is_exact_zero(const NovikovNum& a) {
  return !a.has_terms() && a.trunc().is_pos_inf();
}

/// min{val(a), bound} when provable; the series only needs to be known
/// far enough to separate it from the finite bound.
ExtScalar min_with(const NovikovNum& a, const ExtScalar& bound) {
  if (a.has_terms()) return min(a.val(), bound);
  if (a.trunc() >= bound) return bound;
  throw IndeterminateValuation("valuation known only above trunc " + a.trunc().str());
}

Scalar finite_val(const NovikovNum& a, const char* what) {
  ExtScalar v = a.val();
  if (!v.is_finite()) throw DomainError(std::string(what) + ": valuation must be finite");
  return v.finite();
}

std::string vec5_str(const Vec5& v) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < 5; ++i) os << (i ? ", " : "") << v[i].str();
  os << ")";
  return os.str();
}

}  // namespace

Triple phi12(const Triple& y) { return {y[0], y[1], y[2] * one_plus(y[0])}; }

Triple phi23(const Triple& y) { return {y[0], y[1], y[2] * one_plus(y[1])}; }

NovikovNum W(int k, const Triple& y) {
  switch (k) {
    case 1: return y[2] * one_plus(y[0]) * one_plus(y[1]);
    case 2: return y[2] * one_plus(y[1]);
    case 3: return y[2];
    default: throw DomainError("chart index must be 1, 2 or 3");
  }
}

BSide::BSide(const ChartAtlas& atlas, Rational trunc_order)
    : atlas_(atlas), trunc_order_(std::move(trunc_order)) {
  if (trunc_order_ <= 0) throw DomainError("BSide: trunc_order must be positive");
}

NovikovNum BSide::invert(const NovikovNum& a) const {
  ExtScalar order = ExtScalar(Scalar(trunc_order_)) - a.val();
  return a.inv(order);
}

bool BSide::y_membership(const YPoint& p) const {
  if (is_exact_zero(p.z.num) && is_exact_zero(p.z.den)) return false;
  NovikovNum d1 = p.x1 * p.z.num - one_plus(p.y1) * p.z.den;
  NovikovNum d2 = p.x2 * p.z.den - one_plus(p.y2) * p.z.num;
  return !d1.has_terms() && !d2.has_terms();
}

Vec5 BSide::F_map(const YPoint& p) const {
  Scalar q1 = finite_val(p.y1, "F_map: val(y1)");
  Scalar q2 = finite_val(p.y2, "F_map: val(y2)");
  Scalar m = min0(q1) + min0(q2);
  Scalar P1 = atlas_.P1(), P2 = atlas_.P2();
  ExtScalar F1 = min_with(p.x1, ExtScalar(-P1 + m));
  ExtScalar F2 = min_with(p.x2, ExtScalar(P2));
  ExtScalar G = median(p.z.val() + ExtScalar(min0(q2)), ExtScalar(P1), ExtScalar(P2));
  return {F1.finite(), F2.finite(), G.finite(), q1, q2};
}

BasePoint BSide::f_map(const YPoint& p) const {
  if (!(p.x2.val_lower_bound() > ExtScalar(0)))
    throw DomainError("not in image of j: requires val(x2) > 0");
  return atlas_.j_inverse(F_map(p));
}

Smoothness BSide::classify_smooth(const Vec5& p) const {
  const Scalar &q1 = p[3], &q2 = p[4];
  BrokenLine bl = atlas_.broken_line(q1, q2);
  Vec3 pt{p[0], p[1], p[2]};
  Scalar P1 = atlas_.P1(), P2 = atlas_.P2();
  Scalar m = min0(q1) + min0(q2);
  Scalar t(0);
  if (pt[1] < P2) {
    t = pt[1];
  } else if (P2 < pt[2] && pt[2] < P1) {
    t = pt[2];
  } else if (pt[0] < -P1 + m) {
    t = m - pt[0];
  } else if (pt == bl.corner_A()) {
    t = P2;
  } else if (pt == bl.corner_Aprime()) {
    t = P1;
  } else {
    throw DomainError("classify_smooth: point not on the broken line");
  }
  if (!(t > Scalar(0)) || !(bl.eval(t) == pt))
    throw DomainError("classify_smooth: point not on the broken line");
  if (q2 == Scalar(0) && pt == bl.corner_A()) return Smoothness::Singular;
  if (q1 == Scalar(0) && pt == bl.corner_Aprime()) return Smoothness::Singular;
  return Smoothness::Smooth;
}

BasePoint BSide::tau_base(const MirrorPoint& m) const {
  Vec3 c{finite_val(m.y[0], "tau_base: val(y1)"), finite_val(m.y[1], "tau_base: val(y2)"),
         finite_val(m.y[2], "tau_base: val(y3)")};
  return atlas_.chart_unmap(m.chart, c);
}

YPoint BSide::g(int k, const Triple& y) const {
  NovikovNum a1 = one_plus(y[0]), a2 = one_plus(y[1]);
  const NovikovNum& y3 = y[2];
  NovikovNum y3inv = invert(y3);
  switch (k) {
    case 1: return {y3inv, y3 * a1 * a2, {y3 * a1, NovikovNum::one()}, y[0], y[1]};
    case 2: return {a1 * y3inv, y3 * a2, {y3, NovikovNum::one()}, y[0], y[1]};
    case 3: return {a1 * a2 * y3inv, y3, {y3, a2}, y[0], y[1]};
    default: throw DomainError("chart index must be 1, 2 or 3");
  }
}

YPoint BSide::g_glued(const MirrorPoint& m) const { return g(m.chart, m.y); }

YPoint BSide::preimage_at(const NovikovNum& y1, const NovikovNum& y2, const Scalar& t,
                          const NovikovNum& x2_tail) const {
  if (!(t > Scalar(0))) throw DomainError("preimage_at: requires t > 0");
  NovikovNum x2 = NovikovNum::monomial(GaussianRational(1), t) + x2_tail;
  if (x2.val() != ExtScalar(t))
    throw DomainError("preimage_at: x2 tail must lie strictly above t");
  NovikovNum a1 = one_plus(y1), a2 = one_plus(y2);
  // The image lands on r(t) exactly when val(1+y_i) = min{0, val y_i}.
  for (const auto* a : {&a1, &a2}) {
    const NovikovNum& y = (a == &a1) ? y1 : y2;
    if (a->val() != ExtScalar(min0(finite_val(y, "preimage_at: val(y_i)"))))
      throw DomainError("preimage_at: requires val(1+y_i) = min{0, val(y_i)}");
  }
  NovikovNum x1 = a1 * a2 * invert(x2);
  return {x1, x2, {x2, a2}, y1, y2};
}

YPoint BSide::preimage_corner_Aprime(const NovikovNum& y1, const NovikovNum& y2,
                                     const Scalar& zeta) const {
  if (finite_val(y1, "preimage_corner_Aprime: val(y1)") != Scalar(0))
    throw DomainError("preimage_corner_Aprime: requires val(y1) = 0");
  NovikovNum a1 = one_plus(y1), a2 = one_plus(y2);
  Scalar m2 = min0(finite_val(y2, "preimage_corner_Aprime: val(y2)"));
  if (a2.val() != ExtScalar(m2))
    throw DomainError("preimage_corner_Aprime: requires val(1+y2) = min{0, val(y2)}");
  ExtScalar e1 = min_with(a1, ExtScalar::pos_inf());
  if (!(ExtScalar(zeta) >= ExtScalar(atlas_.P1() - m2)) ||
      !(e1 >= ExtScalar(zeta) - ExtScalar(atlas_.P1() - m2)))
    throw DomainError("preimage_corner_Aprime: zeta out of range");
  NovikovNum zn = NovikovNum::monomial(GaussianRational(1), zeta);
  NovikovNum x1 = a1 * NovikovNum::monomial(GaussianRational(1), -zeta);
  NovikovNum x2 = a2 * zn;
  return {x1, x2, {zn, NovikovNum::one()}, y1, y2};
}

YPoint BSide::preimage_corner_A(const NovikovNum& y1, const NovikovNum& y2,
                                const Scalar& zeta, bool z_infinite) const {
  if (finite_val(y2, "preimage_corner_A: val(y2)") != Scalar(0))
    throw DomainError("preimage_corner_A: requires val(y2) = 0");
  NovikovNum a1 = one_plus(y1), a2 = one_plus(y2);
  Scalar m1 = min0(finite_val(y1, "preimage_corner_A: val(y1)"));
  if (z_infinite) {
    if (!is_exact_zero(a2))
      throw DomainError("preimage_corner_A: z = inf requires y2 = -1 exactly");
    if (!(zeta >= atlas_.P2()))
      throw DomainError("preimage_corner_A: zeta out of range");
    NovikovNum x2 = NovikovNum::monomial(GaussianRational(1), zeta);
    return {NovikovNum::zero(), x2, {NovikovNum::one(), NovikovNum::zero()}, y1, y2};
  }
  if (a1.val() != ExtScalar(m1))
    throw DomainError("preimage_corner_A: requires val(1+y1) = min{0, val(y1)}");
  ExtScalar e2 = min_with(a2, ExtScalar::pos_inf());
  if (!(zeta <= atlas_.P2()) || !(e2 >= ExtScalar(atlas_.P2() - zeta)))
    throw DomainError("preimage_corner_A: zeta out of range");
  NovikovNum zn = NovikovNum::monomial(GaussianRational(1), zeta);
  NovikovNum x1 = a1 * NovikovNum::monomial(GaussianRational(1), -zeta);
  NovikovNum x2 = a2 * zn;
  return {x1, x2, {zn, NovikovNum::one()}, y1, y2};
}

YPoint BSide::preimage_middle(const Scalar& zeta, const Scalar& a, const Scalar& b) const {
  if (!(zeta >= atlas_.P2()) || !(zeta <= atlas_.P1()))
    throw DomainError("preimage_middle: requires P2 <= zeta <= P1");
  if (!(a > Scalar(0)) || !(b > Scalar(0)))
    throw DomainError("preimage_middle: requires a, b > 0");
  auto minus_one_plus = [](const Scalar& e) {
    return NovikovNum::from_terms(
        {{GaussianRational(-1), Scalar(0)}, {GaussianRational(1), e}});
  };
  NovikovNum y1 = minus_one_plus(a), y2 = minus_one_plus(b);
  NovikovNum zn = NovikovNum::monomial(GaussianRational(1), zeta);
  NovikovNum x1 = one_plus(y1) * NovikovNum::monomial(GaussianRational(1), -zeta);
  NovikovNum x2 = one_plus(y2) * zn;
  return {x1, x2, {zn, NovikovNum::one()}, y1, y2};
}

// ---------------------------------------------------------------------------
// Sampler
// ---------------------------------------------------------------------------

Sampler::Sampler(std::uint64_t seed, Rational trunc_order)
    : rng_(seed), trunc_order_(std::move(trunc_order)) {}

GaussianRational Sampler::unit_coeff() {
  static const GaussianRational units[] = {
      GaussianRational(1),           GaussianRational(-1),
      GaussianRational(1, 1),        GaussianRational(1, -1),
      GaussianRational(-1, 1),       GaussianRational(-1, -1),
      GaussianRational(2),           GaussianRational(Rational(1, 2))};
  std::uniform_int_distribution<int> d(0, 7);
  return units[d(rng_)];
}

GaussianRational Sampler::unit_coeff_not_minus_one() {
  for (;;) {
    GaussianRational c = unit_coeff();
    if (!(c == GaussianRational(-1))) return c;
  }
}

Scalar Sampler::grid(int lo4, int hi4) {
  std::uniform_int_distribution<int> d(lo4, hi4);
  return Scalar(Rational(d(rng_), 4));
}

NovikovNum Sampler::series_with_val(const Scalar& v, bool allow_minus_one) {
  std::vector<NovikovNum::Term> terms;
  terms.push_back({allow_minus_one ? unit_coeff() : unit_coeff_not_minus_one(), v});
  std::uniform_int_distribution<int> nd(0, 3);
  int n = nd(rng_);
  for (int i = 0; i < n; ++i) terms.push_back({unit_coeff(), v + grid(1, 11)});
  return NovikovNum::from_terms(std::move(terms),
                                ExtScalar(v + Scalar(trunc_order_)));
}

NovikovNum Sampler::tail_above(const Scalar& v) {
  std::vector<NovikovNum::Term> terms;
  std::uniform_int_distribution<int> nd(0, 3);
  int n = nd(rng_);
  for (int i = 0; i < n; ++i) terms.push_back({unit_coeff(), v + grid(1, 11)});
  return NovikovNum::from_terms(std::move(terms),
                                ExtScalar(v + Scalar(trunc_order_)));
}

BasePoint Sampler::base_in_chart(const ChartAtlas& atlas, int k, bool force_q1_zero,
                                 bool force_q2_zero) {
  for (int tries = 0; tries < 10000; ++tries) {
    BasePoint q{force_q1_zero ? Scalar(0) : grid(-12, 12),
                force_q2_zero ? Scalar(0) : grid(-12, 12), grid(-12, 12)};
    if (atlas.chart_contains(k, q)) return q;
  }
  throw DomainError("base_in_chart: rejection sampling failed");
}

MirrorPoint Sampler::chart_point(const ChartAtlas& atlas, int k) {
  BasePoint q = base_in_chart(atlas, k, false, false);
  Vec3 c = atlas.chart_map(k, q);
  NovikovNum y1 = series_with_val(c[0], c[0] != Scalar(0));
  NovikovNum y2 = series_with_val(c[1], c[1] != Scalar(0));
  NovikovNum y3 = series_with_val(c[2], true);
  return {k, {y1, y2, y3}};
}

MirrorPoint Sampler::chart_point_stressed(const ChartAtlas& atlas, int k) {
  std::uniform_int_distribution<int> d4(0, 3);
  bool fq1 = d4(rng_) == 0;
  bool fq2 = d4(rng_) == 0;
  BasePoint q = base_in_chart(atlas, k, fq1, fq2);
  Vec3 c = atlas.chart_map(k, q);
  auto make_y = [&](const Scalar& v) {
    if (v == Scalar(0) && d4(rng_) < 2) {
      // Leading coefficient -1: val(1+y) jumps above 0 (or to +inf).
      if (d4(rng_) == 0) return NovikovNum::monomial(GaussianRational(-1), Scalar(0));
      return NovikovNum::from_terms(
          {{GaussianRational(-1), Scalar(0)}, {unit_coeff_not_minus_one(), grid(1, 11)}},
          ExtScalar(Scalar(trunc_order_)));
    }
    return series_with_val(v, v != Scalar(0));
  };
  NovikovNum y1 = make_y(c[0]);
  NovikovNum y2 = make_y(c[1]);
  NovikovNum y3 = series_with_val(c[2], true);
  return {k, {y1, y2, y3}};
}

YPoint Sampler::sample_C(const ChartAtlas& atlas, int i) {
  if (i == 1) {
    Scalar s = grid(-8, 8);  // q2 along Delta_1
    NovikovNum y1 = NovikovNum::monomial(GaussianRational(-1), Scalar(0));
    NovikovNum y2 = series_with_val(s, s != Scalar(0));
    NovikovNum x1 = series_with_val(-atlas.P1() + min0(s) + grid(0, 8), true);
    return {x1, NovikovNum::zero(), {NovikovNum::zero(), NovikovNum::one()}, y1, y2};
  }
  if (i == 2) {
    Scalar s = grid(-8, 8);  // q1 along Delta_2
    NovikovNum y1 = series_with_val(s, s != Scalar(0));
    NovikovNum y2 = NovikovNum::monomial(GaussianRational(-1), Scalar(0));
    NovikovNum x2 = series_with_val(atlas.P2() + grid(0, 8), true);
    return {NovikovNum::zero(), x2, {NovikovNum::one(), NovikovNum::zero()}, y1, y2};
  }
  throw DomainError("sample_C: i must be 1 or 2");
}

// ---------------------------------------------------------------------------
// Randomized diagram check
// ---------------------------------------------------------------------------

namespace {

DiagramReport diagram_worker(const BSide& bside, int chart, long begin, long end,
                             std::uint64_t seed) {
  DiagramReport rep;
  Sampler sampler(seed);
  const ChartAtlas& atlas = bside.atlas();
  for (long n = begin; n < end; ++n) {
    rep.samples++;
    std::string failure;
    try {
      MirrorPoint m = sampler.chart_point_stressed(atlas, chart);
      YPoint p = bside.g_glued(m);
      if (!bside.y_membership(p)) {
        failure = "g image violates the Y equations";
      } else {
        Vec5 lhs = bside.F_map(p);
        Vec5 rhs = atlas.j_embed(bside.tau_base(m));
        if (!(lhs == rhs))
          failure = "F(g(y)) = " + vec5_str(lhs) + " != j(tau(y)) = " + vec5_str(rhs);
      }
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (failure.empty()) {
      rep.passed++;
    } else if (rep.first_failures.size() < 10) {
      rep.first_failures.push_back("chart " + std::to_string(chart) + " sample #" +
                                   std::to_string(n) + ": " + failure);
    }
  }
  return rep;
}

}  // namespace

DiagramReport verify_diagram_chart(const BSide& bside, int chart, long samples,
                                   std::uint64_t seed, int workers) {
  if (workers <= 0) {
    workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers <= 0) workers = 1;
    if (workers > 8) workers = 8;
  }
  if (samples < workers * 16) workers = 1;

  std::vector<DiagramReport> parts(workers);
  std::vector<std::thread> threads;
  long chunk = samples / workers;
  for (int w = 0; w < workers; ++w) {
    long begin = w * chunk;
    long end = (w == workers - 1) ? samples : begin + chunk;
    std::uint64_t wseed = seed * 1000003ULL + static_cast<std::uint64_t>(w) * 7919ULL +
                          static_cast<std::uint64_t>(chart);
    if (workers == 1) {
      parts[w] = diagram_worker(bside, chart, begin, end, wseed);
    } else {
      threads.emplace_back([&, w, begin, end, wseed] {
        parts[w] = diagram_worker(bside, chart, begin, end, wseed);
      });
    }
  }
  for (auto& t : threads) t.join();

  DiagramReport rep;
  for (const auto& p : parts) {
    rep.samples += p.samples;
    rep.passed += p.passed;
    for (const auto& f : p.first_failures)
      if (rep.first_failures.size() < 10) rep.first_failures.push_back(f);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Symbolic diagram check
// ---------------------------------------------------------------------------

namespace {

PLExpr neg_expr(const PLExpr& e) {
  switch (e.kind()) {
    case PLExpr::Kind::Affine:
      return PLExpr::affine(-e.form());
    case PLExpr::Kind::Min: {
      std::vector<PLExpr> kids;
      for (const auto& k : e.kids()) kids.push_back(neg_expr(k));
      return PLExpr::max_of(std::move(kids));
    }
    case PLExpr::Kind::Max: {
      std::vector<PLExpr> kids;
      for (const auto& k : e.kids()) kids.push_back(neg_expr(k));
      return PLExpr::min_of(std::move(kids));
    }
    case PLExpr::Kind::Median:
      return PLExpr::median_of(neg_expr(e.kids()[0]), neg_expr(e.kids()[1]),
                               neg_expr(e.kids()[2]));
    case PLExpr::Kind::Sum: {
      std::vector<PLExpr> kids;
      for (const auto& k : e.kids()) kids.push_back(neg_expr(k));
      return PLExpr::sum_of(std::move(kids));
    }
  }
  throw DomainError("unreachable");
}

enum class SignCase { Pos, Neg, ZeroFin, ZeroInf };

const SignCase kSignCases[] = {SignCase::Pos, SignCase::Neg, SignCase::ZeroFin,
                               SignCase::ZeroInf};

bool is_zero_case(SignCase s) {
  return s == SignCase::ZeroFin || s == SignCase::ZeroInf;
}

void add_sign_case(Cell* cell, const std::string& q, const std::string& e, SignCase s) {
  AffineForm vq = AffineForm::var(q), ve = AffineForm::var(e);
  switch (s) {
    case SignCase::Pos:
      cell->constraints.push_back({-vq, Rel::Lt});
      cell->constraints.push_back({ve, Rel::Eq});
      break;
    case SignCase::Neg:
      cell->constraints.push_back({vq, Rel::Lt});
      cell->constraints.push_back({ve - vq, Rel::Eq});
      break;
    case SignCase::ZeroFin:
      cell->constraints.push_back({vq, Rel::Eq});
      cell->constraints.push_back({-ve, Rel::Le});
      break;
    case SignCase::ZeroInf:
      cell->constraints.push_back({vq, Rel::Eq});
      cell->infinite_vars.insert(e);
      break;
  }
}

}  // namespace

SymbolicChartReport verify_diagram_symbolic(int chart, bool corrupt_facts) {
  if (chart < 1 || chart > 3) throw DomainError("chart index must be 1, 2 or 3");
  SymbolicChartReport out;
  out.chart = chart;

  PLExpr P = PLExpr::var("P"), P1 = PLExpr::var("P1"), P2 = PLExpr::var("P2");
  PLExpr e1 = PLExpr::var("e1"), e2 = PLExpr::var("e2");
  PLExpr zero = PLExpr::constant(ExtScalar(0));
  PLExpr m1 = PLExpr::min_of({zero, PLExpr::var("q1")});
  PLExpr m2 = PLExpr::min_of({zero, PLExpr::var("q2")});
  auto S = [](std::vector<PLExpr> kids) { return PLExpr::sum_of(std::move(kids)); };

  // F o g in valuation variables, chart by chart; val(y3) is P - m, P - m2, P.
  PLExpr F1, F2, G;
  switch (chart) {
    case 1:
      F1 = PLExpr::min_of({S({neg_expr(P), m1, m2}), S({neg_expr(P1), m1, m2})});
      F2 = PLExpr::min_of({S({P, neg_expr(m1), neg_expr(m2), e1, e2}), P2});
      G = PLExpr::median_of(S({P, neg_expr(m1), neg_expr(m2), e1, m2}), P1, P2);
      break;
    case 2:
      F1 = PLExpr::min_of({S({e1, neg_expr(P), m2}), S({neg_expr(P1), m1, m2})});
      F2 = PLExpr::min_of({S({P, neg_expr(m2), e2}), P2});
      G = PLExpr::median_of(S({P, neg_expr(m2), m2}), P1, P2);
      break;
    default:
      F1 = PLExpr::min_of({S({e1, e2, neg_expr(P)}), S({neg_expr(P1), m1, m2})});
      F2 = PLExpr::min_of({P, P2});
      G = PLExpr::median_of(S({P, neg_expr(e2), m2}), P1, P2);
      break;
  }

  // j o tau: theta_1, theta_2, vartheta.
  PLExpr T1 = S({PLExpr::min_of({neg_expr(P), neg_expr(P1)}), m1, m2});
  PLExpr T2 = PLExpr::min_of({P, P2});
  PLExpr TH = PLExpr::median_of(P, P1, P2);

  for (SignCase s1 : kSignCases) {
    for (SignCase s2 : kSignCases) {
      out.sign_cases++;
      Cell cell;
      cell.constraints.push_back({-AffineForm::var("P2"), Rel::Lt});
      cell.constraints.push_back({AffineForm::var("P2") - AffineForm::var("P1"), Rel::Lt});
      cell.constraints.push_back({-AffineForm::var("P"), Rel::Lt});
      switch (chart) {
        case 1:
          cell.constraints.push_back(
              {AffineForm::var("P2") - AffineForm::var("P"), Rel::Lt});
          if (is_zero_case(s1))
            cell.constraints.push_back(
                {AffineForm::var("P1") - AffineForm::var("P"), Rel::Lt});
          break;
        case 2:
          cell.constraints.push_back(
              {AffineForm::var("P") - AffineForm::var("P1"), Rel::Lt});
          if (is_zero_case(s2))
            cell.constraints.push_back(
                {AffineForm::var("P2") - AffineForm::var("P"), Rel::Lt});
          break;
        default:
          cell.constraints.push_back(
              {AffineForm::var("P") - AffineForm::var("P2"), Rel::Lt});
          break;
      }
      if (corrupt_facts) {
        // Inject the reverse of the chart's own psi fact; every refinement
        // becomes infeasible and the run must be flagged, not passed.
        AffineForm wrong =
            chart == 1 ? AffineForm::var("P") - AffineForm::var("P2")
                       : (chart == 2 ? AffineForm::var("P1") - AffineForm::var("P")
                                     : AffineForm::var("P2") - AffineForm::var("P"));
        cell.constraints.push_back({wrong, Rel::Lt});
      }
      add_sign_case(&cell, "q1", "e1", s1);
      add_sign_case(&cell, "q2", "e2", s2);

      CellReport r1 = pl_prove_equal(F1, T1, cell);
      CellReport r2 = pl_prove_equal(F2, T2, cell);
      CellReport r3 = pl_prove_equal(G, TH, cell);
      if (r1.no_feasible_cells) out.empty_cases++;
      out.report.merge(r1);
      out.report.merge(r2);
      out.report.merge(r3);
    }
  }
  return out;
}

}  // namespace mirror
}  // namespace conifold
