#include "conifold/geometry.hpp"

#include <cmath>

namespace conifold {

namespace {

Scalar scalar_min(const Scalar& a, const Scalar& b) { return a <= b ? a : b; }

Scalar scalar_median(const Scalar& a, const Scalar& b, const Scalar& c) {
  Scalar v[3] = {a, b, c};
  if (v[1] < v[0]) std::swap(v[0], v[1]);
  if (v[2] < v[1]) std::swap(v[1], v[2]);
  if (v[1] < v[0]) std::swap(v[0], v[1]);
  return v[1];
}

Scalar scalar_abs(const Scalar& a) { return a < Scalar(0) ? -a : a; }

}  // namespace

void WallConfig::validate() const {
  if (!(w1 > w2)) throw DomainError("WallConfig: requires w1 > w2");
  if (!(delta > Scalar(0))) throw DomainError("WallConfig: requires delta > 0");
  if (!(delta < (w1 - w2) / Scalar(2)))
    throw DomainError("WallConfig: requires delta < (w1 - w2)/2");
}

Scalar RationalPsiModel::sigma(const Scalar& q3) const {
  if (q3 >= Scalar(0)) return q3 + Scalar(1);
  return Scalar(1) / (Scalar(1) - q3);
}

Scalar RationalPsiModel::sigma_inv(const Scalar& v) const {
  if (!(v > Scalar(0))) throw DomainError("psi_inv: requires v > 0");
  if (v >= Scalar(1)) return v - Scalar(1);
  return Scalar(1) - Scalar(1) / v;
}

Scalar ExpPsiModel::sigma(const Scalar& q3) const {
  return Scalar::from_double(std::exp(q3.as_double()));
}

Scalar ExpPsiModel::sigma_inv(const Scalar& v) const {
  if (!(v > Scalar(0))) throw DomainError("psi_inv: requires v > 0");
  return Scalar::from_double(std::log(v.as_double()));
}

ChartAtlas::ChartAtlas(WallConfig wc, std::shared_ptr<const PsiModel> model)
    : wc_(wc), model_(std::move(model)), P1_(0), P2_(0) {
  wc_.validate();
  P1_ = model_->sigma(wc_.w1);
  P2_ = model_->sigma(wc_.w2);
}

Scalar ChartAtlas::psi_inv(const Scalar& v) const { return model_->sigma_inv(v); }

DeltaComponent ChartAtlas::delta_contains(const BasePoint& q) const {
  if (q.q1 == Scalar(0) && q.q3 == wc_.w1) return DeltaComponent::Delta1;
  if (q.q2 == Scalar(0) && q.q3 == wc_.w2) return DeltaComponent::Delta2;
  return DeltaComponent::None;
}

Wall ChartAtlas::wall_predicate(const BasePoint& q) const {
  if (delta_contains(q) != DeltaComponent::None)
    throw DomainError("wall_predicate: point lies on the singular locus");
  if (q.q3 == wc_.w1) return q.q1 > Scalar(0) ? Wall::H1Plus : Wall::H1Minus;
  if (q.q3 == wc_.w2) return q.q2 > Scalar(0) ? Wall::H2Plus : Wall::H2Minus;
  return Wall::None;
}

bool ChartAtlas::chart_contains(int k, const BasePoint& q) const {
  switch (k) {
    case 1:
      return q.q3 > wc_.w1 ||
             (scalar_abs(q.q3 - wc_.w1) < wc_.delta && scalar_abs(q.q1) > wc_.delta);
    case 2:
      return (wc_.w2 < q.q3 && q.q3 < wc_.w1) ||
             (scalar_abs(q.q3 - wc_.w2) < wc_.delta && scalar_abs(q.q2) > wc_.delta);
    case 3:
      return q.q3 < wc_.w2;
    default:
      throw DomainError("chart index must be 1, 2 or 3");
  }
}

Vec3 ChartAtlas::chart_map(int k, const BasePoint& q) const {
  if (!chart_contains(k, q)) throw DomainError("chart_map: point not in chart");
  Scalar p = psi(q);
  switch (k) {
    case 1: return {q.q1, q.q2, p - min0(q.q1) - min0(q.q2)};
    case 2: return {q.q1, q.q2, p - min0(q.q2)};
    default: return {q.q1, q.q2, p};
  }
}

BasePoint ChartAtlas::chart_unmap(int k, const Vec3& c) const {
  Scalar p = c[2];
  switch (k) {
    case 1: p = p + min0(c[0]) + min0(c[1]); break;
    case 2: p = p + min0(c[1]); break;
    case 3: break;
    default: throw DomainError("chart index must be 1, 2 or 3");
  }
  BasePoint q{c[0], c[1], psi_inv(p)};
  if (!chart_contains(k, q))
    throw DomainError("chart_unmap: coordinates not in the chart image");
  return q;
}

Vec5 ChartAtlas::j_embed(const BasePoint& q) const {
  Scalar p = psi(q);
  Scalar m = min0(q.q1) + min0(q.q2);
  return {scalar_min(-p, -P1_) + m, scalar_min(p, P2_), scalar_median(p, P1_, P2_),
          q.q1, q.q2};
}

BasePoint ChartAtlas::j_inverse(const Vec5& pt) const {
  const Scalar &t1 = pt[0], &t2 = pt[1], &th = pt[2], &q1 = pt[3], &q2 = pt[4];
  Scalar m = min0(q1) + min0(q2);
  Scalar p(0);
  if (t2 < P2_) {
    p = t2;
  } else if (P2_ < th && th < P1_) {
    p = th;
  } else if (t1 < -P1_ + m) {
    p = m - t1;
  } else if (t2 == P2_ && t1 == -P1_ + m && th == P2_) {
    p = P2_;  // corner A
  } else if (t2 == P2_ && t1 == -P1_ + m && th == P1_) {
    p = P1_;  // corner A'
  } else {
    throw DomainError("not in image of j");
  }
  if (!(p > Scalar(0))) throw DomainError("not in image of j");
  BasePoint q{q1, q2, psi_inv(p)};
  if (!(j_embed(q) == pt)) throw DomainError("not in image of j");
  return q;
}

BrokenLine ChartAtlas::broken_line(const Scalar& q1, const Scalar& q2) const {
  return BrokenLine{q1, q2, min0(q1) + min0(q2), P1_, P2_};
}

Vec3 BrokenLine::eval(const Scalar& t) const {
  if (!(t > Scalar(0))) throw DomainError("broken line parameter must be positive");
  return {scalar_min(-t, -P1) + m, scalar_min(t, P2), scalar_median(t, P1, P2)};
}

Vec3 ChartAtlas::broken_line_eval(const Scalar& q1, const Scalar& q2,
                                  const Scalar& t) const {
  return broken_line(q1, q2).eval(t);
}

// ---------------------------------------------------------------------------
// Integer affine maps, transitions, monodromy
// ---------------------------------------------------------------------------

AffineMap3 AffineMap3::identity() {
  return AffineMap3{{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}, {0, 0, 0}};
}

Vec3 AffineMap3::apply(const Vec3& v) const {
  Vec3 out{Scalar(trans[0]), Scalar(trans[1]), Scalar(trans[2])};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i] = out[i] + Scalar(lin[i][j]) * v[j];
  return out;
}

AffineMap3 AffineMap3::compose(const AffineMap3& inner) const {
  AffineMap3 out{};
  for (int i = 0; i < 3; ++i) {
    out.trans[i] = trans[i];
    for (int j = 0; j < 3; ++j) {
      out.trans[i] += lin[i][j] * inner.trans[j];
      out.lin[i][j] = 0;
      for (int k = 0; k < 3; ++k) out.lin[i][j] += lin[i][k] * inner.lin[k][j];
    }
  }
  return out;
}

long AffineMap3::det() const {
  return lin[0][0] * (lin[1][1] * lin[2][2] - lin[1][2] * lin[2][1]) -
         lin[0][1] * (lin[1][0] * lin[2][2] - lin[1][2] * lin[2][0]) +
         lin[0][2] * (lin[1][0] * lin[2][1] - lin[1][1] * lin[2][0]);
}

AffineMap3 AffineMap3::inverse() const {
  long d = det();
  if (d != 1 && d != -1) throw DomainError("AffineMap3: not unimodular");
  AffineMap3 out{};
  // adjugate / det
  out.lin[0][0] = (lin[1][1] * lin[2][2] - lin[1][2] * lin[2][1]) / d;
  out.lin[0][1] = -(lin[0][1] * lin[2][2] - lin[0][2] * lin[2][1]) / d;
  out.lin[0][2] = (lin[0][1] * lin[1][2] - lin[0][2] * lin[1][1]) / d;
  out.lin[1][0] = -(lin[1][0] * lin[2][2] - lin[1][2] * lin[2][0]) / d;
  out.lin[1][1] = (lin[0][0] * lin[2][2] - lin[0][2] * lin[2][0]) / d;
  out.lin[1][2] = -(lin[0][0] * lin[1][2] - lin[0][2] * lin[1][0]) / d;
  out.lin[2][0] = (lin[1][0] * lin[2][1] - lin[1][1] * lin[2][0]) / d;
  out.lin[2][1] = -(lin[0][0] * lin[2][1] - lin[0][1] * lin[2][0]) / d;
  out.lin[2][2] = (lin[0][0] * lin[1][1] - lin[0][1] * lin[1][0]) / d;
  for (int i = 0; i < 3; ++i) {
    out.trans[i] = 0;
    for (int j = 0; j < 3; ++j) out.trans[i] -= out.lin[i][j] * trans[j];
  }
  return out;
}

AffineMap3 transition(int k_from, int k_to, Side side) {
  bool forward;
  int pair;  // 1 for 1<->2 (q1-shear), 2 for 2<->3 (q2-shear)
  if (k_from == 1 && k_to == 2) pair = 1, forward = true;
  else if (k_from == 2 && k_to == 1) pair = 1, forward = false;
  else if (k_from == 2 && k_to == 3) pair = 2, forward = true;
  else if (k_from == 3 && k_to == 2) pair = 2, forward = false;
  else throw DomainError("transition: invalid chart pair");

  AffineMap3 m = AffineMap3::identity();
  if (side == Side::Minus) {
    long s = forward ? 1 : -1;
    m.lin[2][pair - 1] = s;  // s -> s + q1 (resp. q2)
  }
  return m;
}

AffineMap3 monodromy(const std::vector<std::pair<std::pair<int, int>, Side>>& loop) {
  if (loop.empty()) throw DomainError("monodromy: empty loop");
  int chart = loop.front().first.first;
  AffineMap3 acc = AffineMap3::identity();
  for (const auto& [pair, side] : loop) {
    if (pair.first != chart) throw DomainError("monodromy: loop not composable");
    acc = transition(pair.first, pair.second, side).compose(acc);
    chart = pair.second;
  }
  if (chart != loop.front().first.first)
    throw DomainError("monodromy: loop not closed");
  return acc;
}

// ---------------------------------------------------------------------------
// DiskLattice
// ---------------------------------------------------------------------------

namespace {

using IVec = DiskLattice::IVec;

IVec add(const IVec& a, const IVec& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

IVec sub(const IVec& a, const IVec& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

IVec apply_lin(const AffineMap3& m, const IVec& v) {
  IVec out{0, 0, 0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i] += m.lin[i][j] * v[j];
  return out;
}

std::string ivec_str(const IVec& v) {
  return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," +
         std::to_string(v[2]) + ")";
}

}  // namespace

AffineMap3 DiskLattice::frame_transition(int k_from, int k_to, Side side) {
  // Expresses the k_from frame {sigma1, sigma2, dbeta} in the k_to frame.
  AffineMap3 m = AffineMap3::identity();
  if (side == Side::Plus) return m;
  if ((k_from == 2 && k_to == 1) || (k_from == 1 && k_to == 2)) {
    // dbeta_2+ = dbeta_1-+ = sigma1 + dbeta_1++ over N_1-
    long s = (k_from == 2) ? 1 : -1;
    m.lin[0][2] = s;
  } else if ((k_from == 3 && k_to == 2) || (k_from == 2 && k_to == 3)) {
    // dbeta_3 = dbeta_2- = sigma2 + dbeta_2+ over N_2-
    long s = (k_from == 3) ? 1 : -1;
    m.lin[1][2] = s;
  } else {
    throw DomainError("frame_transition: invalid chart pair");
  }
  return m;
}

bool DiskLattice::relations_check(std::vector<std::string>* diagnostics, bool corrupt) {
  bool ok = true;
  auto expect = [&](const IVec& got, const IVec& want, const std::string& what) {
    if (got != want) {
      ok = false;
      if (diagnostics)
        diagnostics->push_back(what + ": got " + ivec_str(got) + ", want " +
                               ivec_str(want));
    }
  };

  // sigma relations inside each chart frame.
  expect(sub(dbeta_2minus(), dbeta_2plus()), sigma2(),
         "sigma2 = dbeta_2- - dbeta_2+ on U2");
  expect(sub(dbeta_1pm(), dbeta_1pp()), sigma2(), "sigma2 = dbeta_1+- - dbeta_1++ on U1");
  expect(sub(dbeta_1mm(), dbeta_1mp()), sigma2(), "sigma2 = dbeta_1-- - dbeta_1-+ on U1");
  expect(sub(dbeta_1mp(), dbeta_1pp()), sigma1(), "sigma1 = dbeta_1-+ - dbeta_1++ on U1");
  expect(sub(dbeta_1mm(), dbeta_1pm()), sigma1(), "sigma1 = dbeta_1-- - dbeta_1+- on U1");
  expect(dbeta_1mm(), add(add(sigma1(), sigma2()), dbeta_1pp()),
         "dbeta_1-- = sigma1 + sigma2 + dbeta_1++");

  // beta matchings across the wall tubes, via the frame transitions.
  AffineMap3 t21p = frame_transition(2, 1, Side::Plus);
  AffineMap3 t21m = frame_transition(2, 1, Side::Minus);
  AffineMap3 t32p = frame_transition(3, 2, Side::Plus);
  AffineMap3 t32m = frame_transition(3, 2, Side::Minus);
  if (corrupt) t21m.lin[0][2] = 2;  // negative control

  expect(apply_lin(t21p, dbeta_2plus()), dbeta_1pp(), "dbeta_2+ = dbeta_1++ over N_1+");
  expect(apply_lin(t21m, dbeta_2plus()), dbeta_1mp(), "dbeta_2+ = dbeta_1-+ over N_1-");
  expect(apply_lin(t21p, dbeta_2minus()), dbeta_1pm(), "dbeta_2- = dbeta_1+- over N_1+");
  expect(apply_lin(t21m, dbeta_2minus()), dbeta_1mm(), "dbeta_2- = dbeta_1-- over N_1-");
  expect(apply_lin(t32p, dbeta_frame()), dbeta_2plus(), "dbeta_3 = dbeta_2+ over N_2+");
  expect(apply_lin(t32m, dbeta_frame()), dbeta_2minus(), "dbeta_3 = dbeta_2- over N_2-");

  // sigma_i are flat sections: fixed by every transition.
  for (const AffineMap3* t : {&t21p, &t21m, &t32p, &t32m}) {
    expect(apply_lin(*t, sigma1()), sigma1(), "sigma1 flat under transitions");
    expect(apply_lin(*t, sigma2()), sigma2(), "sigma2 flat under transitions");
  }

  // Unimodularity.
  for (const AffineMap3* t : {&t21p, &t21m, &t32p, &t32m}) {
    long d = t->det();
    if (d != 1 && d != -1) {
      ok = false;
      if (diagnostics) diagnostics->push_back("frame transition not unimodular");
    }
  }

  // Flux relations as coordinate identities: the shear amount of the chart
  // transition (q1 for 1<->2, q2 for 2<->3) is the transpose of the frame
  // transition across the same wall side.
  auto transpose_matches = [&](const AffineMap3& frame, const AffineMap3& coord,
                               const std::string& what) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (frame.lin[i][j] != coord.lin[j][i]) {
          ok = false;
          if (diagnostics) diagnostics->push_back(what);
          return;
        }
  };
  transpose_matches(t21m, transition(1, 2, Side::Minus),
                    "q1 = E(beta_1-+) - E(beta_1++) vs psi-shear over N_1-");
  transpose_matches(t32m, transition(2, 3, Side::Minus),
                    "q2 = E(beta_2-) - E(beta_2+) vs psi-shear over N_2-");

  return ok;
}

}  // namespace conifold
