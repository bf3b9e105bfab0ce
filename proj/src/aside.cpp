#include "conifold/aside.hpp"

#include <cmath>

namespace conifold {
namespace aside {

namespace {
constexpr double kTol = 1e-9;
constexpr double kDegenerateTol = 1e-12;
}  // namespace

ASide::ASide(const WallConfig& wc)
    : w1_(wc.w1.as_double()),
      w2_(wc.w2.as_double()),
      c1_(std::exp(w1_)),
      c2_(std::exp(w2_)) {}

double ASide::residual(const XPoint& p) const {
  double r1 = std::abs(p.u1 * p.v1 - c1_ - p.z);
  double r2 = std::abs(p.u2 * p.v2 - c2_ - p.z);
  return std::max(r1, r2);
}

std::array<double, 3> ASide::pi_map(const XPoint& p) const {
  if (std::abs(p.z) == 0.0) throw DomainError("pi_map: z = 0 is not a point of X");
  if (residual(p) > kTol) throw DomainError("pi_map: point does not satisfy the X equations");
  return {0.5 * (std::norm(p.u1) - std::norm(p.v1)),
          0.5 * (std::norm(p.u2) - std::norm(p.v2)), std::log(std::abs(p.z))};
}

XPoint ASide::fiber_point(const std::array<double, 3>& q, double phi, double alpha1,
                          double alpha2) const {
  XPoint p;
  p.z = std::exp(q[2]) * Complex(std::cos(phi), std::sin(phi));
  const double c[2] = {c1_, c2_};
  Complex* us[2] = {&p.u1, &p.u2};
  Complex* vs[2] = {&p.v1, &p.v2};
  const double alphas[2] = {alpha1, alpha2};
  for (int i = 0; i < 2; ++i) {
    Complex w = c[i] + p.z;  // u_i v_i
    double R = std::abs(w);
    double qi = q[i];
    if (R < kDegenerateTol && std::fabs(qi) < kDegenerateTol) {
      *us[i] = 0.0;
      *vs[i] = 0.0;
      continue;
    }
    double root = std::sqrt(qi * qi + R * R);
    double umod = std::sqrt(qi + root);
    *us[i] = umod * Complex(std::cos(alphas[i]), std::sin(alphas[i]));
    *vs[i] = w / *us[i];  // phase of v_i forced by u_i v_i = c_i + z
  }
  return p;
}

XPoint ASide::chat_point(int i, Complex a, Complex b) const {
  XPoint p;
  if (i == 1) {
    if (std::abs(a * b - (c2_ - c1_)) > kTol)
      throw DomainError("chat_point: requires u2 v2 = c2 - c1");
    p.u1 = 0.0;
    p.v1 = 0.0;
    p.u2 = a;
    p.v2 = b;
    p.z = -c1_;
  } else if (i == 2) {
    if (std::abs(a * b - (c1_ - c2_)) > kTol)
      throw DomainError("chat_point: requires u1 v1 = c1 - c2");
    p.u1 = a;
    p.v1 = b;
    p.u2 = 0.0;
    p.v2 = 0.0;
    p.z = -c2_;
  } else {
    throw DomainError("chat_point: i must be 1 or 2");
  }
  return p;
}

Wall ASide::wall_predicate(const std::array<double, 3>& q) const {
  bool on1 = std::fabs(q[2] - w1_) <= kTol;
  bool on2 = std::fabs(q[2] - w2_) <= kTol;
  if ((on1 && std::fabs(q[0]) <= kTol) || (on2 && std::fabs(q[1]) <= kTol))
    throw DomainError("wall_predicate: point lies on the singular locus");
  if (on1) return q[0] > 0 ? Wall::H1Plus : Wall::H1Minus;
  if (on2) return q[1] > 0 ? Wall::H2Plus : Wall::H2Minus;
  return Wall::None;
}

XPoint ASide::torus_act(const XPoint& p, double s, double t) {
  XPoint out = p;
  Complex es(std::cos(s), std::sin(s)), et(std::cos(t), std::sin(t));
  out.u1 = es * p.u1;
  out.v1 = p.v1 / es;
  out.u2 = et * p.u2;
  out.v2 = p.v2 / et;
  return out;
}

}  // namespace aside
}  // namespace conifold
