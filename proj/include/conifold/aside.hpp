#pragma once

#include <array>
#include <complex>

#include "conifold/geometry.hpp"

namespace conifold {
namespace aside {

using Complex = std::complex<double>;

/// Point of the A-side variety X: u1 v1 - c1 = u2 v2 - c2 = z, z != 0.
struct XPoint {
  Complex u1, v1, u2, v2, z;
};

/// Float model of the A-side fibration; walls shared with the B-side
/// through c_i = exp(w_i).
class ASide {
 public:
  explicit ASide(const WallConfig& wc);

  double c1() const { return c1_; }
  double c2() const { return c2_; }

  /// Max residual of the two defining equations.
  double residual(const XPoint& p) const;

  /// (|u1|^2 - |v1|^2)/2, (|u2|^2 - |v2|^2)/2, log|z|.
  std::array<double, 3> pi_map(const XPoint& p) const;

  /// Closed-form torus point over q with fiber phases (phi, alpha1, alpha2).
  XPoint fiber_point(const std::array<double, 3>& q, double phi, double alpha1,
                     double alpha2) const;

  /// Point of the fixed-point curve C-hat_i; param (a, b) with a*b = c_j - c_i.
  XPoint chat_point(int i, Complex a, Complex b) const;

  Wall wall_predicate(const std::array<double, 3>& q) const;

  /// The T^2-action (s, t) on a point; leaves pi_map fixed.
  static XPoint torus_act(const XPoint& p, double s, double t);

 private:
  double w1_, w2_, c1_, c2_;
};

}  // namespace aside
}  // namespace conifold
