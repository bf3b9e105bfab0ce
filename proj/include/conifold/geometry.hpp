#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "conifold/scalar.hpp"

namespace conifold {

struct BasePoint {
  Scalar q1, q2, q3;
  bool operator==(const BasePoint& o) const {
    return q1 == o.q1 && q2 == o.q2 && q3 == o.q3;
  }
};

using Vec3 = std::array<Scalar, 3>;
using Vec5 = std::array<Scalar, 5>;

/// Wall heights w_i = log c_i and the tube half-width delta.
struct WallConfig {
  Scalar w1 = Scalar(1);
  Scalar w2 = Scalar(0);
  Scalar delta = Scalar(1, 4);

  void validate() const;
};

/// Monotone model of the action coordinate: for fixed (q1,q2), q3 -> sigma
/// is a strictly increasing bijection R -> (0, inf).
class PsiModel {
 public:
  virtual ~PsiModel() = default;
  virtual Scalar sigma(const Scalar& q3) const = 0;
  virtual Scalar sigma_inv(const Scalar& v) const = 0;
  virtual std::string name() const = 0;
};

/// Exact-rational default: q3+1 for q3 >= 0, 1/(1-q3) for q3 < 0.
class RationalPsiModel : public PsiModel {
 public:
  Scalar sigma(const Scalar& q3) const override;
  Scalar sigma_inv(const Scalar& v) const override;
  std::string name() const override { return "rational"; }
};

/// Float-mode alternative: sigma = exp(q3).
class ExpPsiModel : public PsiModel {
 public:
  Scalar sigma(const Scalar& q3) const override;
  Scalar sigma_inv(const Scalar& v) const override;
  std::string name() const override { return "exp"; }
};

enum class DeltaComponent { None, Delta1, Delta2 };
enum class Wall { None, H1Plus, H1Minus, H2Plus, H2Minus };

/// Broken line R_{q1,q2}: three segments with corners A, A'.
struct BrokenLine {
  Scalar q1, q2;
  Scalar m;   // min{0,q1} + min{0,q2}
  Scalar P1;  // psi at wall 1
  Scalar P2;  // psi at wall 2
  Vec3 corner_A() const { return {-P1 + m, P2, P2}; }
  Vec3 corner_Aprime() const { return {-P1 + m, P2, P1}; }
  Vec3 eval(const Scalar& t) const;
};

/// The base B = R^3 with walls, singular locus, chart atlas U_1,U_2,U_3,
/// coordinate maps chi_k, embedding j, and broken lines.
class ChartAtlas {
 public:
  ChartAtlas(WallConfig wc, std::shared_ptr<const PsiModel> model);

  const WallConfig& walls() const { return wc_; }
  const PsiModel& model() const { return *model_; }

  Scalar psi(const BasePoint& q) const { return model_->sigma(q.q3); }
  Scalar psi_inv(const Scalar& v) const;
  Scalar P1() const { return P1_; }
  Scalar P2() const { return P2_; }

  DeltaComponent delta_contains(const BasePoint& q) const;
  Wall wall_predicate(const BasePoint& q) const;

  bool chart_contains(int k, const BasePoint& q) const;
  Vec3 chart_map(int k, const BasePoint& q) const;
  BasePoint chart_unmap(int k, const Vec3& c) const;

  Vec5 j_embed(const BasePoint& q) const;
  BasePoint j_inverse(const Vec5& p) const;

  BrokenLine broken_line(const Scalar& q1, const Scalar& q2) const;
  Vec3 broken_line_eval(const Scalar& q1, const Scalar& q2, const Scalar& t) const;

 private:
  WallConfig wc_;
  std::shared_ptr<const PsiModel> model_;
  Scalar P1_, P2_;
};

inline Scalar min0(const Scalar& x) { return x < Scalar(0) ? x : Scalar(0); }

/// Integer affine map on chart coordinates (q1, q2, s).
struct AffineMap3 {
  std::array<std::array<long, 3>, 3> lin;
  std::array<long, 3> trans;

  static AffineMap3 identity();
  Vec3 apply(const Vec3& v) const;
  AffineMap3 compose(const AffineMap3& inner) const;  // this after inner
  AffineMap3 inverse() const;
  long det() const;
  bool operator==(const AffineMap3& o) const { return lin == o.lin && trans == o.trans; }
};

enum class Side { Plus, Minus };

/// Chart transition in chart coordinates: identity on the + side, the
/// q1- resp. q2-shear on the - side.
AffineMap3 transition(int k_from, int k_to, Side side);

/// Composition of a closed transition loop; linear part is unimodular.
AffineMap3 monodromy(const std::vector<std::pair<std::pair<int, int>, Side>>& loop);

/// Integer bookkeeping of disk classes: per-chart frames {sigma1, sigma2,
/// boundary beta} of the rank-3 lattice and the wall-side transitions.
struct DiskLattice {
  using IVec = std::array<long, 3>;

  // Classes in the chart frames (coordinates w.r.t. {sigma1, sigma2, dbeta_k}).
  static IVec sigma1() { return {1, 0, 0}; }
  static IVec sigma2() { return {0, 1, 0}; }
  static IVec dbeta_frame() { return {0, 0, 1}; }  // dbeta_k in its own chart

  // U_2 classes in the U_2 frame.
  static IVec dbeta_2plus() { return {0, 0, 1}; }
  static IVec dbeta_2minus() { return {0, 1, 1}; }
  // U_1 classes in the U_1 frame.
  static IVec dbeta_1pp() { return {0, 0, 1}; }
  static IVec dbeta_1mp() { return {1, 0, 1}; }
  static IVec dbeta_1pm() { return {0, 1, 1}; }
  static IVec dbeta_1mm() { return {1, 1, 1}; }

  /// Frame-change matrix expressing the U_{k+1} frame in the U_k frame
  /// across the given wall side (columns are images of basis vectors).
  static AffineMap3 frame_transition(int k_from, int k_to, Side side);

  /// Checks every lattice relation; diagnostics collected on mismatch.
  /// `corrupt` deliberately breaks a transition matrix (negative control).
  static bool relations_check(std::vector<std::string>* diagnostics,
                              bool corrupt = false);
};

}  // namespace conifold
