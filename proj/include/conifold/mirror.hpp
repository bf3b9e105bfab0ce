#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "conifold/geometry.hpp"
#include "conifold/novikov.hpp"
#include "conifold/plexpr.hpp"

namespace conifold {
namespace mirror {

/// Point of the resolved conifold Y over the Novikov field, with the
/// z-coordinate carried projectively so z = 0 and z = inf are first-class.
struct YPoint {
  NovikovNum x1, x2;
  ProjValue z;
  NovikovNum y1, y2;
};

using Triple = std::array<NovikovNum, 3>;

/// Point of the glued mirror in chart coordinates.
struct MirrorPoint {
  int chart;  // 1, 2 or 3
  Triple y;
};

enum class Smoothness { Smooth, Singular };

/// The transition maps of the mirror charts.
Triple phi12(const Triple& y);
Triple phi23(const Triple& y);

/// Chart superpotentials W_1 = y3(1+y1)(1+y2), W_2 = y3(1+y2), W_3 = y3.
NovikovNum W(int k, const Triple& y);

/// The B-side fibration machinery over a shared chart atlas.
class BSide {
 public:
  BSide(const ChartAtlas& atlas, Rational trunc_order = 12);

  const ChartAtlas& atlas() const { return atlas_; }

  /// Both projective defining equations hold up to truncation.
  bool y_membership(const YPoint& p) const;

  /// The tropically continuous map F; output always finite.
  Vec5 F_map(const YPoint& p) const;

  /// f = j^{-1} o F on the locus val(x2) > 0.
  BasePoint f_map(const YPoint& p) const;

  /// Singular exactly on the corner points over q1 = 0 resp. q2 = 0.
  Smoothness classify_smooth(const Vec5& p) const;

  /// The fibration of the glued mirror: chart_unmap of trop(y).
  BasePoint tau_base(const MirrorPoint& m) const;

  /// Chart embeddings into Y and the glued embedding.
  YPoint g(int k, const Triple& y) const;
  YPoint g_glued(const MirrorPoint& m) const;

  /// Preimage recipes used by the slice checks; every output lies in Y.
  /// Free-val(x2) construction: F-image is r_{q1,q2}(t) exactly.
  YPoint preimage_at(const NovikovNum& y1, const NovikovNum& y2, const Scalar& t,
                     const NovikovNum& x2_tail) const;
  /// Corner A' preimage (requires val(y1) = 0, leading coefficient -1).
  YPoint preimage_corner_Aprime(const NovikovNum& y1, const NovikovNum& y2,
                                const Scalar& zeta) const;
  /// Corner A preimage (requires val(y2) = 0, leading coefficient -1);
  /// z_infinite selects the z = inf branch (y2 = -1 exactly).
  YPoint preimage_corner_A(const NovikovNum& y1, const NovikovNum& y2,
                           const Scalar& zeta, bool z_infinite) const;
  /// Middle-segment preimage for q1 = q2 = 0 with free val(z) in (P2, P1).
  YPoint preimage_middle(const Scalar& zeta, const Scalar& a, const Scalar& b) const;

 private:
  ChartAtlas atlas_;
  Rational trunc_order_;
  NovikovNum invert(const NovikovNum& a) const;
};

/// Reproducible random generation of series, base points, mirror points
/// and points of the curves C_1, C_2.
class Sampler {
 public:
  Sampler(std::uint64_t seed, Rational trunc_order = 12);

  std::mt19937_64& rng() { return rng_; }

  /// Unit leading coefficient from {+-1, +-1+-i, 2, 1/2}.
  GaussianRational unit_coeff();
  GaussianRational unit_coeff_not_minus_one();

  /// Rational on the quarter grid in [lo, hi].
  Scalar grid(int lo4, int hi4);

  /// Series with exact valuation `v`, unit leading coefficient and 0-3
  /// tail terms on the quarter grid above v.
  NovikovNum series_with_val(const Scalar& v, bool allow_minus_one = true);
  /// Tail-only series (no leading unit): sum of 0-3 terms with exponents > v.
  NovikovNum tail_above(const Scalar& v);

  /// Random base point in chart k; q1/q2 optionally pinned to 0.
  BasePoint base_in_chart(const ChartAtlas& atlas, int k, bool force_q1_zero,
                          bool force_q2_zero);

  MirrorPoint chart_point(const ChartAtlas& atlas, int k);
  /// Chart point with the q_i = 0 / leading-coefficient -1 corner cases mixed in.
  MirrorPoint chart_point_stressed(const ChartAtlas& atlas, int k);

  YPoint sample_C(const ChartAtlas& atlas, int i);

 private:
  std::mt19937_64 rng_;
  Rational trunc_order_;
};

/// Per-chart result of the randomized diagram check (Theorem-style identity
/// F o g = j o tau over sampled mirror points).
struct DiagramReport {
  long samples = 0;
  long passed = 0;
  std::vector<std::string> first_failures;  // capped at 10
};

DiagramReport verify_diagram_chart(const BSide& bside, int chart, long samples,
                                   std::uint64_t seed, int workers = 0);

/// Symbolic proof of the same identity: exhaustive PL case analysis in the
/// variables {q1, q2, P, P1, P2, e1, e2} under the chart facts.
struct SymbolicChartReport {
  int chart = 0;
  CellReport report;
  long sign_cases = 0;
  long empty_cases = 0;  // sign cases with no feasible cells
};

SymbolicChartReport verify_diagram_symbolic(int chart, bool corrupt_facts = false);

}  // namespace mirror
}  // namespace conifold
