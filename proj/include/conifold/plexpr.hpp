#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "conifold/scalar.hpp"

namespace conifold {

/// Affine form sum_i c_i x_i + const with exact rational coefficients.
/// A form whose constant is +-inf has no variable part: infinities are
/// absorbing and never mixed with variables.
struct AffineForm {
  std::map<std::string, Rational> coeffs;
  ExtScalar constant = ExtScalar(0);

  static AffineForm var(const std::string& name);
  static AffineForm constant_form(ExtScalar c);

  bool is_constant() const { return coeffs.empty(); }
  bool is_finite() const { return constant.is_finite(); }

  AffineForm operator+(const AffineForm& o) const;
  AffineForm operator-(const AffineForm& o) const;
  AffineForm operator-() const;
  AffineForm scaled(const Rational& c) const;
  AffineForm shifted(const Rational& c) const;

  /// Substitute a variable by a rational constant.
  AffineForm subst(const std::string& name, const Rational& value) const;

  ExtScalar eval(const std::map<std::string, ExtScalar>& assignment) const;

  bool operator==(const AffineForm& o) const;
  std::string str() const;
};

enum class Rel { Le, Lt, Eq };  // form <= 0, form < 0, form == 0

struct LinConstraint {
  AffineForm form;  // finite constant required
  Rel rel;
  std::string str() const;
};

/// Conjunction of linear constraints plus a set of variables pinned to +inf.
/// Feasibility over the reals is decided exactly by Fourier-Motzkin.
struct Cell {
  std::vector<LinConstraint> constraints;
  std::set<std::string> infinite_vars;

  Cell with(LinConstraint c) const;
  bool feasible() const;
  std::string str() const;
};

/// Piecewise-linear expression tree over extended reals.
class PLExpr {
 public:
  enum class Kind { Affine, Min, Max, Median, Sum };

  static PLExpr affine(AffineForm f);
  static PLExpr var(const std::string& name);
  static PLExpr constant(ExtScalar c);
  static PLExpr min_of(std::vector<PLExpr> kids);
  static PLExpr max_of(std::vector<PLExpr> kids);
  static PLExpr median_of(PLExpr a, PLExpr b, PLExpr c);
  static PLExpr sum_of(std::vector<PLExpr> kids);

  Kind kind() const { return kind_; }
  const AffineForm& form() const { return form_; }
  const std::vector<PLExpr>& kids() const { return kids_; }

  ExtScalar eval(const std::map<std::string, ExtScalar>& assignment) const;
  std::string str() const;

 private:
  Kind kind_ = Kind::Affine;
  AffineForm form_;
  std::vector<PLExpr> kids_;
};

struct CellReport {
  long cells_checked = 0;
  long cells_passed = 0;
  struct Failure {
    Cell cell;
    AffineForm lhs;
    AffineForm rhs;
  };
  std::vector<Failure> failures;
  bool no_feasible_cells = false;

  bool ok() const { return failures.empty(); }
  void merge(const CellReport& o);
};

/// Decides whether the constraint system of `c` has a real solution.
bool cell_feasible(const Cell& c);

/// Finite fan of feasible sub-cells covering `base` on each of which `e`
/// restricts to a single affine form.  Tie cells overlap (non-strict).
std::vector<std::pair<Cell, AffineForm>> pl_case_split(const PLExpr& e, const Cell& base);

/// Certifies lhs == rhs over every feasible cell refining `facts`.
CellReport pl_prove_equal(const PLExpr& lhs, const PLExpr& rhs, const Cell& facts);

}  // namespace conifold
