#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "conifold/fastrational.hpp"

namespace conifold {

struct IndeterminateForm : std::runtime_error {
  explicit IndeterminateForm(const std::string& what) : std::runtime_error(what) {}
};

struct IndeterminateValuation : std::runtime_error {
  explicit IndeterminateValuation(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

enum class NumMode { Exact, Float };

/// Global run configuration: exact rationals or doubles with tolerance.
/// Never switched mid-computation.
NumMode num_mode();
void set_num_mode(NumMode m);

/// Comparison tolerance used whenever a float value is involved.
inline constexpr double kFloatTol = 1e-9;

/// A finite number: exact rational or double, promoted to double on mixing.
/// Mixing only occurs in float mode (e.g. the exp psi model against grid
/// rationals); exact mode stays exact end to end.
class Scalar {
 public:
  Scalar() : exact_(true), rat_(0), dbl_(0) {}
  Scalar(int v) : exact_(true), rat_(v), dbl_(double(v)) {}
  Scalar(long v) : exact_(true), rat_(v), dbl_(double(v)) {}
  Scalar(long long v) : exact_(true), rat_(v), dbl_(double(v)) {}
  Scalar(const Rational& r) : exact_(true), rat_(r), dbl_(0) {}
  Scalar(const FastRational& r) : exact_(true), rat_(r), dbl_(0) {}
  Scalar(int num, int den) : exact_(true), rat_(num, den), dbl_(0) {}

  static Scalar from_double(double d) {
    Scalar s;
    s.exact_ = false;
    s.dbl_ = d;
    return s;
  }

  bool is_exact() const { return exact_; }
  double as_double() const { return exact_ ? rat_.to_double() : dbl_; }
  Rational rat() const {
    if (!exact_) throw DomainError("Scalar::rat: value is a float");
    return rat_.to_rational();
  }

  Scalar operator-() const { return exact_ ? Scalar(-rat_) : from_double(-dbl_); }
  Scalar operator+(const Scalar& o) const {
    if (exact_ && o.exact_) return Scalar(rat_ + o.rat_);
    return from_double(as_double() + o.as_double());
  }
  Scalar operator-(const Scalar& o) const {
    if (exact_ && o.exact_) return Scalar(rat_ - o.rat_);
    return from_double(as_double() - o.as_double());
  }
  Scalar operator*(const Scalar& o) const {
    if (exact_ && o.exact_) return Scalar(rat_ * o.rat_);
    return from_double(as_double() * o.as_double());
  }
  Scalar operator/(const Scalar& o) const {
    if (exact_ && o.exact_) {
      if (o.rat_.is_zero()) throw DomainError("Scalar: division by zero");
      return Scalar(rat_ / o.rat_);
    }
    return from_double(as_double() / o.as_double());
  }

  /// Three-way compare; |a-b| <= 1e-9 counts as equal when floats are involved.
  int compare(const Scalar& o) const {
    if (exact_ && o.exact_) return rat_.compare(o.rat_);
    double d = as_double() - o.as_double();
    if (std::fabs(d) <= kFloatTol) return 0;
    return d < 0 ? -1 : 1;
  }

  bool operator==(const Scalar& o) const { return compare(o) == 0; }
  bool operator!=(const Scalar& o) const { return compare(o) != 0; }
  bool operator<(const Scalar& o) const { return compare(o) < 0; }
  bool operator<=(const Scalar& o) const { return compare(o) <= 0; }
  bool operator>(const Scalar& o) const { return compare(o) > 0; }
  bool operator>=(const Scalar& o) const { return compare(o) >= 0; }

  std::string str() const;

 private:
  bool exact_;
  FastRational rat_;
  double dbl_;
};

/// Extended real: Scalar plus -inf / +inf.  min(+inf, a) = a, inf + finite
/// absorbs, and (+inf) + (-inf) throws rather than producing a value.
class ExtScalar {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  ExtScalar() : kind_(Kind::Finite), v_() {}
  ExtScalar(const Scalar& s) : kind_(Kind::Finite), v_(s) {}
  ExtScalar(int v) : kind_(Kind::Finite), v_(v) {}
  ExtScalar(const Rational& r) : kind_(Kind::Finite), v_(r) {}

  static ExtScalar pos_inf() { return ExtScalar(Kind::PosInf); }
  static ExtScalar neg_inf() { return ExtScalar(Kind::NegInf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  const Scalar& finite() const {
    if (!is_finite()) throw DomainError("ExtScalar: not finite");
    return v_;
  }

  ExtScalar operator-() const {
    switch (kind_) {
      case Kind::PosInf: return neg_inf();
      case Kind::NegInf: return pos_inf();
      default: return ExtScalar(-v_);
    }
  }

  ExtScalar operator+(const ExtScalar& o) const {
    if (is_finite() && o.is_finite()) return ExtScalar(v_ + o.v_);
    if (is_pos_inf() && o.is_neg_inf()) throw IndeterminateForm("(+inf) + (-inf)");
    if (is_neg_inf() && o.is_pos_inf()) throw IndeterminateForm("(-inf) + (+inf)");
    if (is_pos_inf() || o.is_pos_inf()) return pos_inf();
    return neg_inf();
  }
  ExtScalar operator-(const ExtScalar& o) const { return *this + (-o); }

  /// c * x for a finite rational c; 0 * inf = 0 by convention (only used
  /// when a variable is absent from an affine form).
  ExtScalar scaled(const Rational& c) const {
    if (is_finite()) return ExtScalar(v_ * Scalar(c));
    if (c == 0) return ExtScalar(0);
    if (c > 0) return *this;
    return -*this;
  }

  int compare(const ExtScalar& o) const {
    if (kind_ == o.kind_) {
      if (is_finite()) return v_.compare(o.v_);
      return 0;
    }
    auto rank = [](Kind k) { return k == Kind::NegInf ? 0 : (k == Kind::Finite ? 1 : 2); };
    return rank(kind_) < rank(o.kind_) ? -1 : 1;
  }

  bool operator==(const ExtScalar& o) const { return compare(o) == 0; }
  bool operator!=(const ExtScalar& o) const { return compare(o) != 0; }
  bool operator<(const ExtScalar& o) const { return compare(o) < 0; }
  bool operator<=(const ExtScalar& o) const { return compare(o) <= 0; }
  bool operator>(const ExtScalar& o) const { return compare(o) > 0; }
  bool operator>=(const ExtScalar& o) const { return compare(o) >= 0; }

  std::string str() const;

 private:
  explicit ExtScalar(Kind k) : kind_(k), v_() {}
  Kind kind_;
  Scalar v_;
};

inline ExtScalar min(const ExtScalar& a, const ExtScalar& b) { return a <= b ? a : b; }
inline ExtScalar max(const ExtScalar& a, const ExtScalar& b) { return a >= b ? a : b; }

/// Middle value of three under the extended-real order.
ExtScalar median(const ExtScalar& a, const ExtScalar& b, const ExtScalar& c);

std::string rational_str(const Rational& r);
Rational parse_rational(const std::string& s);

}  // namespace conifold
