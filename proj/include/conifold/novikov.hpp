#pragma once

#include <string>
#include <vector>

#include "conifold/scalar.hpp"

namespace conifold {

/// Element of Q(i): exact Gaussian rational coefficient.
struct GaussianRational {
  FastRational re;
  FastRational im;

  GaussianRational() = default;
  GaussianRational(FastRational r) : re(std::move(r)) {}
  GaussianRational(const Rational& r) : re(r) {}
  GaussianRational(int r) : re(r) {}
  GaussianRational(FastRational r, FastRational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  GaussianRational operator+(const GaussianRational& o) const {
    return {re + o.re, im + o.im};
  }
  GaussianRational operator-(const GaussianRational& o) const {
    return {re - o.re, im - o.im};
  }
  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational operator*(const GaussianRational& o) const {
    if (im.is_zero() && o.im.is_zero()) return {re * o.re};
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianRational inverse() const {
    FastRational n = re * re + im * im;
    if (n.is_zero()) throw DomainError("GaussianRational: inverse of zero");
    return {re / n, -im / n};
  }
  bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GaussianRational& o) const { return !(*this == o); }

  std::string str() const;
};

/// Truncated series over the Novikov field: finitely many terms with
/// strictly increasing exponents, all below `trunc`.  Terms with exponent
/// >= trunc are unknown and discarded; `trunc == +inf` means the element
/// is known exactly.
class NovikovNum {
 public:
  struct Term {
    GaussianRational coeff;
    Scalar expo;
  };

  NovikovNum() : trunc_(ExtScalar::pos_inf()) {}

  static NovikovNum zero(ExtScalar trunc = ExtScalar::pos_inf());
  static NovikovNum one();
  static NovikovNum monomial(GaussianRational c, Scalar e,
                             ExtScalar trunc = ExtScalar::pos_inf());
  /// From sorted-or-unsorted term list; merges equal exponents.
  static NovikovNum from_terms(std::vector<Term> terms,
                               ExtScalar trunc = ExtScalar::pos_inf());

  const std::vector<Term>& terms() const { return terms_; }
  const ExtScalar& trunc() const { return trunc_; }
  bool has_terms() const { return !terms_.empty(); }

  /// Leading exponent.  +inf for the exact zero; throws IndeterminateValuation
  /// when no term is known below a finite trunc.
  ExtScalar val() const;
  /// Provable lower bound: leading exponent, or trunc when no terms.
  ExtScalar val_lower_bound() const;
  bool val_determinate() const { return has_terms() || trunc_.is_pos_inf(); }

  const GaussianRational& leading_coeff() const;

  NovikovNum operator-() const;
  NovikovNum operator+(const NovikovNum& o) const;
  NovikovNum operator-(const NovikovNum& o) const;
  NovikovNum operator*(const NovikovNum& o) const;

  /// Geometric-series inversion; the product a * inv(a, N) equals 1 up to
  /// terms of exponent >= N.
  NovikovNum inv(ExtScalar order) const;

  NovikovNum truncated(ExtScalar trunc) const;

  /// Equality of all representable terms below the common truncation.
  bool equal_upto_common_trunc(const NovikovNum& o) const;

  std::string str() const;

 private:
  std::vector<Term> terms_;
  ExtScalar trunc_;
};

inline NovikovNum operator+(int a, const NovikovNum& b) {
  return NovikovNum::monomial(GaussianRational(a), Scalar(0)) + b;
}

/// Point of the projective line over the Novikov field, as a (num, den) pair.
struct ProjValue {
  NovikovNum num;
  NovikovNum den;

  /// val(num) - val(den); -inf exactly at the point at infinity.
  ExtScalar val() const;
};

}  // namespace conifold
