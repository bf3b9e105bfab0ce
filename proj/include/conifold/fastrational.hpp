#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <string>

namespace conifold {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational with an int64 numerator/denominator fast path and a
/// transparent fallback to boost cpp_rational on overflow.  Intermediate
/// products are computed in __int128, so the fast path never overflows
/// silently; values that cannot be reduced back into int64 are promoted.
class FastRational {
 public:
  FastRational() = default;
  FastRational(int v) : n_(v) {}
  FastRational(long v) { *this = make(v, 1); }
  FastRational(long long v) { *this = make(v, 1); }
  FastRational(long long n, long long d) { *this = make(n, d); }
  FastRational(const Rational& r) { assign_big(r); }

  bool is_zero() const { return big_ ? *big_ == 0 : n_ == 0; }
  int sign() const {
    if (big_) return big_->sign();
    return n_ < 0 ? -1 : (n_ > 0 ? 1 : 0);
  }

  Rational to_rational() const {
    if (big_) return *big_;
    return Rational(n_, d_);
  }
  double to_double() const {
    if (big_) return big_->convert_to<double>();
    return double(n_) / double(d_);
  }

  FastRational operator-() const {
    if (big_) return from_big(Rational(-*big_));
    FastRational r;
    r.n_ = -n_;
    r.d_ = d_;
    return r;
  }

  FastRational operator+(const FastRational& o) const {
    if (!big_ && !o.big_) {
      I128 n = I128(n_) * o.d_ + I128(o.n_) * d_;
      return make(n, I128(d_) * o.d_);
    }
    return from_big(Rational(to_rational() + o.to_rational()));
  }
  FastRational operator-(const FastRational& o) const { return *this + (-o); }

  FastRational operator*(const FastRational& o) const {
    if (!big_ && !o.big_) {
      // Cross-reduce first so the result is already in lowest terms.
      long long g1 = gcd64(n_ < 0 ? -n_ : n_, o.d_);
      long long g2 = gcd64(o.n_ < 0 ? -o.n_ : o.n_, d_);
      I128 n = I128(n_ / g1) * (o.n_ / g2);
      I128 d = I128(d_ / g2) * (o.d_ / g1);
      return make_reduced(n, d);
    }
    return from_big(Rational(to_rational() * o.to_rational()));
  }

  FastRational operator/(const FastRational& o) const {
    if (!big_ && !o.big_) {
      if (o.n_ == 0) throw std::domain_error("FastRational: division by zero");
      long long on = o.n_, od = o.d_;
      if (on < 0) {
        on = -on;
        od = -od;
      }
      FastRational inv;
      inv.n_ = od;
      inv.d_ = on;
      return *this * inv;
    }
    return from_big(Rational(to_rational() / o.to_rational()));
  }

  int compare(const FastRational& o) const {
    if (!big_ && !o.big_) {
      I128 l = I128(n_) * o.d_, r = I128(o.n_) * d_;
      return l < r ? -1 : (l > r ? 1 : 0);
    }
    return to_rational().compare(o.to_rational());
  }

  bool operator==(const FastRational& o) const {
    if (!big_ && !o.big_) return n_ == o.n_ && d_ == o.d_;
    return compare(o) == 0;
  }
  bool operator!=(const FastRational& o) const { return !(*this == o); }
  bool operator<(const FastRational& o) const { return compare(o) < 0; }
  bool operator<=(const FastRational& o) const { return compare(o) <= 0; }
  bool operator>(const FastRational& o) const { return compare(o) > 0; }
  bool operator>=(const FastRational& o) const { return compare(o) >= 0; }

  std::string str() const {
    if (big_) {
      if (boost::multiprecision::denominator(*big_) == 1)
        return boost::multiprecision::numerator(*big_).str();
      return boost::multiprecision::numerator(*big_).str() + "/" +
             boost::multiprecision::denominator(*big_).str();
    }
    if (d_ == 1) return std::to_string(n_);
    return std::to_string(n_) + "/" + std::to_string(d_);
  }

 private:
  using I128 = __int128;
  using U128 = unsigned __int128;

  long long n_ = 0;
  long long d_ = 1;
  std::shared_ptr<const Rational> big_;

  static long long gcd64(long long a, long long b) {
    return std::gcd(a, b);
  }

  static U128 gcd128(U128 a, U128 b) {
    while (b != 0) {
      U128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  // Small values are kept strictly below 2^62 so that the 128-bit
  // cross-products and their sums in +, *, and compare cannot overflow.
  static constexpr long long kSmallMax = (1LL << 62) - 1;

  /// From a reduced n/d with d > 0, both known to need no further reduction.
  static FastRational make_reduced(I128 n, I128 d) {
    constexpr I128 lo = -I128(kSmallMax);
    constexpr I128 hi = kSmallMax;
    if (n >= lo && n <= hi && d <= hi) {
      FastRational r;
      r.n_ = (long long)n;
      r.d_ = (long long)d;
      return r;
    }
    return from_big(Rational(big_of(n), big_of(d)));
  }

  static FastRational make(I128 n, I128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) return FastRational();
    U128 g = gcd128(n < 0 ? U128(-n) : U128(n), U128(d));
    return make_reduced(n / I128(g), d / I128(g));
  }

  static BigInt big_of(I128 v) {
    bool neg = v < 0;
    U128 u = neg ? U128(-v) : U128(v);
    BigInt b = (BigInt(std::uint64_t(u >> 64)) << 64) | std::uint64_t(u);
    return neg ? BigInt(-b) : b;
  }

  void assign_big(const Rational& r) {
    const BigInt& num = boost::multiprecision::numerator(r);
    const BigInt& den = boost::multiprecision::denominator(r);
    constexpr long long hi = kSmallMax;
    constexpr long long lo = -kSmallMax;
    if (num >= lo && num <= hi && den <= hi) {
      n_ = num.convert_to<long long>();
      d_ = den.convert_to<long long>();
      big_.reset();
    } else {
      n_ = 0;
      d_ = 1;
      big_ = std::make_shared<const Rational>(r);
    }
  }

  static FastRational from_big(const Rational& r) {
    FastRational out;
    out.assign_big(r);
    return out;
  }
};

}  // namespace conifold
