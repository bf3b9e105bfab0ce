#include "conifold/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace conifold {

namespace {
NumMode g_mode = NumMode::Exact;
}

NumMode num_mode() { return g_mode; }
void set_num_mode(NumMode m) { g_mode = m; }

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1)
    os << "/" << boost::multiprecision::denominator(r);
  return os.str();
}

Rational parse_rational(const std::string& s) try {
  auto slash = s.find('/');
  auto dot = s.find('.');
  if (slash != std::string::npos) {
    return Rational(boost::multiprecision::cpp_int(s.substr(0, slash)),
                    boost::multiprecision::cpp_int(s.substr(slash + 1)));
  }
  if (dot != std::string::npos) {
    // decimal literal, e.g. 0.25
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    boost::multiprecision::cpp_int den = 1;
    for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
    return Rational(boost::multiprecision::cpp_int(digits), den);
  }
  return Rational(boost::multiprecision::cpp_int(s));
} catch (const std::exception&) {
  throw DomainError("parse_rational: not a rational: " + s);
}

std::string Scalar::str() const {
  if (exact_) return rat_.str();
  std::ostringstream os;
  os << dbl_;
  return os.str();
}

std::string ExtScalar::str() const {
  switch (kind_) {
    case Kind::PosInf: return "+inf";
    case Kind::NegInf: return "-inf";
    default: return v_.str();
  }
}

ExtScalar median(const ExtScalar& a, const ExtScalar& b, const ExtScalar& c) {
  ExtScalar v[3] = {a, b, c};
  if (v[1] < v[0]) std::swap(v[0], v[1]);
  if (v[2] < v[1]) std::swap(v[1], v[2]);
  if (v[1] < v[0]) std::swap(v[0], v[1]);
  return v[1];
}

}  // namespace conifold
