#include "conifold/novikov.hpp"

#include <algorithm>
#include <sstream>

namespace conifold {

std::string GaussianRational::str() const {
  if (im.is_zero()) return re.str();
  std::ostringstream os;
  if (!re.is_zero()) {
    os << re.str();
    if (im.sign() > 0) os << "+";
  }
  if (im == FastRational(-1))
    os << "-";
  else if (im != FastRational(1))
    os << im.str() << "*";
  os << "i";
  return os.str();
}

NovikovNum NovikovNum::zero(ExtScalar trunc) {
  NovikovNum n;
  n.trunc_ = trunc;
  return n;
}

NovikovNum NovikovNum::one() { return monomial(GaussianRational(1), Scalar(0)); }

NovikovNum NovikovNum::monomial(GaussianRational c, Scalar e, ExtScalar trunc) {
  NovikovNum n;
  n.trunc_ = trunc;
  if (!c.is_zero() && ExtScalar(e) < trunc) n.terms_.push_back({std::move(c), e});
  return n;
}

NovikovNum NovikovNum::from_terms(std::vector<Term> terms, ExtScalar trunc) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return a.expo < b.expo; });
  NovikovNum n;
  n.trunc_ = trunc;
  for (auto& t : terms) {
    if (ExtScalar(t.expo) >= trunc) continue;
    if (!n.terms_.empty() && n.terms_.back().expo == t.expo) {
      n.terms_.back().coeff = n.terms_.back().coeff + t.coeff;
      if (n.terms_.back().coeff.is_zero()) n.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      n.terms_.push_back(std::move(t));
    }
  }
  return n;
}

ExtScalar NovikovNum::val() const {
  if (!terms_.empty()) return ExtScalar(terms_.front().expo);
  if (trunc_.is_pos_inf()) return ExtScalar::pos_inf();
  throw IndeterminateValuation("indeterminate valuation: no term below trunc " +
                               trunc_.str());
}

ExtScalar NovikovNum::val_lower_bound() const {
  if (!terms_.empty()) return ExtScalar(terms_.front().expo);
  return trunc_;
}

const GaussianRational& NovikovNum::leading_coeff() const {
  if (terms_.empty()) throw IndeterminateValuation("indeterminate valuation");
  return terms_.front().coeff;
}

NovikovNum NovikovNum::operator-() const {
  NovikovNum n = *this;
  for (auto& t : n.terms_) t.coeff = -t.coeff;
  return n;
}

NovikovNum NovikovNum::operator+(const NovikovNum& o) const {
  ExtScalar trunc = min(trunc_, o.trunc_);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    bool take_a;
    if (i == terms_.size())
      take_a = false;
    else if (j == o.terms_.size())
      take_a = true;
    else {
      int c = terms_[i].expo.compare(o.terms_[j].expo);
      if (c == 0) {
        GaussianRational sum = terms_[i].coeff + o.terms_[j].coeff;
        if (!sum.is_zero()) merged.push_back({sum, terms_[i].expo});
        ++i, ++j;
        continue;
      }
      take_a = c < 0;
    }
    merged.push_back(take_a ? terms_[i++] : o.terms_[j++]);
  }
  NovikovNum n;
  n.trunc_ = trunc;
  for (auto& t : merged)
    if (ExtScalar(t.expo) < trunc) n.terms_.push_back(std::move(t));
  return n;
}

NovikovNum NovikovNum::operator-(const NovikovNum& o) const { return *this + (-o); }

NovikovNum NovikovNum::operator*(const NovikovNum& o) const {
  // Tightest provable trunc: an unknown tail of one factor meets the leading
  // term of the other.
  ExtScalar trunc = min(trunc_ + o.val_lower_bound(), o.trunc_ + val_lower_bound());
  NovikovNum out;
  out.trunc_ = trunc;
  std::vector<Term>& acc = out.terms_;
  std::vector<Term> row, merged;
  // Exponents are sorted in both factors, so each row (one term of *this
  // against all of o) is sorted and can stop as soon as it reaches the
  // truncation; rows are merged into the accumulator, which stays at result
  // size instead of holding all partial products.
  for (const auto& a : terms_) {
    row.clear();
    for (const auto& b : o.terms_) {
      Scalar e = a.expo + b.expo;
      if (!(ExtScalar(e) < trunc)) break;
      row.push_back({a.coeff * b.coeff, std::move(e)});
    }
    if (row.empty()) {
      if (!o.terms_.empty()) break;
      continue;
    }
    merged.clear();
    merged.reserve(acc.size() + row.size());
    size_t i = 0, j = 0;
    while (i < acc.size() || j < row.size()) {
      int cmp;
      if (i >= acc.size())
        cmp = 1;
      else if (j >= row.size())
        cmp = -1;
      else
        cmp = acc[i].expo.compare(row[j].expo);
      if (cmp < 0) {
        merged.push_back(std::move(acc[i++]));
      } else if (cmp > 0) {
        merged.push_back(std::move(row[j++]));
      } else {
        GaussianRational s = acc[i].coeff + row[j].coeff;
        if (!s.is_zero()) merged.push_back({std::move(s), acc[i].expo});
        ++i;
        ++j;
      }
    }
    std::swap(acc, merged);
  }
  return out;
}

NovikovNum NovikovNum::inv(ExtScalar order) const {
  if (terms_.empty()) {
    if (trunc_.is_pos_inf()) throw DomainError("NovikovNum::inv: zero is not invertible");
    throw IndeterminateValuation("NovikovNum::inv: indeterminate valuation");
  }
  Scalar v = terms_.front().expo;
  GaussianRational cinv = terms_.front().coeff.inverse();
  ExtScalar result_trunc = min(order, trunc_ - ExtScalar(v) - ExtScalar(v));
  if (terms_.size() > 1 && result_trunc.is_pos_inf())
    throw DomainError("NovikovNum::inv: finite order required for non-monomial input");
  NovikovNum out;
  out.trunc_ = result_trunc;
  if (terms_.size() == 1) {
    if (ExtScalar(-v) < result_trunc) out.terms_.push_back({cinv, -v});
    return out;
  }
  // Long division: maintain the sorted remainder r with
  // (*this) * out + T^v * r == 1 modulo the truncation.
  ExtScalar rem_trunc = result_trunc + ExtScalar(v);
  std::vector<Term> r{{GaussianRational(1), Scalar(0)}};
  while (!r.empty()) {
    Scalar be = r.front().expo - v;
    if (!(ExtScalar(be) < result_trunc)) break;
    GaussianRational bc = r.front().coeff * cinv;
    out.terms_.push_back({bc, be});
    // r -= bc * T^be * (*this); the leading term cancels by construction.
    std::vector<Term> sub;
    sub.reserve(terms_.size() - 1);
    for (size_t k = 1; k < terms_.size(); ++k) {
      Scalar e = terms_[k].expo + be;
      if (ExtScalar(e) < rem_trunc) sub.push_back({-(bc * terms_[k].coeff), e});
    }
    std::vector<Term> merged;
    merged.reserve(r.size() - 1 + sub.size());
    size_t i = 1, j = 0;
    while (i < r.size() || j < sub.size()) {
      int cmp;
      if (i >= r.size())
        cmp = 1;
      else if (j >= sub.size())
        cmp = -1;
      else
        cmp = r[i].expo.compare(sub[j].expo);
      if (cmp < 0) {
        merged.push_back(r[i++]);
      } else if (cmp > 0) {
        merged.push_back(sub[j++]);
      } else {
        GaussianRational s = r[i].coeff + sub[j].coeff;
        if (!s.is_zero()) merged.push_back({std::move(s), r[i].expo});
        ++i;
        ++j;
      }
    }
    r = std::move(merged);
  }
  return out;
}

NovikovNum NovikovNum::truncated(ExtScalar trunc) const {
  NovikovNum n;
  n.trunc_ = min(trunc_, trunc);
  for (const auto& t : terms_)
    if (ExtScalar(t.expo) < n.trunc_) n.terms_.push_back(t);
  return n;
}

bool NovikovNum::equal_upto_common_trunc(const NovikovNum& o) const {
  ExtScalar trunc = min(trunc_, o.trunc_);
  NovikovNum d = (*this - o).truncated(trunc);
  return !d.has_terms();
}

std::string NovikovNum::str() const {
  std::ostringstream os;
  if (terms_.empty()) {
    os << "0";
  } else {
    bool first = true;
    for (const auto& t : terms_) {
      std::string c = t.coeff.str();
      if (!first) {
        if (!c.empty() && c[0] == '-') {
          os << " - ";
          c = c.substr(1);
        } else {
          os << " + ";
        }
      }
      first = false;
      if (ExtScalar(t.expo) == ExtScalar(0)) {
        os << c;
      } else {
        os << c << "*T^" << t.expo.str();
      }
    }
  }
  if (!trunc_.is_pos_inf()) os << " (trunc " << trunc_.str() << ")";
  return os.str();
}

ExtScalar ProjValue::val() const {
  if (!num.has_terms() && !den.has_terms() && num.trunc().is_pos_inf() &&
      den.trunc().is_pos_inf())
    throw DomainError("ProjValue: 0/0 is not a point of the projective line");
  // val(num) - val(den); the exact zero on either side carries +inf.
  ExtScalar vn = num.val();
  ExtScalar vd = den.val();
  if (vn.is_pos_inf() && vd.is_pos_inf())
    throw DomainError("ProjValue: 0/0 is not a point of the projective line");
  return vn - vd;
}

}  // namespace conifold
