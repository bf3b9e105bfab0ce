#include "conifold/plexpr.hpp"

#include <algorithm>
#include <sstream>

namespace conifold {

AffineForm AffineForm::var(const std::string& name) {
  AffineForm f;
  f.coeffs[name] = 1;
  return f;
}

AffineForm AffineForm::constant_form(ExtScalar c) {
  AffineForm f;
  f.constant = c;
  return f;
}

AffineForm AffineForm::operator+(const AffineForm& o) const {
  if (!is_finite() || !o.is_finite()) {
    // absorbing; +inf + -inf throws in ExtScalar
    return constant_form(constant + o.constant);
  }
  AffineForm f = *this;
  for (const auto& [v, c] : o.coeffs) {
    Rational& cc = f.coeffs[v];
    cc += c;
    if (cc == 0) f.coeffs.erase(v);
  }
  f.constant = constant + o.constant;
  return f;
}

AffineForm AffineForm::operator-() const { return scaled(-1); }

AffineForm AffineForm::operator-(const AffineForm& o) const { return *this + (-o); }

AffineForm AffineForm::scaled(const Rational& c) const {
  if (c == 0) return AffineForm{};
  AffineForm f;
  for (const auto& [v, cc] : coeffs) f.coeffs[v] = cc * c;
  f.constant = constant.scaled(c);
  return f;
}

AffineForm AffineForm::shifted(const Rational& c) const {
  AffineForm f = *this;
  f.constant = f.constant + ExtScalar(Rational(c));
  return f;
}

AffineForm AffineForm::subst(const std::string& name, const Rational& value) const {
  auto it = coeffs.find(name);
  if (it == coeffs.end()) return *this;
  AffineForm f = *this;
  f.constant = f.constant + ExtScalar(Rational(it->second * value));
  f.coeffs.erase(name);
  return f;
}

ExtScalar AffineForm::eval(const std::map<std::string, ExtScalar>& assignment) const {
  ExtScalar acc = constant;
  for (const auto& [v, c] : coeffs) {
    auto it = assignment.find(v);
    if (it == assignment.end()) throw DomainError("unassigned variable " + v);
    acc = acc + it->second.scaled(c);
  }
  return acc;
}

bool AffineForm::operator==(const AffineForm& o) const {
  return coeffs == o.coeffs && constant == o.constant;
}

std::string AffineForm::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, c] : coeffs) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << rational_str(c) << "*";
    os << v;
  }
  if (first) {
    os << constant.str();
  } else if (constant != ExtScalar(0)) {
    os << " + " << constant.str();
  }
  return os.str();
}

std::string LinConstraint::str() const {
  const char* op = rel == Rel::Le ? " <= 0" : (rel == Rel::Lt ? " < 0" : " == 0");
  return form.str() + op;
}

Cell Cell::with(LinConstraint c) const {
  Cell out = *this;
  out.constraints.push_back(std::move(c));
  return out;
}

bool Cell::feasible() const { return cell_feasible(*this); }

std::string Cell::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& c : constraints) {
    if (!first) os << ", ";
    first = false;
    os << c.str();
  }
  for (const auto& v : infinite_vars) {
    if (!first) os << ", ";
    first = false;
    os << v << " = +inf";
  }
  os << "}";
  return os.str();
}

// ---------------------------------------------------------------------------
// Fourier-Motzkin feasibility
// ---------------------------------------------------------------------------

namespace {

struct FMRow {
  std::map<std::string, Rational> coeffs;
  Scalar konst;
  Rel rel;
};

bool fm_feasible(std::vector<FMRow> rows) {
  // Equalities first: substitute and drop.
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].rel != Rel::Eq) continue;
      if (rows[i].coeffs.empty()) {
        if (rows[i].konst != Scalar(0)) return false;
        rows.erase(rows.begin() + i);
        changed = true;
        break;
      }
      auto [var, c] = *rows[i].coeffs.begin();
      FMRow eq = rows[i];
      rows.erase(rows.begin() + i);
      // x = -(rest + konst)/c
      for (auto& r : rows) {
        auto it = r.coeffs.find(var);
        if (it == r.coeffs.end()) continue;
        Rational factor = it->second / c;
        r.coeffs.erase(it);
        for (const auto& [v2, c2] : eq.coeffs) {
          if (v2 == var) continue;
          Rational& cc = r.coeffs[v2];
          cc -= factor * c2;
          if (cc == 0) r.coeffs.erase(v2);
        }
        r.konst = r.konst - Scalar(factor) * eq.konst;
      }
      changed = true;
      break;
    }
  }

  // Inequality elimination.
  while (true) {
    std::set<std::string> vars;
    for (const auto& r : rows)
      for (const auto& [v, c] : r.coeffs) vars.insert(v);
    if (vars.empty()) break;

    // Pick the variable with the fewest pos*neg combinations.
    std::string best;
    long best_cost = -1;
    for (const auto& v : vars) {
      long pos = 0, neg = 0;
      for (const auto& r : rows) {
        auto it = r.coeffs.find(v);
        if (it == r.coeffs.end()) continue;
        (it->second > 0 ? pos : neg)++;
      }
      long cost = pos * neg;
      if (best_cost < 0 || cost < best_cost) {
        best_cost = cost;
        best = v;
      }
    }

    std::vector<FMRow> keep, pos, neg;
    for (auto& r : rows) {
      auto it = r.coeffs.find(best);
      if (it == r.coeffs.end())
        keep.push_back(std::move(r));
      else if (it->second > 0)
        pos.push_back(std::move(r));
      else
        neg.push_back(std::move(r));
    }
    for (const auto& p : pos) {
      Rational cp = p.coeffs.at(best);
      for (const auto& n : neg) {
        Rational cn = n.coeffs.at(best);  // cn < 0
        // (-cn) * p + cp * n eliminates `best`; both multipliers positive.
        FMRow r;
        r.rel = (p.rel == Rel::Lt || n.rel == Rel::Lt) ? Rel::Lt : Rel::Le;
        for (const auto& [v, c] : p.coeffs) {
          if (v == best) continue;
          r.coeffs[v] = c * (-cn);
        }
        for (const auto& [v, c] : n.coeffs) {
          if (v == best) continue;
          Rational& cc = r.coeffs[v];
          cc += c * cp;
          if (cc == 0) r.coeffs.erase(v);
        }
        r.konst = p.konst * Scalar(Rational(-cn)) + n.konst * Scalar(cp);
        if (r.coeffs.empty()) {
          if (r.rel == Rel::Lt ? !(r.konst < Scalar(0)) : !(r.konst <= Scalar(0)))
            return false;
        } else {
          keep.push_back(std::move(r));
        }
      }
    }
    rows = std::move(keep);
  }

  for (const auto& r : rows) {
    if (r.rel == Rel::Lt ? !(r.konst < Scalar(0)) : !(r.konst <= Scalar(0))) return false;
  }
  return true;
}

}  // namespace

bool cell_feasible(const Cell& cell) {
  std::vector<FMRow> rows;
  rows.reserve(cell.constraints.size());
  for (const auto& c : cell.constraints) {
    if (!c.form.is_finite())
      throw DomainError("cell constraint with infinite constant");
    FMRow r;
    r.coeffs = c.form.coeffs;
    r.konst = c.form.constant.finite();
    r.rel = c.rel;
    rows.push_back(std::move(r));
  }
  return fm_feasible(std::move(rows));
}

// ---------------------------------------------------------------------------
// PLExpr
// ---------------------------------------------------------------------------

PLExpr PLExpr::affine(AffineForm f) {
  PLExpr e;
  e.kind_ = Kind::Affine;
  e.form_ = std::move(f);
  return e;
}

PLExpr PLExpr::var(const std::string& name) { return affine(AffineForm::var(name)); }

PLExpr PLExpr::constant(ExtScalar c) { return affine(AffineForm::constant_form(c)); }

PLExpr PLExpr::min_of(std::vector<PLExpr> kids) {
  PLExpr e;
  e.kind_ = Kind::Min;
  e.kids_ = std::move(kids);
  return e;
}

PLExpr PLExpr::max_of(std::vector<PLExpr> kids) {
  PLExpr e;
  e.kind_ = Kind::Max;
  e.kids_ = std::move(kids);
  return e;
}

PLExpr PLExpr::median_of(PLExpr a, PLExpr b, PLExpr c) {
  PLExpr e;
  e.kind_ = Kind::Median;
  e.kids_ = {std::move(a), std::move(b), std::move(c)};
  return e;
}

PLExpr PLExpr::sum_of(std::vector<PLExpr> kids) {
  PLExpr e;
  e.kind_ = Kind::Sum;
  e.kids_ = std::move(kids);
  return e;
}

ExtScalar PLExpr::eval(const std::map<std::string, ExtScalar>& assignment) const {
  switch (kind_) {
    case Kind::Affine:
      return form_.eval(assignment);
    case Kind::Min: {
      ExtScalar acc = ExtScalar::pos_inf();
      for (const auto& k : kids_) acc = min(acc, k.eval(assignment));
      return acc;
    }
    case Kind::Max: {
      ExtScalar acc = ExtScalar::neg_inf();
      for (const auto& k : kids_) acc = max(acc, k.eval(assignment));
      return acc;
    }
    case Kind::Median:
      return median(kids_[0].eval(assignment), kids_[1].eval(assignment),
                    kids_[2].eval(assignment));
    case Kind::Sum: {
      ExtScalar acc = ExtScalar(0);
      for (const auto& k : kids_) acc = acc + k.eval(assignment);
      return acc;
    }
  }
  throw DomainError("unreachable");
}

std::string PLExpr::str() const {
  auto join = [this](const char* name) {
    std::ostringstream os;
    os << name << "(";
    bool first = true;
    for (const auto& k : kids_) {
      if (!first) os << ", ";
      first = false;
      os << k.str();
    }
    os << ")";
    return os.str();
  };
  switch (kind_) {
    case Kind::Affine: return form_.str();
    case Kind::Min: return join("min");
    case Kind::Max: return join("max");
    case Kind::Median: return join("median");
    case Kind::Sum: return join("sum");
  }
  return "";
}

// ---------------------------------------------------------------------------
// Symbolic case split and prover
// ---------------------------------------------------------------------------

namespace {

/// Pin infinite variables to +inf inside an affine form.
AffineForm resolve_infinite(const AffineForm& f, const Cell& cell) {
  if (cell.infinite_vars.empty() || f.coeffs.empty()) return f;
  int pos = 0, neg = 0;
  AffineForm out;
  for (const auto& [v, c] : f.coeffs) {
    if (cell.infinite_vars.count(v)) {
      (c > 0 ? pos : neg)++;
    } else {
      out.coeffs[v] = c;
    }
  }
  if (pos && neg) throw IndeterminateForm("(+inf) + (-inf) in affine form");
  if (pos) {
    if (f.constant.is_neg_inf()) throw IndeterminateForm("(+inf) + (-inf)");
    return AffineForm::constant_form(ExtScalar::pos_inf());
  }
  if (neg) {
    if (f.constant.is_pos_inf()) throw IndeterminateForm("(-inf) + (+inf)");
    return AffineForm::constant_form(ExtScalar::neg_inf());
  }
  out.constant = f.constant;
  return out;
}

enum class Tri { Always, Never, Linear };

/// Classify the comparison f <= g on a cell; fills `out` when linear.
Tri leq_constraint(const AffineForm& f, const AffineForm& g, LinConstraint* out) {
  if (!f.is_finite() || !g.is_finite()) {
    if (f.constant.is_neg_inf() || g.constant.is_pos_inf()) return Tri::Always;
    return Tri::Never;
  }
  out->form = f - g;
  out->rel = Rel::Le;
  if (out->form.coeffs.empty())
    return out->form.constant <= ExtScalar(0) ? Tri::Always : Tri::Never;
  return Tri::Linear;
}

using Pieces = std::vector<std::pair<Cell, AffineForm>>;

Pieces split(const PLExpr& e, const Cell& base);

Pieces split_extremum(const std::vector<PLExpr>& kids, const Cell& base, bool is_min) {
  // Cartesian refinement over children, then one branch per arg-min/max.
  std::vector<std::pair<Cell, std::vector<AffineForm>>> tuples = {{base, {}}};
  for (const auto& kid : kids) {
    std::vector<std::pair<Cell, std::vector<AffineForm>>> next;
    for (const auto& [cell, forms] : tuples) {
      for (const auto& [kcell, kform] : split(kid, cell)) {
        auto forms2 = forms;
        forms2.push_back(kform);
        next.push_back({kcell, std::move(forms2)});
      }
    }
    tuples = std::move(next);
  }

  Pieces out;
  for (const auto& [cell, forms] : tuples) {
    for (size_t i = 0; i < forms.size(); ++i) {
      Cell branch = cell;
      bool possible = true;
      for (size_t j = 0; j < forms.size() && possible; ++j) {
        if (i == j) continue;
        LinConstraint c;
        Tri t = is_min ? leq_constraint(forms[i], forms[j], &c)
                       : leq_constraint(forms[j], forms[i], &c);
        switch (t) {
          case Tri::Always: break;
          case Tri::Never: possible = false; break;
          case Tri::Linear: branch.constraints.push_back(std::move(c)); break;
        }
      }
      if (possible && branch.feasible()) out.push_back({std::move(branch), forms[i]});
    }
  }
  return out;
}

AffineForm add_forms(const AffineForm& a, const AffineForm& b) { return a + b; }

Pieces split(const PLExpr& e, const Cell& base) {
  switch (e.kind()) {
    case PLExpr::Kind::Affine:
      return {{base, resolve_infinite(e.form(), base)}};
    case PLExpr::Kind::Sum: {
      Pieces acc = {{base, AffineForm{}}};
      for (const auto& kid : e.kids()) {
        Pieces next;
        for (const auto& [cell, f] : acc)
          for (const auto& [kcell, kf] : split(kid, cell))
            next.push_back({kcell, add_forms(f, kf)});
        acc = std::move(next);
      }
      return acc;
    }
    case PLExpr::Kind::Min:
      return split_extremum(e.kids(), base, true);
    case PLExpr::Kind::Max:
      return split_extremum(e.kids(), base, false);
    case PLExpr::Kind::Median: {
      // median{a,b,c} = min{max(a,b), max(b,c), max(a,c)}
      const auto& k = e.kids();
      PLExpr norm = PLExpr::min_of({PLExpr::max_of({k[0], k[1]}),
                                    PLExpr::max_of({k[1], k[2]}),
                                    PLExpr::max_of({k[0], k[2]})});
      return split(norm, base);
    }
  }
  throw DomainError("unreachable");
}

bool equal_on_cell(const Cell& cell, const AffineForm& lhs, const AffineForm& rhs) {
  if (!lhs.is_finite() || !rhs.is_finite())
    return lhs.constant.kind() == rhs.constant.kind();
  AffineForm d = lhs - rhs;
  if (d.coeffs.empty()) return d.constant == ExtScalar(0);
  if (cell.with({d, Rel::Lt}).feasible()) return false;
  if (cell.with({-d, Rel::Lt}).feasible()) return false;
  return true;
}

}  // namespace

std::vector<std::pair<Cell, AffineForm>> pl_case_split(const PLExpr& e,
                                                       const Cell& base) {
  if (!base.feasible()) return {};
  return split(e, base);
}

CellReport pl_prove_equal(const PLExpr& lhs, const PLExpr& rhs, const Cell& facts) {
  CellReport report;
  auto left = pl_case_split(lhs, facts);
  if (left.empty()) {
    report.no_feasible_cells = true;
    return report;
  }
  for (const auto& [lcell, lform] : left) {
    for (const auto& [rcell, rform] : split(rhs, lcell)) {
      report.cells_checked++;
      if (equal_on_cell(rcell, lform, rform)) {
        report.cells_passed++;
      } else {
        report.failures.push_back({rcell, lform, rform});
      }
    }
  }
  return report;
}

void CellReport::merge(const CellReport& o) {
  cells_checked += o.cells_checked;
  cells_passed += o.cells_passed;
  failures.insert(failures.end(), o.failures.begin(), o.failures.end());
  no_feasible_cells = no_feasible_cells || o.no_feasible_cells;
}

}  // namespace conifold
