#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "conifold/plexpr.hpp"

using namespace conifold;

namespace {

LinConstraint lt(AffineForm f) { return {std::move(f), Rel::Lt}; }
LinConstraint le(AffineForm f) { return {std::move(f), Rel::Le}; }

AffineForm v(const std::string& n) { return AffineForm::var(n); }
AffineForm c(int k) { return AffineForm::constant_form(ExtScalar(k)); }

}  // namespace

TEST_CASE("affine forms") {
  AffineForm f = v("x") + v("y").scaled(Rational(2)) + c(3);
  std::map<std::string, ExtScalar> a{{"x", ExtScalar(1)}, {"y", ExtScalar(2)}};
  CHECK(f.eval(a) == ExtScalar(8));
  CHECK(f.subst("y", Rational(0)).eval(a) == ExtScalar(4));
  CHECK((f - f).is_constant());
}

TEST_CASE("fourier-motzkin feasibility") {
  Cell empty;
  CHECK(empty.feasible());

  // x > 0 and x < 0: infeasible.
  Cell bad = empty.with(lt(-v("x"))).with(lt(v("x")));
  CHECK(!bad.feasible());

  // 0 < x < y < 1 is feasible; adding y <= x kills it.
  Cell chain = empty.with(lt(-v("x"))).with(lt(v("x") - v("y"))).with(lt(v("y") - c(1)));
  CHECK(chain.feasible());
  CHECK(!chain.with(le(v("y") - v("x"))).feasible());

  // Equality constraints participate: x == 1 and x < 1 is infeasible.
  Cell eq = empty.with(LinConstraint{v("x") - c(1), Rel::Eq});
  CHECK(eq.feasible());
  CHECK(!eq.with(lt(v("x") - c(1))).feasible());
}

TEST_CASE("pl evaluation with infinities") {
  PLExpr med = PLExpr::median_of(PLExpr::var("a"), PLExpr::var("b"), PLExpr::var("c"));
  std::map<std::string, ExtScalar> asn{
      {"a", ExtScalar::pos_inf()}, {"b", ExtScalar(2)}, {"c", ExtScalar(1)}};
  CHECK(med.eval(asn) == ExtScalar(2));
  PLExpr m = PLExpr::min_of({PLExpr::var("a"), PLExpr::var("b")});
  CHECK(m.eval(asn) == ExtScalar(2));
}

TEST_CASE("case split of median") {
  // median{t, P1, P2} under P2 < P1 -> three cells with forms P2, t, P1.
  PLExpr med = PLExpr::median_of(PLExpr::var("t"), PLExpr::var("P1"), PLExpr::var("P2"));
  Cell base;
  base = base.with(lt(v("P2") - v("P1")));
  auto cells = pl_case_split(med, base);
  std::set<std::string> forms;
  for (const auto& [cell, form] : cells) forms.insert(form.str());
  CHECK(forms.count(v("t").str()) == 1);
  CHECK(forms.count(v("P1").str()) == 1);
  CHECK(forms.count(v("P2").str()) == 1);
  CHECK(forms.size() == 3);
}

TEST_CASE("prove equal: median via min/max") {
  PLExpr med = PLExpr::median_of(PLExpr::var("a"), PLExpr::var("b"), PLExpr::var("c"));
  PLExpr alt = PLExpr::min_of(
      {PLExpr::max_of({PLExpr::var("a"), PLExpr::var("b")}),
       PLExpr::max_of({PLExpr::var("b"), PLExpr::var("c")}),
       PLExpr::max_of({PLExpr::var("a"), PLExpr::var("c")})});
  CellReport r = pl_prove_equal(med, alt, Cell{});
  CHECK(r.ok());
  CHECK(r.cells_checked > 0);
  CHECK(!r.no_feasible_cells);
}

TEST_CASE("prove equal: paper-style median fact") {
  // median{P, P1, P2} = P1 under facts P2 < P1 and P > P1.
  PLExpr med = PLExpr::median_of(PLExpr::var("P"), PLExpr::var("P1"), PLExpr::var("P2"));
  Cell facts;
  facts = facts.with(lt(v("P2") - v("P1"))).with(lt(v("P1") - v("P")));
  CellReport r = pl_prove_equal(med, PLExpr::var("P1"), facts);
  CHECK(r.ok());
  CHECK(!r.no_feasible_cells);

  // And a wrong claim is refuted.
  CellReport bad = pl_prove_equal(med, PLExpr::var("P2"), facts);
  CHECK(!bad.ok());
}

TEST_CASE("infinite variables") {
  // min(e, x) == x when e is pinned to +inf.
  Cell cell;
  cell.infinite_vars.insert("e");
  PLExpr lhs = PLExpr::min_of({PLExpr::var("e"), PLExpr::var("x")});
  CellReport r = pl_prove_equal(lhs, PLExpr::var("x"), cell);
  CHECK(r.ok());
  CHECK(!r.no_feasible_cells);

  // max(e, x) == e == +inf: compare two infinite forms by kind.
  PLExpr lhs2 = PLExpr::max_of({PLExpr::var("e"), PLExpr::var("x")});
  CellReport r2 = pl_prove_equal(lhs2, PLExpr::var("e"), cell);
  CHECK(r2.ok());

  // A finite form never equals an infinite one.
  CellReport r3 = pl_prove_equal(PLExpr::var("e"), PLExpr::var("x"), cell);
  CHECK(!r3.ok());
}

TEST_CASE("contradictory facts are flagged, not silently passed") {
  Cell facts;
  facts = facts.with(lt(v("x"))).with(lt(-v("x")));  // x < 0 and x > 0
  CellReport r = pl_prove_equal(PLExpr::var("x"), PLExpr::var("y"), facts);
  CHECK(r.no_feasible_cells);
  CHECK(r.cells_checked == 0);
}
