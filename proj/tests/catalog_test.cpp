#include <gtest/gtest.h>

#include "axial/catalog.hpp"
#include "support.hpp"

using namespace axial;
using namespace axial::testing;

namespace {

using V = Vect<Scalar>;
const Scalar one(1);

// Products transcribed directly from the preliminaries (y = x) and the
// three-eigenvalue classification, independent of the catalog constructors.
Algebra<Scalar> three_dim(const Scalar& al, const Scalar& be, const Scalar& x, const V& square) {
  Algebra<Scalar> alg({"a0", "a1", "a0a1"});
  const Scalar c = (al - 1) * (be - 1) * x;
  alg.set_product(0, 0, {one, 0, 0});
  alg.set_product(1, 1, {0, one, 0});
  alg.set_product(0, 1, {0, 0, one});
  alg.set_product(0, 2, {c, -(al * be), al + be});
  alg.set_product(1, 2, {-(al * be), c, al + be});
  alg.set_product(2, 2, square);
  return alg;
}

V classified_square(const Scalar& al, const Scalar& be, const Scalar& x) {
  const Scalar k = be * (al - 1) * (al + be - 1) * x - al * be * (al + be);
  const Scalar l = (one - al) * (al - be + 1) * x + al * al + Scalar(3) * al * be + Scalar(2) * be * be - be;
  return {k, k, l};
}

Scalar branch_x(const Scalar& al, const Scalar& be) { return (al + be) / (Scalar(2) * (one - al)); }

std::vector<CatalogEntry> all_entries() {
  return {alg_1A(),
          alg_2B(A()),
          alg_3dim_A(A(), q(1, 2), X()),
          alg_3dim_A(A(), B(), branch_x(A(), B())),
          alg_3dim_D(HalfSlot::Beta, A()),
          alg_3dim_D(HalfSlot::Alpha, B())};
}

const IdentityResult& find(const std::vector<IdentityResult>& rs, const std::string& name) {
  for (const auto& r : rs) {
    if (r.name == name) return r;
  }
  throw std::runtime_error("no identity " + name);
}

void expect_kind(const std::function<void()>& fn, ErrorKind kind) {
  try {
    fn();
    ADD_FAILURE() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

std::vector<IdealCheck> run_row(const IdealRow& row, std::uint64_t seed = 11) {
  std::mt19937_64 rng(seed);
  return verify_ideal_row(row, rng);
}

bool all_ok(const std::vector<IdealCheck>& cs) {
  return !cs.empty() && std::all_of(cs.begin(), cs.end(), [](const IdealCheck& c) { return c.ok(); });
}

bool none_ok(const std::vector<IdealCheck>& cs) {
  return !cs.empty() && std::none_of(cs.begin(), cs.end(), [](const IdealCheck& c) { return c.ok(); });
}

}  // namespace

TEST(Constructors, MatchTranscribedProducts) {
  EXPECT_EQ(alg_3dim_A(A(), q(1, 2), X()).algebra, three_dim(A(), q(1, 2), X(), classified_square(A(), q(1, 2), X())));
  const Scalar x = branch_x(A(), B());
  EXPECT_EQ(alg_3dim_A(A(), B(), x).algebra, three_dim(A(), B(), x, classified_square(A(), B(), x)));
  const Scalar k = q(1, 4) - A();
  EXPECT_EQ(alg_3dim_D(HalfSlot::Beta, A()).algebra, three_dim(A(), q(1, 2), one, {k, k, Scalar(2) * A() + q(1, 2)}));
  const Scalar t = (Scalar(4) - A()) / Scalar(4);
  EXPECT_EQ(alg_3dim_D(HalfSlot::Beta, A(), SquareForm::Tabulated).algebra,
            three_dim(A(), q(1, 2), one, {t, t, Scalar(-2) * t}));
  const Scalar kb = q(1, 4) - B();
  EXPECT_EQ(alg_3dim_D(HalfSlot::Alpha, B()).algebra,
            three_dim(q(1, 2), B(), one, {kb, kb, Scalar(2) * B() + q(1, 2)}));
}

TEST(Constructors, TwoB) {
  const auto e = alg_2B(A());
  EXPECT_EQ(e.algebra.product(e.axes[0], e.axes[1]), (V{A(), A()}));
  EXPECT_EQ(e.name, "2B(a)");
  EXPECT_TRUE(e.preconditions.count(Poly::param("a") - Poly(1)));
}

TEST(Constructors, PreconditionsAreHardErrors) {
  expect_kind([] { alg_2B(one); }, ErrorKind::BadParameter);
  expect_kind([] { alg_3dim_A(one, q(1, 2), X()); }, ErrorKind::BadParameter);
  expect_kind([] { alg_3dim_A(A(), one, branch_x(A(), one)); }, ErrorKind::BadParameter);
  expect_kind([] { alg_3dim_A(q(1, 2), q(1, 2), X()); }, ErrorKind::BadParameter);
  expect_kind([] { alg_3dim_A(A(), B(), X()); }, ErrorKind::BadParameter);
  expect_kind([] { alg_3dim_D(HalfSlot::Beta, q(1, 2)); }, ErrorKind::BadParameter);
  expect_kind([] { alg_3dim_D(HalfSlot::Alpha, one); }, ErrorKind::BadParameter);
  expect_kind([] { alg_3dim_D(HalfSlot::Alpha, A(), SquareForm::Tabulated); }, ErrorKind::BadParameter);
  EXPECT_NO_THROW(alg_3dim_A(q(1, 4), q(1, 3), branch_x(q(1, 4), q(1, 3))));
}

TEST(Laws, AsTabulated) {
  const auto a = laws::law_a(A(), B());
  EXPECT_EQ(a.product(B(), B()), (std::vector<Scalar>{one, A()}));
  const auto d = laws::law_d(A(), B());
  EXPECT_EQ(d.product(A(), A()), std::vector<Scalar>{B()});
  EXPECT_EQ(d.product(A(), B()), std::vector<Scalar>{one});
  EXPECT_EQ(laws::jordan_generic(A(), B()).product(A(), A()), std::vector<Scalar>{A()});
  EXPECT_EQ(laws::jordan_type(q(1, 2)).product(0, 0), std::vector<Scalar>{0});
  EXPECT_EQ(laws::law_c(A(), B()).product(A(), B()), std::vector<Scalar>{one});
  for (const auto& law : {a, d, laws::law_b(A(), B()), laws::law_c(A(), B()), laws::two_eval(A())}) {
    EXPECT_TRUE(law_checks(law).one_is_unit);
  }
}

TEST(Laws, SummaryRowFourIsARelabelingOfLawD) {
  // Stated as alpha * alpha = {1/2}, alpha * 1/2 = {1}, 1/2 * 1/2 = {alpha}.
  const Scalar h = q(1, 2);
  const FusionLaw stated({one, A(), h}, {{one, one, {one}}, {one, A(), {A()}}, {one, h, {h}}, {A(), A(), {h}},
                                          {A(), h, {one}}, {h, h, {A()}}});
  const auto xi = law_isomorphism(stated, laws::law_d(A(), h), false);
  ASSERT_TRUE(xi.has_value());
  EXPECT_EQ(*xi, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(EntryInvariants, AxesObeyDeclaredLawAndGenerate) {
  for (const auto& e : all_entries()) {
    for (const auto& axis : e.axes) {
      const auto r = check_axis(e.algebra, axis, e.law);
      EXPECT_TRUE(r.idempotent) << e.name;
      EXPECT_TRUE(r.complete) << e.name;
      EXPECT_TRUE(r.primitive) << e.name;
      EXPECT_TRUE(r.violations.empty()) << e.name;
    }
    EXPECT_EQ(subalgebra_closure(e.algebra, e.axes).dim(), e.algebra.dim()) << e.name;
  }
}

TEST(EntryInvariants, SwapIsAnAutomorphism) {
  for (const auto& e : all_entries()) {
    if (e.algebra.dim() != 3) continue;
    EXPECT_TRUE(check_map(e.algebra, sigma_map(e)).ok) << e.name;
  }
}

TEST(EntryInvariants, RandomSpecializationsStillObeyTheLaw) {
  Rng rng(71);
  int checked = 0;
  while (checked < 6) {
    const Scalar al(rng.rational(12));
    const Scalar be(rng.rational(12));
    CatalogEntry e;
    try {
      e = alg_3dim_A(al, be, branch_x(al, be));
    } catch (const Error&) {
      continue;
    }
    const auto r = check_axis(e.algebra, e.axes[0], e.law);
    if (!r.complete) continue;
    EXPECT_TRUE(r.ok()) << e.name;
    ++checked;
  }
}

TEST(Eigvecs, MembershipAndScaling) {
  for (const auto& e : all_entries()) {
    if (e.algebra.dim() != 3) continue;
    const auto [va, vb] = eigvecs(e);
    const Matrix<Scalar> ad = e.algebra.adjoint(e.axes[0]);
    EXPECT_EQ(ad.apply(va), *e.alpha * va) << e.name;
    EXPECT_EQ(ad.apply(vb), *e.beta * vb) << e.name;
    const auto d = eigendecompose(e.algebra, e.axes[0], e.law.labels());
    EXPECT_TRUE(d.spaces[*d.index_of(*e.alpha)].contains(Scalar(2) * va));
  }
  const auto d = alg_3dim_D(HalfSlot::Beta, A());
  EXPECT_EQ(eigvecs(d).second, (V{A() - 1, -A(), one}));
  expect_kind([] { eigvecs(alg_2B(A())); }, ErrorKind::WrongDimension);
}

TEST(IdentitySuite, BranchApplicability) {
  const auto half = identity_suite(alg_3dim_A(A(), q(1, 2), X()));
  EXPECT_TRUE(find(half, "v_b v_b at b = 1/2").applicable);
  EXPECT_FALSE(find(half, "v_b v_b on the x-branch").applicable);
  EXPECT_FALSE(find(half, "v_b v_b, C3-graded").applicable);
  const auto c3 = identity_suite(alg_3dim_D(HalfSlot::Beta, A()));
  EXPECT_TRUE(find(c3, "v_b v_b, C3-graded").applicable);
  EXPECT_FALSE(find(c3, "v_a v_b").applicable);
  for (const auto& r : identity_suite(alg_2B(A()))) EXPECT_FALSE(r.applicable);
}

TEST(IdentitySuite, HoldAsStated) {
  const auto half = identity_suite(alg_3dim_A(A(), q(1, 2), X()));
  const auto branch = identity_suite(alg_3dim_A(A(), B(), branch_x(A(), B())));
  for (const auto* rs : {&half, &branch}) {
    for (const char* n : {"a0 (v_a v_a)", "v_a v_a - v_b v_b", "v_a v_a - v_a v_b"}) {
      EXPECT_TRUE(find(*rs, n).holds) << n << " " << find(*rs, n).residual;
      EXPECT_EQ(find(*rs, n).residual, "0");
    }
  }
  EXPECT_TRUE(find(half, "v_b v_b at b = 1/2").holds);
  const auto zero = identity_suite(alg_3dim_A(Scalar(0), q(1, 2), X()));
  EXPECT_TRUE(find(zero, "a0 (v_a v_a)").holds);
  EXPECT_EQ(find(zero, "a0 (v_a v_a)").lhs, "0");
}

// Corrected forms found by direct expansion in the constructors.
TEST(IdentitySuite, StatedScalingsOfTwoAndThreeAreOffByFour) {
  const auto e = alg_3dim_A(A(), B(), branch_x(A(), B()));
  const auto rs = identity_suite(e);
  EXPECT_FALSE(find(rs, "v_b v_b on the x-branch").holds);
  EXPECT_FALSE(find(rs, "a0 (v_b v_b) on the x-branch").holds);
  const Scalar al = A();
  const Scalar be = B();
  const auto [va, vb] = eigvecs(e);
  const V vbvb = e.algebra.product(vb, vb);
  const V stated2 = (al - be) * V{Scalar(4) * al * be - al - be, Scalar(2) * (al + be - 1) * be,
                                   Scalar(-2) * (al + be - 1)};
  EXPECT_EQ(vbvb, q(1, 4) * stated2);
  const V lhs3 = e.algebra.product(e.axes[0], vbvb) - al * vbvb;
  EXPECT_EQ(lhs3, q(1, 4) * (al - be) * (al - be) * be * (Scalar(2) - Scalar(3) * al - be) * e.axes[0]);
}

TEST(IdentitySuite, StatedSignOfFourIsFlipped) {
  for (const auto& e : {alg_3dim_A(A(), q(1, 2), X()), alg_3dim_A(A(), B(), branch_x(A(), B()))}) {
    EXPECT_FALSE(find(identity_suite(e), "v_a v_b").holds);
    const auto [va, vb] = eigvecs(e);
    const Scalar c = (*e.alpha + *e.beta - 1) * ((one - *e.beta) * *e.x - *e.beta);
    EXPECT_EQ(e.algebra.product(va, vb), -c * vb) << e.name;
  }
}

TEST(IdentitySuite, SevenHoldsWithFactorTwo) {
  const auto e = alg_3dim_D(HalfSlot::Beta, A());
  EXPECT_FALSE(find(identity_suite(e), "v_b v_b, C3-graded").holds);
  const auto [va, vb] = eigvecs(e);
  EXPECT_TRUE(is_zero(e.algebra.product(va, va)));
  EXPECT_TRUE(is_zero(e.algebra.product(va, vb)));
  const Scalar d = A() - q(1, 2);
  EXPECT_EQ(e.algebra.product(vb, vb), Scalar(-2) * d * d * va);
}

TEST(IdealTable, RowsThatVerify) {
  const auto rows = three_eval_ideal_rows();
  ASSERT_EQ(rows.size(), 8U);
  for (std::size_t i : {0U, 1U, 4U, 5U, 6U}) {
    const auto cs = run_row(rows[i]);
    EXPECT_TRUE(all_ok(cs)) << rows[i].ideal << " " << rows[i].condition << ": " << cs.front().detail;
  }
  EXPECT_EQ(run_row(rows[0]).size(), 4U);
  EXPECT_EQ(run_row(rows[4]).size(), 1U);
}

TEST(IdealTable, RowsThatFailAsStated) {
  const auto rows = three_eval_ideal_rows();
  for (std::size_t i : {2U, 3U, 7U}) EXPECT_TRUE(none_ok(run_row(rows[i]))) << rows[i].condition;
  EXPECT_EQ(run_row(rows[2]).front().closure_dim, 3U);
  EXPECT_FALSE(run_row(rows[7]).front().constructed);
}

TEST(IdealTable, VBetaIdealAtOppositeSignOfX) {
  const auto e = alg_3dim_A(A(), q(1, 2), A() / (one - A()));
  const auto c = check_ideal(e, {"v_b"}, QuotientShape::TwoBAlpha);
  EXPECT_TRUE(c.ok()) << c.detail;
  EXPECT_FALSE(check_ideal(e, {"v_b"}, QuotientShape::TwoBBeta).quotient_matches);
}

TEST(IdealTable, NegativeControl) {
  EXPECT_FALSE(check_ideal(alg_3dim_A(A(), q(1, 2), X()), {"v_a"}, QuotientShape::TwoBBeta).closed);
  EXPECT_FALSE(check_ideal(alg_3dim_A(A(), B(), branch_x(A(), B())), {"v_a"}, QuotientShape::TwoBBeta).closed);
  EXPECT_FALSE(check_ideal(alg_3dim_A(A(), B(), branch_x(A(), B())), {"v_a", "v_b"}, QuotientShape::OneA).closed);
}

TEST(IdealTable, SamplesAreSeeded) {
  const auto row = three_eval_ideal_rows()[0];
  const auto a = run_row(row, 5);
  const auto b = run_row(row, 5);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].instance, b[i].instance);
}

TEST(C3Ideals, OneDimensionalIdealIsSpannedByTheOtherEigenvector) {
  for (auto slot : {HalfSlot::Beta, HalfSlot::Alpha}) {
    const auto stated = c3_ideal_rows(slot, true);
    EXPECT_TRUE(none_ok(run_row(stated[0])));
    EXPECT_TRUE(all_ok(run_row(stated[1])));
    const auto derived = c3_ideal_rows(slot, false);
    EXPECT_TRUE(all_ok(run_row(derived[0])));
    EXPECT_TRUE(all_ok(run_row(derived[1])));
  }
  EXPECT_EQ(c3_ideal_rows(HalfSlot::Beta, false)[0].ideal, "<v_a>");
}

TEST(Jordan, ListedCases) {
  for (const auto& c : jordan_cases()) {
    const bool expected = c.name != "(ii) 2B(a), a = -1/2";
    for (const auto& axis : c.entry.axes) EXPECT_EQ(check_axis(c.entry.algebra, axis, c.law).ok(), expected) << c.name;
  }
}

TEST(Jordan, MinusHalfFailsButHalfPasses) {
  const auto fails = check_axis(alg_2B(q(-1, 2)).algebra, alg_2B(q(-1, 2)).axes[0], laws::jordan_generic(q(-1, 2), B()));
  ASSERT_EQ(fails.violations.size(), 1U);
  EXPECT_EQ(fails.violations[0].nu, one);
  const auto e = alg_2B(q(1, 2));
  EXPECT_TRUE(check_axis(e.algebra, e.axes[0], laws::jordan_generic(q(1, 2), B())).ok());
}

TEST(Jordan, OffCaseFailsOnTheUnitComponent) {
  const auto c = jordan_off_case();
  const auto r = check_axis(c.entry.algebra, c.entry.axes[0], c.law);
  EXPECT_FALSE(r.ok());
  bool unit = false;
  for (const auto& v : r.violations) {
    if (v.lambda == q(1, 4) && v.mu == q(1, 4) && v.nu == one) unit = true;
    EXPECT_NE(v.nu, q(1, 3));
  }
  EXPECT_TRUE(unit);
}

TEST(TableRows, AxisProductsAgreeSquaresDisagree) {
  for (const auto& row : table_rows()) {
    EXPECT_EQ(row.entry.algebra.basis_product(0, 2), row.a0m) << row.name;
    EXPECT_NE(row.entry.algebra.basis_product(2, 2), row.mm) << row.name;
    auto stated = row.entry.algebra;
    stated.set_product(2, 2, row.mm);
    EXPECT_FALSE(check_axis(stated, row.entry.axes[0], row.entry.law).ok()) << row.name;
  }
}

TEST(C3Square, OnlyTheDerivedFormulaObeysLawD) {
  for (const auto& al : {A(), q(1, 4), Scalar(3), Scalar(-2)}) {
    const auto derived = alg_3dim_D(HalfSlot::Beta, al);
    const auto tabulated = alg_3dim_D(HalfSlot::Beta, al, SquareForm::Tabulated);
    EXPECT_TRUE(check_axis(derived.algebra, derived.axes[0], derived.law).ok());
    EXPECT_FALSE(check_axis(tabulated.algebra, tabulated.axes[0], tabulated.law).ok());
  }
}
