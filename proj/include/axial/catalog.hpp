#pragma once

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "axial/algebra.hpp"
#include "axial/error.hpp"
#include "axial/field.hpp"
#include "axial/fusion.hpp"
#include "axial/linalg.hpp"

namespace axial {

namespace laws {

namespace detail {

inline FusionLaw three(const Scalar& al, const Scalar& be, std::vector<Scalar> aa, std::vector<Scalar> ab,
                       std::vector<Scalar> bb) {
  const Scalar one(1);
  return FusionLaw({one, al, be}, {{one, one, {one}},
                                   {one, al, {al}},
                                   {one, be, {be}},
                                   {al, al, std::move(aa)},
                                   {al, be, std::move(ab)},
                                   {be, be, std::move(bb)}});
}

}  // namespace detail

/// alpha * alpha = {1, alpha}, alpha * beta = {beta}, beta * beta = {1, alpha}.
inline FusionLaw law_a(const Scalar& al, const Scalar& be) { return detail::three(al, be, {1, al}, {be}, {1, al}); }

/// Law (a) with the roles of alpha and beta exchanged.
inline FusionLaw law_b(const Scalar& al, const Scalar& be) { return detail::three(al, be, {1, be}, {al}, {1, be}); }

inline FusionLaw law_c(const Scalar& al, const Scalar& be) { return detail::three(al, be, {1}, {1}, {1}); }

inline FusionLaw law_d(const Scalar& al, const Scalar& be) { return detail::three(al, be, {be}, {1}, {al}); }

/// Eigenvalues 1, 0, eta: 0 * 0 = {0}, 0 * eta = {eta}, eta * eta = {1, 0}.
inline FusionLaw jordan_type(const Scalar& eta) { return detail::three(0, eta, {0}, {eta}, {1, 0}); }

inline FusionLaw jordan_generic(const Scalar& al, const Scalar& be) {
  return detail::three(al, be, {al}, {be}, {1, al});
}

inline FusionLaw two_eval(const Scalar& al) {
  const Scalar one(1);
  return FusionLaw({one, al}, {{one, one, {one}}, {one, al, {al}}, {al, al, {one, al}}});
}

inline FusionLaw trivial() { return FusionLaw({Scalar(1)}, {{Scalar(1), Scalar(1), {Scalar(1)}}}); }

}  // namespace laws

enum class EntryKind { OneA, TwoB, ThreeDimA, ThreeDimD };

/// Which eigenvalue is pinned to 1/2 in the C3-graded family.
enum class HalfSlot { Alpha, Beta };

/// Candidate formulas for (a0a1)(a0a1) in the C3-graded family: the one
/// derived alongside the classification, and the one listed in the summary
/// table.
enum class SquareForm { Derived, Tabulated };

struct CatalogEntry {
  std::string name;
  EntryKind kind = EntryKind::OneA;
  Algebra<Scalar> algebra;
  std::vector<Vect<Scalar>> axes;
  FusionLaw law;
  std::optional<Scalar> alpha;
  std::optional<Scalar> beta;
  std::optional<Scalar> x;
  // Polynomials that must not vanish for the entry to be admissible.
  Certificate preconditions;
};

namespace detail {

inline void require_nonzero(const Scalar& s, const std::string& what, Certificate& cert) {
  if (s.is_zero()) throw Error(ErrorKind::BadParameter, "violated constraint " + what);
  add_condition(cert, s.numerator());
  add_condition(cert, s.denominator());
}

inline Vect<Scalar> vec(std::initializer_list<Scalar> cs) { return Vect<Scalar>(cs); }

inline std::string param_list(std::initializer_list<Scalar> ps) {
  std::string s;
  for (const auto& p : ps) s += (s.empty() ? "" : ", ") + p.to_string();
  return s;
}

/// Basis a0, a1, a0a1 with a0(a0a1), a1(a0a1) from the eigenvector
/// decomposition of a1 under a0 (taking y = x).
inline Algebra<Scalar> three_dim(const Scalar& al, const Scalar& be, const Scalar& x, const Vect<Scalar>& square) {
  Algebra<Scalar> alg({"a0", "a1", "a0a1"});
  const Scalar c = (al - 1) * (be - 1) * x;
  alg.set_product(0, 0, vec({1, 0, 0}));
  alg.set_product(1, 1, vec({0, 1, 0}));
  alg.set_product(0, 1, vec({0, 0, 1}));
  alg.set_product(0, 2, vec({c, -(al * be), al + be}));
  alg.set_product(1, 2, vec({-(al * be), c, al + be}));
  alg.set_product(2, 2, square);
  return alg;
}

}  // namespace detail

inline CatalogEntry alg_1A() {
  CatalogEntry e;
  e.name = "1A";
  e.kind = EntryKind::OneA;
  e.algebra = Algebra<Scalar>({"a0"});
  e.algebra.set_product(0, 0, {Scalar(1)});
  e.axes = {e.algebra.basis(0), e.algebra.basis(0)};
  e.law = laws::trivial();
  return e;
}

inline CatalogEntry alg_2B(const Scalar& al) {
  CatalogEntry e;
  detail::require_nonzero(al - 1, "alpha != 1", e.preconditions);
  e.name = "2B(" + al.to_string() + ")";
  e.kind = EntryKind::TwoB;
  e.algebra = Algebra<Scalar>({"a0", "a1"});
  e.algebra.set_product(0, 0, detail::vec({1, 0}));
  e.algebra.set_product(1, 1, detail::vec({0, 1}));
  e.algebra.set_product(0, 1, detail::vec({al, al}));
  e.axes = {e.algebra.basis(0), e.algebra.basis(1)};
  e.law = laws::two_eval(al);
  e.alpha = al;
  return e;
}

/// x on the branch beta != 1/2.
inline Scalar x_branch(const Scalar& al, const Scalar& be) { return (al + be) / (Scalar(2) * (Scalar(1) - al)); }

inline CatalogEntry alg_3dim_A(const Scalar& al, const Scalar& be, const Scalar& x) {
  CatalogEntry e;
  detail::require_nonzero(al - 1, "alpha != 1", e.preconditions);
  detail::require_nonzero(be - 1, "beta != 1", e.preconditions);
  detail::require_nonzero(al - be, "alpha != beta", e.preconditions);
  if (!(be - Scalar(Rational(1, 2))).is_zero() && x != x_branch(al, be)) {
    throw Error(ErrorKind::BadParameter,
                "violated constraint beta = 1/2 or x = (alpha + beta)/(2(1 - alpha)) at x = " + x.to_string());
  }
  e.name = "3A(" + detail::param_list({al, be, x}) + ")";
  e.kind = EntryKind::ThreeDimA;
  const Scalar k = be * (al - 1) * (al + be - 1) * x - al * be * (al + be);
  const Scalar l = (Scalar(1) - al) * (al - be + 1) * x + al * al + Scalar(3) * al * be + Scalar(2) * be * be - be;
  e.algebra = detail::three_dim(al, be, x, {k, k, l});
  e.axes = {e.algebra.basis(0), e.algebra.basis(1)};
  e.law = laws::law_a(al, be);
  e.alpha = al;
  e.beta = be;
  e.x = x;
  return e;
}

/// The C3-graded algebra with one eigenvalue pinned to 1/2 and x = y = 1.
inline CatalogEntry alg_3dim_D(HalfSlot slot, const Scalar& free, SquareForm form = SquareForm::Derived) {
  CatalogEntry e;
  const Scalar half(Rational(1, 2));
  detail::require_nonzero(free - 1, "free parameter != 1", e.preconditions);
  detail::require_nonzero(free - half, "free parameter != 1/2", e.preconditions);
  const Scalar al = slot == HalfSlot::Alpha ? half : free;
  const Scalar be = slot == HalfSlot::Alpha ? free : half;
  Vect<Scalar> square;
  if (form == SquareForm::Derived) {
    const Scalar k = Scalar(Rational(1, 4)) - free;
    square = {k, k, Scalar(2) * free + half};
  } else {
    if (slot != HalfSlot::Beta) throw Error(ErrorKind::BadParameter, "tabulated square exists for beta = 1/2 only");
    const Scalar k = (Scalar(4) - al) / Scalar(4);
    square = {k, k, Scalar(-2) * k};
  }
  e.name = std::string("3D(") + (slot == HalfSlot::Alpha ? "a = 1/2, b = " : "b = 1/2, a = ") + free.to_string() +
           (form == SquareForm::Tabulated ? ", tabulated square)" : ")");
  e.kind = EntryKind::ThreeDimD;
  e.algebra = detail::three_dim(al, be, Scalar(1), square);
  e.axes = {e.algebra.basis(0), e.algebra.basis(1)};
  e.law = laws::law_d(al, be);
  e.alpha = al;
  e.beta = be;
  e.x = Scalar(1);
  return e;
}

/// v_alpha and v_beta in the 1-, alpha- and beta-eigenspace basis of a0.
inline std::pair<Vect<Scalar>, Vect<Scalar>> eigvecs(const CatalogEntry& e) {
  if (e.algebra.dim() != 3) throw Error(ErrorKind::WrongDimension, e.name + " is not 3-dimensional");
  const Scalar& al = *e.alpha;
  const Scalar& be = *e.beta;
  const Scalar& x = *e.x;
  return {detail::vec({(be - 1) * x, -be, 1}), detail::vec({(al - 1) * x, -al, 1})};
}

/// The map exchanging a0 and a1 and fixing a0a1.
inline AlgebraMap<Scalar> sigma_map(const CatalogEntry& e) {
  const std::size_t n = e.algebra.dim();
  Matrix<Scalar> m = Matrix<Scalar>::identity(n);
  if (n >= 2) {
    m(0, 0) = m(1, 1) = Scalar(0);
    m(0, 1) = m(1, 0) = Scalar(1);
  }
  return {m, std::nullopt};
}

/// One displayed identity evaluated in a catalog algebra.
struct IdentityResult {
  std::string name;
  std::string entry;
  bool applicable = false;
  bool holds = false;
  std::string lhs;
  std::string rhs;
  std::string residual;
  Vect<Scalar> lhs_value;
  Vect<Scalar> rhs_value;
  // Further equalities the identity asserts besides lhs = rhs.
  bool side_conditions = true;
};

namespace detail {

inline bool is_half(const Scalar& s) { return s == Scalar(Rational(1, 2)); }

inline IdentityResult compare(const std::string& name, const CatalogEntry& e, const Vect<Scalar>& lhs,
                              const Vect<Scalar>& rhs) {
  return {name, e.name, true, lhs == rhs, e.algebra.format(lhs), e.algebra.format(rhs), e.algebra.format(lhs - rhs),
          lhs, rhs};
}

}  // namespace detail

/// Identities (1)-(7) of the three-eigenvalue analysis, each checked as an
/// exact equality when the entry lies on its constraint branch.
inline std::vector<IdentityResult> identity_suite(const CatalogEntry& e) {
  std::vector<IdentityResult> out;
  const auto skip = [&](const std::string& name, const std::string& why) {
    IdentityResult r;
    r.name = name;
    r.entry = e.name;
    r.residual = "constraint unsatisfied: " + why;
    out.push_back(r);
  };
  if (e.algebra.dim() != 3) {
    for (const char* n : {"v_b v_b at b = 1/2", "v_b v_b on the x-branch", "a0 (v_b v_b) on the x-branch", "v_a v_b", "a0 (v_a v_a)", "v_a v_a - v_b v_b", "v_a v_a - v_a v_b", "v_b v_b, C3-graded"}) skip(n, "not 3-dimensional");
    return out;
  }
  const auto& alg = e.algebra;
  const Scalar& al = *e.alpha;
  const Scalar& be = *e.beta;
  const Scalar& x = *e.x;
  const auto [va, vb] = eigvecs(e);
  const auto mul = [&](const Vect<Scalar>& u, const Vect<Scalar>& v) { return alg.product(u, v); };
  const Vect<Scalar> a0 = alg.basis(0);
  const Vect<Scalar> a1 = alg.basis(1);
  const Vect<Scalar> m = alg.basis(2);
  const Vect<Scalar> vbvb = mul(vb, vb);
  const Vect<Scalar> vava = mul(va, va);
  const Vect<Scalar> vavb = mul(va, vb);
  const bool three_a = e.kind == EntryKind::ThreeDimA;
  const bool on_x_branch = three_a && x == x_branch(al, be);

  if (three_a && detail::is_half(be)) {
    const Scalar c = Scalar(Rational(1, 4)) * (Scalar(2) * al - 1) * ((al - 1) * x + al);
    out.push_back(detail::compare("v_b v_b at b = 1/2", e, vbvb, c * (a0 + a1 - Scalar(2) * m)));
  } else {
    skip("v_b v_b at b = 1/2", "needs the three-dimensional algebra with b = 1/2");
  }
  if (on_x_branch) {
    const Vect<Scalar> rhs2 =
        (al - be) * ((Scalar(4) * al * be - al - be) * a0 + Scalar(2) * (al + be - 1) * (be * a1 - m));
    out.push_back(detail::compare("v_b v_b on the x-branch", e, vbvb, rhs2));
    const Scalar c3 = (al - be) * (al - be) * be * (Scalar(2) - Scalar(3) * al - be);
    out.push_back(detail::compare("a0 (v_b v_b) on the x-branch", e, mul(a0, vbvb) - al * vbvb, c3 * a0));
  } else {
    skip("v_b v_b on the x-branch", "needs x = (a + b)/(2(1 - a))");
    skip("a0 (v_b v_b) on the x-branch", "needs x = (a + b)/(2(1 - a))");
  }
  if (three_a) {
    out.push_back(detail::compare("v_a v_b", e, vavb, (al + be - 1) * ((Scalar(1) - be) * x - be) * vb));
    const Scalar c5 = al * (al - be) * (al - 1) * ((Scalar(1) - be) * x - be) * (x - 1);
    out.push_back(detail::compare("a0 (v_a v_a)", e, mul(a0, vava) - al * vava, c5 * a0));
    // Difference formulas with y = x.
    const Scalar y = x;
    const Scalar inv = Scalar(1) / (al - be);
    const Vect<Scalar> rhs6a = ((al + be - Scalar(2) * al * be) * x * x - Scalar(2) * al * be) * a0 +
                               (Scalar(2) * al * be * x + Scalar(2) * (al - 1) * (be - 1) * y - al - be) * a1 -
                               Scalar(2) * (x - al - be) * m;
    out.push_back(detail::compare("v_a v_a - v_b v_b", e, inv * (vava - vbvb), rhs6a));
    const Vect<Scalar> rhs6b = (al * (Scalar(1) - be) * x * x - al * be) * a0 +
                               (al * be * x + (al - 1) * (be - 1) * y - be) * a1 +
                               ((be - al - 1) * x + al + be) * m;
    out.push_back(detail::compare("v_a v_a - v_a v_b", e, inv * (vava - vavb), rhs6b));
  } else {
    for (const char* n : {"v_a v_b", "a0 (v_a v_a)", "v_a v_a - v_b v_b", "v_a v_a - v_a v_b"}) skip(n, "needs the three-dimensional algebra of law (a)");
  }
  if (e.kind == EntryKind::ThreeDimD && detail::is_half(be)) {
    const Scalar d = al - Scalar(Rational(1, 2));
    auto r = detail::compare("v_b v_b, C3-graded", e, vbvb, -(d * d) * va);
    r.side_conditions = is_zero(vava) && is_zero(vavb);
    if (!r.side_conditions) {
      r.holds = false;
      r.residual += "; v_a v_a = " + alg.format(vava) + ", v_a v_b = " + alg.format(vavb);
    }
    out.push_back(r);
  } else {
    skip("v_b v_b, C3-graded", "needs the C3-graded algebra with b = 1/2");
  }
  return out;
}

/// The entries on which the identity suite is meaningful: both branches of
/// the three-dimensional law-(a) family and the C3-graded family.
inline std::vector<CatalogEntry> identity_entries() {
  const Scalar a = Scalar::param("a");
  const Scalar b = Scalar::param("b");
  const Scalar x = Scalar::param("x");
  return {alg_3dim_A(a, Scalar(Rational(1, 2)), x), alg_3dim_A(a, b, x_branch(a, b)),
          alg_3dim_D(HalfSlot::Beta, a)};
}

/// The entries whose invariants the catalog guarantees, with free
/// parameters left symbolic.
inline std::vector<CatalogEntry> catalog_entries() {
  const Scalar a = Scalar::param("a");
  const Scalar b = Scalar::param("b");
  const Scalar x = Scalar::param("x");
  return {alg_1A(),
          alg_2B(a),
          alg_3dim_A(a, Scalar(Rational(1, 2)), x),
          alg_3dim_A(a, b, x_branch(a, b)),
          alg_3dim_D(HalfSlot::Beta, a),
          alg_3dim_D(HalfSlot::Alpha, b)};
}

enum class QuotientShape { TwoBAlpha, TwoBBeta, OneA };

inline std::string to_string(QuotientShape s) {
  switch (s) {
    case QuotientShape::TwoBAlpha: return "2B(alpha)";
    case QuotientShape::TwoBBeta: return "2B(beta)";
    case QuotientShape::OneA: return "1A";
  }
  return "?";
}

/// A row of an ideal table: generators named from {a0, v_a, v_b}, the entry
/// realizing the row's parameter condition as a function of the free
/// parameters left, and the expected quotient.
struct IdealRow {
  std::string ideal;
  std::vector<std::string> gens;
  std::string condition;
  std::vector<std::string> free;
  std::function<CatalogEntry(const ParamAssignment&)> build;
  QuotientShape quotient = QuotientShape::OneA;
};

namespace detail {

inline Scalar sp(const Scalar& s, const ParamAssignment& at) { return at.empty() ? s : s.specialize(at); }

}  // namespace detail

/// Ideals of the three-dimensional law-(a) algebra, as tabulated.
inline std::vector<IdealRow> three_eval_ideal_rows() {
  using detail::sp;
  const Scalar a = Scalar::param("a");
  const Scalar b = Scalar::param("b");
  const Scalar x = Scalar::param("x");
  const Scalar half(Rational(1, 2));
  const auto three = [](Scalar al, Scalar be, Scalar xx) {
    return [=](const ParamAssignment& at) { return alg_3dim_A(sp(al, at), sp(be, at), sp(xx, at)); };
  };
  return {
      {"<v_a>", {"v_a"}, "b = -1, x = -1/2", {"a"}, three(a, Scalar(-1), Scalar(Rational(-1, 2))),
       QuotientShape::TwoBBeta},
      {"<v_a>", {"v_a"}, "b = 1/2, x = 1", {"a"}, three(a, half, Scalar(1)), QuotientShape::TwoBBeta},
      {"<v_b>", {"v_b"}, "b = 1/2, x = a/(a - 1)", {"a"}, three(a, half, a / (a - 1)), QuotientShape::TwoBAlpha},
      {"<a0, v_a>", {"a0", "v_a"}, "b = 0", {"a"}, three(a, Scalar(0), x_branch(a, Scalar(0))),
       QuotientShape::OneA},
      {"<a0, v_b>", {"a0", "v_b"}, "a = 0, b = 1/2, x = 0", {}, three(Scalar(0), half, Scalar(0)),
       QuotientShape::OneA},
      {"<v_a, v_b>", {"v_a", "v_b"}, "b = 1/2, x = 1", {"a"}, three(a, half, Scalar(1)), QuotientShape::OneA},
      {"<v_a, v_b>", {"v_a", "v_b"}, "b = 2 - 3a, x = 1", {"a"}, three(a, Scalar(2) - Scalar(3) * a, Scalar(1)),
       QuotientShape::OneA},
      {"<v_a, v_b>", {"v_a", "v_b"}, "b = 0, x = a/(1 - a)", {"a"}, three(a, Scalar(0), a / (Scalar(1) - a)),
       QuotientShape::OneA},
  };
  (void)b;
  (void)x;
}

/// The two ideals of the C3-graded algebra. With `as_stated` the
/// one-dimensional ideal is spanned by the eigenvector of the eigenvalue
/// pinned to 1/2; otherwise by the other one, as derived in the proof.
inline std::vector<IdealRow> c3_ideal_rows(HalfSlot slot, bool as_stated = true) {
  using detail::sp;
  const bool beta_half = slot == HalfSlot::Beta;
  const std::string free = beta_half ? "a" : "b";
  const Scalar p = Scalar::param(free);
  const auto c3 = [slot, p](const ParamAssignment& at) { return alg_3dim_D(slot, sp(p, at)); };
  const std::string gen = (beta_half == as_stated) ? "v_b" : "v_a";
  const std::string cond = beta_half ? "b = 1/2" : "a = 1/2";
  return {
      {"<" + gen + ">", {gen}, cond, {free}, c3, beta_half ? QuotientShape::TwoBBeta : QuotientShape::TwoBAlpha},
      {"<v_a, v_b>", {"v_a", "v_b"}, cond, {free}, c3, QuotientShape::OneA},
  };
}

/// Outcome of one table row at one parameter instance.
struct IdealCheck {
  std::string ideal;
  std::string condition;
  std::string instance;  // "symbolic" or the specialization used
  bool constructed = false;
  bool closed = false;
  bool proper = false;
  bool quotient_matches = false;
  std::size_t closure_dim = 0;
  std::string detail;

  bool ok() const { return constructed && closed && proper && quotient_matches; }
};

inline Vect<Scalar> named_vector(const CatalogEntry& e, const std::string& name) {
  if (name == "a0") return e.algebra.basis(0);
  if (name == "a1") return e.algebra.basis(1);
  const auto [va, vb] = eigvecs(e);
  if (name == "v_a") return va;
  if (name == "v_b") return vb;
  throw Error(ErrorKind::BadParameter, "unknown generator " + name);
}

inline CatalogEntry expected_quotient(const CatalogEntry& e, QuotientShape s) {
  switch (s) {
    case QuotientShape::TwoBAlpha: return alg_2B(*e.alpha);
    case QuotientShape::TwoBBeta: return alg_2B(*e.beta);
    case QuotientShape::OneA: return alg_1A();
  }
  return alg_1A();
}

/// Ideal closure and quotient check for a list of generators in an entry.
inline IdealCheck check_ideal(const CatalogEntry& e, const std::vector<std::string>& gens, QuotientShape shape) {
  IdealCheck c;
  c.constructed = true;
  std::vector<Vect<Scalar>> vs;
  for (const auto& g : gens) vs.push_back(named_vector(e, g));
  const auto span = Subspace<Scalar>::span(e.algebra.dim(), vs);
  const auto closure = ideal_closure(e.algebra, vs);
  c.closure_dim = closure.dim();
  c.closed = closure == span;
  c.proper = closure.dim() > 0 && closure.dim() < e.algebra.dim();
  if (!c.closed) {
    c.detail = "closure has dimension " + std::to_string(closure.dim()) + ", generators span " +
               std::to_string(span.dim());
    return c;
  }
  if (!c.proper) {
    c.detail = "ideal is not proper and nontrivial";
    return c;
  }
  const auto q = quotient(e.algebra, closure);
  const auto target = expected_quotient(e, shape);
  // An axis inside the ideal maps to zero and carries no marking.
  std::vector<Vect<Scalar>> from;
  std::vector<Vect<Scalar>> to;
  for (std::size_t i = 0; i < 2; ++i) {
    const auto image = q.projection(e.axes[i]);
    if (is_zero(image)) continue;
    from.push_back(image);
    to.push_back(target.axes[i]);
  }
  const auto iso = marked_iso(q.algebra, from, target.algebra, to);
  c.quotient_matches = iso.has_value();
  if (!c.quotient_matches) c.detail = "quotient is not marked-isomorphic to " + target.name;
  return c;
}

/// Checks a row symbolically and at `samples` random admissible points of its
/// free parameters.
inline std::vector<IdealCheck> verify_ideal_row(const IdealRow& row, std::mt19937_64& rng, int samples = 3) {
  std::vector<IdealCheck> out;
  const auto run = [&](const ParamAssignment& at, const std::string& label) {
    IdealCheck c;
    try {
      const CatalogEntry e = row.build(at);
      c = check_ideal(e, row.gens, row.quotient);
    } catch (const Error& err) {
      c.detail = err.what();
    }
    c.ideal = row.ideal;
    c.condition = row.condition;
    c.instance = label;
    out.push_back(c);
    return c;
  };
  const IdealCheck symbolic = run({}, row.free.empty() ? "fixed" : "symbolic");
  if (row.free.empty()) return out;
  // Avoid the preconditions and the denominators of the eigenvectors.
  Certificate avoid;
  try {
    avoid = row.build({}).preconditions;
  } catch (const Error&) {
  }
  std::uniform_int_distribution<long> num(-12, 12);
  std::uniform_int_distribution<long> den(1, 7);
  int done = 0;
  for (int tries = 0; done < samples && tries < 200; ++tries) {
    ParamAssignment at;
    std::string label;
    for (const auto& p : row.free) {
      Rational r = Rational(num(rng)) / den(rng);
      r.canonicalize();
      at[p] = r;
      label += (label.empty() ? "" : ", ") + p + " = " + to_string(r);
    }
    if (std::any_of(avoid.begin(), avoid.end(), [&](const Poly& p) { return p.eval(at) == 0; })) continue;
    try {
      (void)row.build(at);
    } catch (const Error& err) {
      // Inadmissible points are skipped unless the row fails to construct at
      // every point, in which case the failure is what gets reported.
      if (symbolic.constructed || err.kind() != ErrorKind::BadParameter) continue;
    }
    run(at, label);
    ++done;
  }
  return out;
}

/// Cases of the generic-Jordan classification with the algebra realizing
/// each, checked under the generic-Jordan law.
struct JordanCase {
  std::string name;
  CatalogEntry entry;
  FusionLaw law;
};

inline std::vector<JordanCase> jordan_cases() {
  const Scalar a = Scalar::param("a");
  const Scalar b = Scalar::param("b");
  const Scalar x = Scalar::param("x");
  const Scalar half(Rational(1, 2));
  std::vector<JordanCase> out;
  const auto add3 = [&](const std::string& n, const Scalar& al, const Scalar& be, const Scalar& xx) {
    out.push_back({n, alg_3dim_A(al, be, xx), laws::jordan_generic(al, be)});
  };
  add3("(i)(a) a = 0, b = 1/2, x free", Scalar(0), half, x);
  add3("(i)(b) a = 0, x = b/2", Scalar(0), b, b / Scalar(2));
  add3("(i)(c) b = 1/2, x = 1", a, half, Scalar(1));
  add3("(i)(d) b = -1, x = -1/2", a, Scalar(-1), Scalar(Rational(-1, 2)));
  add3("(i)(e) b = 2 - 3a, x = 1", a, Scalar(2) - Scalar(3) * a, Scalar(1));
  for (const auto& al : {Scalar(0), Scalar(Rational(-1, 2))}) {
    out.push_back({"(ii) 2B(a), a = " + al.to_string(), alg_2B(al), laws::jordan_generic(al, b)});
  }
  for (const auto& be : {Scalar(-1), half}) {
    out.push_back({"(iii) 2B(b), b = " + be.to_string(), alg_2B(be), laws::jordan_generic(a, be)});
  }
  return out;
}

/// A parameter choice off every listed case.
inline JordanCase jordan_off_case() {
  const Scalar al(Rational(1, 4));
  const Scalar be(Rational(1, 3));
  return {"off-case a = 1/4, b = 1/3, x = (a + b)/(2(1 - a))", alg_3dim_A(al, be, x_branch(al, be)),
          laws::jordan_generic(al, be)};
}

/// Products stated in the summary table for the two three-dimensional rows
/// of law (a), as (a0(a0a1), (a0a1)(a0a1)) coordinates in a0, a1, a0a1.
struct TableRow {
  std::string name;
  CatalogEntry entry;
  Vect<Scalar> a0m;
  Vect<Scalar> mm;
};

inline std::vector<TableRow> table_rows() {
  const Scalar a = Scalar::param("a");
  const Scalar b = Scalar::param("b");
  const Scalar x = Scalar::param("x");
  const Scalar h(Rational(1, 2));
  const Scalar qt(Rational(1, 4));
  const Scalar one(1);
  std::vector<TableRow> out;
  {
    const Scalar c = h * (one - Scalar(3) * a - b) * (a + b);
    out.push_back({"row 2", alg_3dim_A(a, b, x_branch(a, b)),
                   {h * (one - b) * (a + b), -(a * b), a + b},
                   {c * b, c * b, -c}});
  }
  {
    const Scalar k = qt * ((Scalar(2) * a - 1) * (a - 1) * x - (Scalar(2) * a + 1) * a);
    const Scalar l = -h * ((Scalar(2) * a + 1) * (a - 1) * x + (Scalar(2) * a + 3) * a);
    out.push_back({"row 3", alg_3dim_A(a, h, x),
                   {h * (one - a) * x, -h * a, h * (Scalar(2) * a + 1)},
                   {k, k, l}});
  }
  return out;
}

}  // namespace axial
