#include <gtest/gtest.h>

#include <numeric>

#include "axial/fusion.hpp"
#include "support.hpp"

using namespace axial;
using namespace axial::testing;

namespace {

const Scalar one(1);

// Tables transcribed independently of the catalog module.
FusionLaw three_eval(std::vector<Scalar> aa, std::vector<Scalar> ab, std::vector<Scalar> bb) {
  return FusionLaw({one, A(), B()}, {{one, one, {one}},
                                     {one, A(), {A()}},
                                     {one, B(), {B()}},
                                     {A(), A(), aa},
                                     {A(), B(), ab},
                                     {B(), B(), bb}});
}

FusionLaw law_a() { return three_eval({one, A()}, {B()}, {one, A()}); }
FusionLaw law_c() { return three_eval({one}, {one}, {one}); }
FusionLaw law_d() { return three_eval({B()}, {one}, {A()}); }

FusionLaw two_eval(const Scalar& a, std::vector<Scalar> aa) {
  return FusionLaw({one, a}, {{one, one, {one}}, {one, a, {a}}, {a, a, aa}});
}

// |Hom(G, Z/n)| computed directly from the presentation by brute force over
// all label assignments in Z/n.
long count_homs(const FusionLaw& f, long n) {
  const std::size_t k = f.size();
  std::vector<long> img(k, 0);
  long count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t x = 0; x < k && ok; ++x) {
      for (std::size_t y = 0; y < k && ok; ++y) {
        for (auto z : f(x, y)) {
          if ((img[x] + img[y] - img[z]) % n != 0) ok = false;
        }
      }
    }
    count += ok;
    std::size_t i = 0;
    while (i < k && ++img[i] == n) img[i++] = 0;
    if (i == k) break;
  }
  return count;
}

long homs_from_invariants(const GradingGroup& g, long n) {
  long c = 1;
  for (auto d : g.divisors) c *= std::gcd(d, static_cast<std::int64_t>(n));
  for (std::size_t r = 0; r < g.free_rank; ++r) c *= n;
  return c;
}

FusionLaw random_law(Rng& rng, std::size_t n) {
  std::vector<Scalar> labels{one};
  for (std::size_t i = 1; i < n; ++i) labels.push_back(q(static_cast<long>(i) + 1));
  std::vector<std::tuple<Scalar, Scalar, std::vector<Scalar>>> entries;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      std::vector<Scalar> zs;
      if (x == 0) {
        zs.push_back(labels[y]);
      } else {
        for (std::size_t z = 0; z < n; ++z) {
          if (rng.integer(0, 2) == 0) zs.push_back(labels[z]);
        }
      }
      entries.emplace_back(labels[x], labels[y], zs);
    }
  }
  return FusionLaw(labels, entries);
}

FusionLaw relabel(const FusionLaw& f, const std::vector<std::size_t>& perm) {
  std::vector<Scalar> labels(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) labels[perm[i]] = f.label(i);
  std::vector<std::tuple<Scalar, Scalar, std::vector<Scalar>>> entries;
  for (std::size_t x = 0; x < f.size(); ++x) {
    for (std::size_t y = 0; y < f.size(); ++y) {
      entries.emplace_back(f.label(x), f.label(y), f.product(f.label(x), f.label(y)));
    }
  }
  return FusionLaw(labels, entries, false);
}

}  // namespace

TEST(LawChecks, ThreeEvalLawHasUnitOne) {
  const auto r = law_checks(law_a());
  EXPECT_TRUE(r.symmetric);
  EXPECT_EQ(r.units, std::vector<Scalar>{one});
  EXPECT_TRUE(r.one_is_unit);
}

TEST(LawChecks, BrokenUnit) {
  const FusionLaw f({one, A(), B()}, {{one, A(), {B()}}});
  const auto r = law_checks(f);
  EXPECT_FALSE(r.one_is_unit);
  EXPECT_FALSE(r.violations.empty());
}

TEST(LawChecks, Singleton) {
  const FusionLaw f({one}, {{one, one, {one}}});
  const auto r = law_checks(f);
  EXPECT_EQ(r.units, std::vector<Scalar>{one});
}

TEST(LawChecks, AsymmetricTableIsReported) {
  const FusionLaw f({one, A()}, {{A(), one, {A()}}}, false);
  EXPECT_FALSE(law_checks(f).symmetric);
}

TEST(LawChecks, DuplicateLabels) {
  try {
    (void)FusionLaw({one, A(), A()}, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DuplicateEigenvalue);
  }
}

TEST(Sublaw, Examples) {
  const Scalar m1(-1);
  EXPECT_TRUE(is_sublaw(two_eval(m1, {one}), two_eval(m1, {one, m1})).holds);
  const auto r = is_sublaw(law_a(), law_d());
  EXPECT_FALSE(r.holds);
  EXPECT_NE(r.witness.find("a * a"), std::string::npos);
  EXPECT_TRUE(is_sublaw(law_d(), law_d()).holds);
  EXPECT_FALSE(is_sublaw(law_a(), two_eval(A(), {one, A()})).holds);
}

TEST(Isomorphism, SwappedRolesOfLawA) {
  // beta * beta = {1, beta} and alpha * alpha = {1, beta}.
  const FusionLaw law_b = three_eval({one, B()}, {A()}, {one, B()});
  const auto xi = law_isomorphism(law_a(), law_b, true);
  ASSERT_TRUE(xi.has_value());
  EXPECT_EQ(*xi, (std::vector<std::size_t>{0, 2, 1}));
}

TEST(Isomorphism, IdentityAndNone) {
  const auto id = law_isomorphism(law_d(), law_d(), true);
  ASSERT_TRUE(id.has_value());
  EXPECT_EQ(*id, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_FALSE(law_isomorphism(law_a(), law_d(), false).has_value());
}

TEST(Grading, LawA) {
  const auto g = grading_group(law_a());
  EXPECT_TRUE(g.is_cyclic_of_order(2));
  EXPECT_EQ(g.label_map, (std::vector<std::vector<std::int64_t>>{{0}, {0}, {1}}));
  EXPECT_EQ(g.describe(), "C2; γ_b ↦ 1 (mod 2)");
}

TEST(Grading, LawC) {
  const auto g = grading_group(law_c());
  EXPECT_TRUE(g.is_cyclic_of_order(2));
  EXPECT_EQ(g.label_map, (std::vector<std::vector<std::int64_t>>{{0}, {1}, {1}}));
}

TEST(Grading, LawD) {
  const auto g = grading_group(law_d());
  EXPECT_TRUE(g.is_cyclic_of_order(3));
  EXPECT_EQ(g.describe(), "C3; γ_a ↦ 1, γ_b ↦ 2 (mod 3)");
}

TEST(Grading, TrivialAndFree) {
  EXPECT_TRUE(grading_group(FusionLaw({one}, {{one, one, {one}}})).trivial());
  const auto z = grading_group(two_eval(q(1, 2), {}));
  EXPECT_EQ(z.free_rank, 1U);
  EXPECT_TRUE(z.admits_quotient(2));
  EXPECT_EQ(z.describe(), "Z; γ_1/2 ↦ 1");
  EXPECT_TRUE(grading_group(two_eval(A(), {one, A()})).trivial());
}

TEST(Grading, UncertifiedWhenProductsAreEmpty) {
  const FusionLaw f({one, A(), B()}, {{one, one, {one}}, {one, A(), {A()}}, {one, B(), {B()}}});
  EXPECT_FALSE(grading_group(f).abelian_certified);
  EXPECT_TRUE(grading_group(law_a()).abelian_certified);
}

TEST(Characters, Counts) {
  const auto c2 = grading_group(law_a());
  const auto c3 = grading_group(law_d());
  EXPECT_EQ(characters(c2, FieldMode::Rational).size(), 2U);
  EXPECT_EQ(characters(c3, FieldMode::Rational).size(), 1U);
  EXPECT_EQ(characters(c3, FieldMode::Omega).size(), 3U);
  EXPECT_THROW(characters(grading_group(two_eval(q(1, 2), {})), FieldMode::Rational), Error);
  GradingGroup c4;
  c4.divisors = {4};
  try {
    characters(c4, FieldMode::Omega);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedDivisor);
  }
}

TEST(Characters, ValuesRespectTheLaw) {
  for (const auto& law : {law_a(), law_c(), law_d()}) {
    const auto g = grading_group(law);
    for (const auto& chi : characters(g, FieldMode::Omega)) {
      for (std::size_t x = 0; x < law.size(); ++x) {
        for (std::size_t y = 0; y < law.size(); ++y) {
          for (auto z : law(x, y)) {
            EXPECT_EQ(character_value<OmegaScalar>(g, chi, x) * character_value<OmegaScalar>(g, chi, y),
                      character_value<OmegaScalar>(g, chi, z));
          }
        }
      }
    }
  }
  const auto g = grading_group(law_d());
  const Character w{{1}};
  EXPECT_EQ(character_value<OmegaScalar>(g, w, 1), OmegaScalar::omega());
  EXPECT_THROW(character_value<Scalar>(g, w, 1), Error);
  EXPECT_EQ(character_value<Scalar>(grading_group(law_a()), Character{{1}}, 2), Scalar(-1));
}

TEST(FusionProperties, HomCountsMatchSmithInvariants) {
  Rng rng(53);
  for (int t = 0; t < 60; ++t) {
    const auto law = random_law(rng, static_cast<std::size_t>(rng.integer(2, 4)));
    const auto g = grading_group(law);
    for (long n : {2L, 3L, 4L, 6L}) EXPECT_EQ(count_homs(law, n), homs_from_invariants(g, n)) << law.to_string();
  }
}

TEST(FusionProperties, SublawReflexiveAndTransitive) {
  Rng rng(59);
  std::vector<FusionLaw> pool;
  for (int t = 0; t < 25; ++t) pool.push_back(random_law(rng, 3));
  for (const auto& f : pool) {
    EXPECT_TRUE(is_sublaw(f, f).holds);
    for (const auto& g : pool) {
      if (!is_sublaw(f, g).holds) continue;
      for (const auto& h : pool) {
        if (is_sublaw(g, h).holds) {
          EXPECT_TRUE(is_sublaw(f, h).holds);
        }
      }
    }
  }
}

TEST(FusionProperties, IsomorphicLawsHaveIsomorphicGradings) {
  Rng rng(61);
  for (int t = 0; t < 30; ++t) {
    const auto law = random_law(rng, 4);
    std::vector<std::size_t> perm{0, 1, 2, 3};
    std::shuffle(perm.begin() + 1, perm.end(), rng.engine());
    const auto other = relabel(law, perm);
    const auto xi = law_isomorphism(law, other, false);
    ASSERT_TRUE(xi.has_value());
    const auto g = grading_group(law);
    const auto h = grading_group(other);
    EXPECT_EQ(g.divisors, h.divisors);
    EXPECT_EQ(g.free_rank, h.free_rank);
  }
}

TEST(FusionProperties, GradingIsDeterministic) {
  const auto a = grading_group(law_d());
  const auto b = grading_group(law_d());
  EXPECT_EQ(a.describe(), b.describe());
  EXPECT_EQ(a.label_map, b.label_map);
}
