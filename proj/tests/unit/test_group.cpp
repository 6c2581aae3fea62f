#include <gtest/gtest.h>

#include <algorithm>

#include "locnil/construct.hpp"
#include "locnil/group.hpp"
#include "oracles.hpp"

using namespace locnil;
namespace lt = locnil::testing;

namespace {

std::vector<Mat> random_gens(const Field& f, unsigned n, unsigned k, lt::Rng& rng) {
  std::vector<Mat> g;
  for (unsigned i = 0; i < k; ++i) g.push_back(lt::random_invertible(f, n, rng));
  return g;
}

// Subgroups of GL(2,p) that are small enough for the naive closure.
std::vector<std::vector<Mat>> small_subgroups(const Field& f, lt::Rng& rng, int count) {
  std::vector<std::vector<Mat>> out;
  while (static_cast<int>(out.size()) < count) {
    auto gens = random_gens(f, 2, 1 + rng() % 2, rng);
    MatGroup g(f, 2, gens, false);
    if (g.order().value <= 200) out.push_back(gens);
  }
  return out;
}

}  // namespace

TEST(Closure, MatchesNaiveClosure) {
  lt::Rng rng(21);
  for (const char* spec : {"gf:2", "gf:3", "gf:5", "gf:2^2"}) {
    auto f = make_field(spec);
    for (const auto& gens : small_subgroups(*f, rng, 15)) {
      MatGroup g(*f, 2, gens, false);
      EXPECT_TRUE(lt::same_set(g.elements().elements(), lt::naive_closure(gens)));
    }
  }
}

TEST(Closure, InvariantUnderGeneratorShuffles) {
  lt::Rng rng(22);
  for (const char* spec : {"gf:3", "gf:5", "gf:7"}) {
    auto f = make_field(spec);
    for (int i = 0; i < 20; ++i) {
      auto gens = random_gens(*f, 2, 3, rng);
      const MatGroup g(*f, 2, gens, false);
      std::shuffle(gens.begin(), gens.end(), rng);
      gens.push_back(gens.front() * gens.back());
      const MatGroup h(*f, 2, gens, false);
      EXPECT_EQ(g.order(), h.order());
      EXPECT_TRUE(lt::same_set(g.elements().elements(), h.elements().elements()));
    }
  }
}

TEST(Closure, GeneralLinearOrders) {
  auto f3 = make_field("gf:3");
  const MatGroup gl23(*f3, 2, {Mat::parse(*f3, "1,1;0,1"), Mat::parse(*f3, "0,1;1,0"), Mat::parse(*f3, "2,0;0,1")}, false);
  EXPECT_EQ(gl23.order().value, 48u);
  EXPECT_EQ(gl23.projective_order(), 24u);
  auto f5 = make_field("gf:5");
  const MatGroup scal(*f5, 2, {Mat::parse(*f5, "1,1;0,1")}, true);
  EXPECT_EQ(scal.order().value, 20u);
  EXPECT_EQ(scal.projective_order(), 5u);
}

TEST(Closure, ProjectiveSizeDividesActualSize) {
  lt::Rng rng(23);
  auto f = make_field("gf:7");
  for (int i = 0; i < 20; ++i) {
    const MatGroup g(*f, 2, random_gens(*f, 2, 1, rng), true);
    EXPECT_EQ(g.order().value % g.projective_order(), 0u);
    EXPECT_EQ(g.order().value / g.projective_order(), f->unit_order());
  }
}

TEST(Nilpotence, LowerAndUpperSeriesAgreeWithNaiveClass) {
  lt::Rng rng(24);
  std::size_t nilpotent_seen = 0;
  for (const char* spec : {"gf:2", "gf:3", "gf:5", "gf:7"}) {
    auto f = make_field(spec);
    for (const auto& gens : small_subgroups(*f, rng, 25)) {
      const MatGroup g(*f, 2, gens, false);
      const auto naive = lt::naive_nilpotency_class(g.elements().elements());
      const auto lcs = lower_central_series(g);
      EXPECT_EQ(lcs.nilpotency_class, naive);
      EXPECT_EQ(upper_central_class(g), naive);
      EXPECT_EQ(finite_nilpotence(g.elements()).nilpotent, naive.has_value());
      nilpotent_seen += naive.has_value();
    }
  }
  EXPECT_GT(nilpotent_seen, 10u);
}

TEST(Nilpotence, ClassifiedGroupsHaveMatchingSeries) {
  for (const char* spec : {"gf:3", "gf:5", "gf:7", "gf:3^2"}) {
    auto f = make_field(spec);
    const MatGroup h = make_H_alpha(2, *f, f->one()).group;
    EXPECT_EQ(lower_central_series(h).nilpotency_class, upper_central_class(h)) << spec;
    EXPECT_TRUE(finite_nilpotence(h.elements()).nilpotent);
  }
}

TEST(Nilpotence, NonNilpotentWitnessDoesNotCommute) {
  auto f = make_field("gf:3");
  const MatGroup g(*f, 2, {Mat::parse(*f, "1,1;0,1"), Mat::parse(*f, "0,1;1,0")}, false);
  const auto v = finite_nilpotence(g.elements());
  ASSERT_FALSE(v.nilpotent);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_NE(v.witness->first * v.witness->second, v.witness->second * v.witness->first);
}

TEST(Elements, OrdersAndPrimeParts) {
  lt::Rng rng(25);
  for (const char* spec : {"gf:5", "gf:7", "gf:2^3"}) {
    auto f = make_field(spec);
    for (int i = 0; i < 50; ++i) {
      const Mat m = lt::random_invertible(*f, 2, rng);
      const std::uint64_t o = element_order(m);
      EXPECT_TRUE(m.pow(static_cast<long long>(o)).is_identity());
      Mat prod = Mat::identity(*f, 2);
      for (const auto& part : prime_parts(m, false)) {
        EXPECT_EQ(prime_part(element_order(part.part), part.prime), element_order(part.part));
        EXPECT_EQ(part.part * m, m * part.part);
        prod = prod * part.part;
      }
      EXPECT_EQ(prod, m);
    }
  }
}

TEST(Jordan, DecompositionOverGL25) {
  auto f = make_field("gf:5");
  for (const auto& g : lt::all_invertible(*f, 2)) {
    const JordanPair j = jordan_decompose(g);
    EXPECT_EQ(j.g_d * j.g_u, g);
    EXPECT_EQ(j.g_d * j.g_u, j.g_u * j.g_d);
    EXPECT_TRUE(is_unipotent(j.g_u));
    EXPECT_NE(element_order(j.g_d) % 5, 0u);
  }
}

TEST(Subgroups, CenterAndDerivedOfH1) {
  auto f = make_field("gf:5");
  const MatGroup h = make_H_alpha(2, *f, f->one()).group;
  const MatGroup z = center(h);
  for (const auto& x : z.elements()) {
    for (const auto& y : h.generators()) EXPECT_EQ(x * y, y * x);
  }
  const MatGroup d = derived_subgroup(h);
  EXPECT_EQ(h.order().value % d.order().value, 0u);
  EXPECT_LT(d.order().value, h.order().value);
}
