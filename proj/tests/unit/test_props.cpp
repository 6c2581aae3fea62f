#include <gtest/gtest.h>

#include <set>

#include "locnil/classify.hpp"
#include "locnil/construct.hpp"
#include "locnil/error.hpp"
#include "locnil/props.hpp"
#include "oracles.hpp"

using namespace locnil;
namespace lt = locnil::testing;

namespace {

std::vector<MatGroup> random_groups(const Field& f, unsigned n, int count, lt::Rng& rng) {
  std::vector<MatGroup> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<Mat> gens{lt::random_invertible(f, n, rng)};
    if (rng() % 2) gens.push_back(lt::random_invertible(f, n, rng));
    MatGroup g(f, n, gens, false);
    if (g.order().value <= 5000) out.push_back(g);
  }
  return out;
}

}  // namespace

TEST(Irreducibility, MatchesInvariantSubspaceSearch) {
  lt::Rng rng(41);
  for (const char* spec : {"gf:2", "gf:3", "gf:5", "gf:7"}) {
    auto f = make_field(spec);
    for (unsigned n : {2u, 3u}) {
      if (n == 3 && f->size() > 3) continue;
      for (const auto& g : random_groups(*f, n, 25, rng)) {
        const auto r = irreducibility(g);
        EXPECT_EQ(r.irreducible, !lt::brute_reducible(g.generators())) << spec << " " << g.to_string();
      }
    }
  }
}

TEST(Irreducibility, BurnsideConsistency) {
  // absolutely irreducible groups span the matrix algebra, and such groups are irreducible
  lt::Rng rng(42);
  for (const char* spec : {"gf:3", "gf:5", "gf:2^2"}) {
    auto f = make_field(spec);
    for (const auto& g : random_groups(*f, 2, 30, rng)) {
      const unsigned d = enveloping_dim(g);
      EXPECT_LE(d, 4u);
      EXPECT_EQ(is_absolutely_irreducible(g), d == 4);
      if (d == 4) EXPECT_TRUE(is_irreducible(g));
    }
  }
}

TEST(Primitivity, MatchesBlockSearchAndDichotomy) {
  // in prime degree an irreducible group is either monomial or primitive
  lt::Rng rng(43);
  std::size_t primitive = 0, monomial = 0;
  for (const char* spec : {"gf:3", "gf:5", "gf:7"}) {
    auto f = make_field(spec);
    for (const auto& g : random_groups(*f, 2, 40, rng)) {
      if (!is_irreducible(g)) continue;
      const bool mono = lt::brute_monomial(g.generators());
      EXPECT_EQ(is_primitive(g), !mono) << g.to_string();
      (mono ? monomial : primitive) += 1;
    }
    for (const auto& r : classify(2, *f).reps) {
      EXPECT_EQ(r.verified.primitive.value_or(false), !lt::brute_monomial(r.group.generators()));
    }
  }
  EXPECT_GT(primitive, 0u);
  EXPECT_GT(monomial, 0u);
}

TEST(DetGroup, MatchesEnumeratedDeterminants) {
  for (const char* spec : {"gf:5", "gf:7", "gf:3^2", "gf:13"}) {
    auto f = make_field(spec);
    for (const auto& r : classify(2, *f).reps) {
      std::set<std::string> dets;
      for (const auto& m : r.group.elements()) dets.insert(m.det().to_string());
      const DetGroup d = det_group(r.group);
      EXPECT_EQ(d.order().value, dets.size()) << spec;
      for (std::uint64_t c = 1; c < f->size(); ++c) {
        const FieldElem x(*f, c);
        EXPECT_EQ(d.contains(x), dets.count(x.to_string()) == 1);
      }
    }
  }
}

TEST(DetGroup, CosetRepresentativesSeparateCosets) {
  auto f = make_field("gf:13");
  const MatGroup h = make_H_alpha(2, *f, f->one()).group;
  const DetGroup d = det_group(h);
  for (std::uint64_t a = 1; a < 13; ++a) {
    for (std::uint64_t b = 1; b < 13; ++b) {
      const FieldElem x(*f, a), y(*f, b);
      const bool same_coset = d.contains(x / y);
      EXPECT_EQ(d.coset_representative(x) == d.coset_representative(y), same_coset);
    }
  }
}

TEST(Split, ClassifiedGroupsSplit) {
  for (const char* spec : {"gf:3", "gf:5", "gf:7", "gf:3^2"}) {
    auto f = make_field(spec);
    for (const auto& r : classify(2, *f).reps) {
      const SplitReport s = splittable_check(r.group);
      EXPECT_TRUE(s.applicable);
      EXPECT_TRUE(s.passed()) << spec;
      EXPECT_EQ(s.unipotent_parts * s.semisimple_parts, s.order);
    }
  }
  // a unipotent group over GF(3): G_d trivial
  auto f = make_field("gf:3");
  const SplitReport u = splittable_check(MatGroup(*f, 2, {Mat::parse(*f, "1,1;0,1")}, false));
  EXPECT_TRUE(u.passed());
  EXPECT_EQ(u.unipotent_parts, 3u);
}

TEST(Konyukh, PrimitiveClassesSatisfyAllClauses) {
  for (const char* spec : {"gf:3", "gf:7", "gf:11", "gf:19"}) {
    auto f = make_field(spec);
    const MatGroup g = make_G_alpha_b(2, *f, f->from_int(-1), {f->one()}).group;
    const KonyukhSeries k = konyukh_check(g);
    EXPECT_TRUE(k.applicable) << spec << ": " << k.reason;
    EXPECT_TRUE(k.passed()) << spec;
    EXPECT_EQ(k.sigma_dim, 2u);
  }
}

TEST(Syl2Quotient, OrdersMatchEnumeration) {
  for (const char* spec : {"gf:3", "gf:7", "gf:11", "gf:19", "gf:23"}) {
    auto f = make_field(spec);
    const Syl2Structure s = syl2_quotient_structure(*f);
    const std::uint64_t p = f->size();
    EXPECT_EQ(s.syl2_case, "i");
    EXPECT_EQ(s.enumerated_order, prime_part((p * p - 1) / (p - 1), 2)) << spec;
    EXPECT_EQ(s.predicted_order, s.enumerated_order);
  }
  const Syl2Structure r = syl2_quotient_structure(*make_field("q"));
  EXPECT_EQ(r.syl2_case, "ii");
  EXPECT_EQ(r.predicted_order, 4u);
}

TEST(AbelianNormal, PrimitiveGroupsHaveOne) {
  for (const char* spec : {"gf:3", "gf:7", "gf:11"}) {
    auto f = make_field(spec);
    const MatGroup g = make_G_alpha_b(2, *f, f->from_int(-1), {f->one()}).group;
    const auto a = irreducible_abelian_normal_subgroup(g);
    ASSERT_TRUE(a.has_value()) << spec;
    EXPECT_TRUE(is_irreducible(*a));
    for (const auto& x : a->generators()) {
      for (const auto& y : a->generators()) EXPECT_EQ(x * y, y * x);
      for (const auto& h : g.generators()) EXPECT_TRUE(a->contains(h * x * h.inverse()));
    }
  }
}

TEST(Rationals, IrreducibilityAndPrimitivity) {
  auto q = make_field("q");
  const MatGroup h = make_H_alpha(2, *q, q->from_int(3)).group;
  EXPECT_TRUE(is_irreducible(h));
  EXPECT_FALSE(is_primitive(h));
  const MatGroup g = make_G_alpha_b(2, *q, q->from_int(-1), {q->from_int(2), q->one()}).group;
  EXPECT_TRUE(is_irreducible(g));
  EXPECT_TRUE(is_primitive(g));
  const MatGroup diag(*q, 2, {Mat::diag({q->from_int(2), q->from_int(3)})}, false);
  EXPECT_FALSE(is_irreducible(diag));
}
