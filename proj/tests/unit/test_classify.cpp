#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "gate.hpp"
#include "locnil/classify.hpp"
#include "locnil/construct.hpp"
#include "locnil/oracle.hpp"
#include "oracles.hpp"

using namespace locnil;
namespace lt = locnil::testing;

TEST(Classify, CountsAgreeWithSubgroupLattice) {
  for (const char* spec : {"gf:2", "gf:3", "gf:5", "gf:2^2"}) {
    auto f = make_field(spec);
    const Classification c = classify(2, *f);
    const auto lattice = exhaustive_classification(2, *f);
    EXPECT_EQ(c.reps.size(), lattice.size()) << spec;
    EXPECT_EQ(c.count.total.value, lattice.size());
    for (const auto& sc : lattice) {
      bool matched = false;
      for (const auto& r : c.reps) {
        if (r.verified.order.value != sc.order) continue;
        ElementSet es(false);
        for (const auto& m : sc.elements) es.insert(m);
        const MatGroup h = MatGroup::from_elements(*f, 2, es, false);
        const MatGroup g = MatGroup::from_elements(*f, 2, r.group.elements(), false);
        matched = matched || conjugator_search(g, h).has_value();
      }
      EXPECT_TRUE(matched) << spec << " lattice class of order " << sc.order;
    }
  }
}

TEST(Classify, KnownFiniteFields) {
  struct Expect {
    const char* field;
    unsigned q;
    std::vector<std::uint64_t> orders;
  };
  const Expect cases[] = {
      {"gf:3", 2, {16}}, {"gf:5", 2, {32, 24}}, {"gf:7", 2, {96}}, {"gf:3^2", 2, {128, 80}},
      {"gf:11", 2, {80, 120}}, {"gf:2", 2, {3}},
  };
  for (const auto& e : cases) {
    auto f = make_field(e.field);
    const Classification c = classify(e.q, *f);
    std::vector<std::uint64_t> got;
    for (const auto& r : c.reps) got.push_back(r.verified.order.value);
    EXPECT_EQ(got, e.orders) << e.field;
    for (const auto& r : c.reps) {
      EXPECT_TRUE(r.verified.irreducible.value_or(false));
      EXPECT_TRUE(r.verified.nilpotent.value_or(false));
      EXPECT_TRUE(r.verified.maximal.value_or(false)) << e.field << " " << tag_name(r.tag);
      if (r.tag == ClassTag::AbelianSinger) EXPECT_EQ(r.verified.maximal_abelian, true);
    }
  }
}

TEST(Classify, HClassFormulaMatchesMeasurement) {
  for (const char* spec : {"gf:5", "gf:13", "gf:17", "gf:3^2", "gf:7"}) {
    auto f = make_field(spec);
    for (unsigned q : {2u, 3u}) {
      if (!has_order_q_element(*f, q)) continue;
      const MatGroup h = make_H_alpha(q, *f, f->one()).group;
      if (h.order().value > 20000) continue;
      const auto measured = lower_central_series(h).nilpotency_class;
      // 1 + (q - 1) log_q |Syl_q(F^x)|
      const std::uint64_t syl = prime_part(f->unit_order(), q);
      const unsigned expect = 1 + (q - 1) * static_cast<unsigned>(std::lround(std::log(double(syl)) / std::log(double(q))));
      EXPECT_EQ(h_class_formula(q, *f), expect) << spec << " q=" << q;
      EXPECT_EQ(measured, expect) << spec << " q=" << q;
    }
  }
}

TEST(Classify, GClassReadingsOverGF7) {
  const auto r = g_class_formula(*make_field("gf:7"));
  EXPECT_EQ(r.product_order, 48u);
  EXPECT_EQ(r.sylow_of_product_order, 16u);
  EXPECT_EQ(r.sylow_reading, "4");
}

TEST(Conjugacy, DiagonalCriterionMatchesBruteForce) {
  auto f = make_field("gf:5");
  const Mat I = make_I_alpha(2, f->one());
  for (std::uint64_t a1 = 1; a1 < 5; ++a1) {
    for (std::uint64_t a2 = 1; a2 < 5; a2 += 2) {
      for (std::uint64_t b1 = 1; b1 < 5; ++b1) {
        for (std::uint64_t b2 = 1; b2 < 5; ++b2) {
          const Mat a = Mat::diag({FieldElem(*f, a1), FieldElem(*f, a2)});
          const Mat b = Mat::diag({FieldElem(*f, b1), FieldElem(*f, b2)});
          const DiagConjugacy c = ia_conjugate(a, b);
          EXPECT_EQ(c.conjugate, lt::brute_conjugate_elements(I * a, I * b));
          if (c.conjugator) EXPECT_EQ(conjugate(*c.conjugator, I * a), I * b);
        }
      }
    }
  }
}

TEST(Conjugacy, MonomialCriterionMatchesBruteForce) {
  for (const char* spec : {"gf:5", "gf:7"}) {
    auto f = make_field(spec);
    for (std::uint64_t x = 1; x < f->size(); ++x) {
      for (std::uint64_t y = 1; y < f->size(); ++y) {
        const FieldElem a1(*f, x), a2(*f, y);
        const auto g1 = make_H_alpha(2, *f, a1).group.elements().elements();
        const auto g2 = make_H_alpha(2, *f, a2).group.elements().elements();
        EXPECT_EQ(monomial_conjugate(2, a1, a2), lt::brute_conjugator(g1, g2).has_value());
      }
    }
  }
}

TEST(Conjugacy, RationalMonomialClasses) {
  auto q = make_field("q");
  lt::Rng rng(51);
  std::uniform_int_distribution<long> d(1, 1000);
  for (long a : {2L, 3L, 5L, 6L, 7L, -1L, -3L}) {
    for (int i = 0; i < 30; ++i) {
      const FieldElem t = q->from_rational(Rational(d(rng), d(rng)));
      EXPECT_TRUE(monomial_conjugate(2, q->from_int(a), q->from_int(a) * t * t));
    }
  }
  EXPECT_FALSE(monomial_conjugate(2, q->from_int(2), q->from_int(3)));
  // -1 and alpha S coincide for q = 2 over Q
  EXPECT_TRUE(monomial_conjugate(2, q->from_int(3), q->from_int(-3)));
}

TEST(Conjugacy, DeltaCoefficientsRoundTrip) {
  lt::Rng rng(52);
  for (const char* spec : {"gf:7", "gf:13", "q"}) {
    auto f = make_field(spec);
    const Mat I = make_I_alpha(3, f->from_int(2));
    for (int i = 0; i < 30; ++i) {
      std::vector<FieldElem> b;
      for (int k = 0; k < 3; ++k) b.push_back(f->is_finite() ? lt::random_elem(*f, rng) : f->from_int(static_cast<long long>(rng() % 19) - 9));
      EXPECT_EQ(delta_coefficients(delta_element(I, b)), b);
    }
  }
}

TEST(Gate, SmallFieldsHaveNoDisagreements) {
  lt::GateSizes sizes;
  sizes.diagonal_pairs = 100;
  sizes.monomial_pairs = 40;
  sizes.delta_pairs = 60;
  sizes.primitivity_samples = 40;
  sizes.primitive_pairs = 15;
  std::uint64_t seed = 90;
  for (auto [q, spec] : {std::pair{2u, "gf:3"}, {2u, "gf:7"}, {2u, "gf:3^2"}, {2u, "gf:19"}, {3u, "gf:7"}, {3u, "gf:2^2"}}) {
    auto f = make_field(spec);
    for (const auto& t : lt::run_gate(q, *f, seed++, sizes)) {
      EXPECT_EQ(t.disagreements, 0u) << spec << " q=" << q << " " << t.criterion << ": " << t.first_disagreement;
    }
  }
}

TEST(Rationals, StreamsAreInfiniteAndSeparated) {
  auto q = make_field("q");
  ClassifyOptions o;
  o.limit = 10;
  const Classification c = classify(2, *q, o);
  EXPECT_TRUE(count_classes(2, *q).total.infinite);
  std::vector<FieldElem> hs, gs;
  std::size_t singer = 0;
  for (const auto& r : c.reps) {
    if (r.tag == ClassTag::MonomialH) hs.push_back(*r.alpha);
    if (r.tag == ClassTag::AbelianSinger) ++singer;
    EXPECT_TRUE(r.verified.irreducible.value_or(false));
    EXPECT_TRUE(r.verified.nilpotent.value_or(false));
  }
  ASSERT_EQ(hs.size(), 10u);
  EXPECT_EQ(hs[0].to_string(), "2");
  EXPECT_EQ(hs[1].to_string(), "3");
  EXPECT_EQ(hs[2].to_string(), "5");
  EXPECT_EQ(singer, 10u);
  for (std::size_t i = 0; i < hs.size(); ++i) {
    for (std::size_t j = i + 1; j < hs.size(); ++j) EXPECT_FALSE(monomial_conjugate(2, hs[i], hs[j]));
  }
}

TEST(Rationals, OddDegreeIsAbelianOnly) {
  auto q = make_field("q");
  ClassifyOptions o;
  o.limit = 5;
  const Classification c = classify(3, *q, o);
  ASSERT_FALSE(c.reps.empty());
  for (const auto& r : c.reps) EXPECT_EQ(r.tag, ClassTag::AbelianSinger);
}
