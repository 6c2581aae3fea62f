#include <gtest/gtest.h>

#include "locnil/error.hpp"
#include "locnil/linalg.hpp"
#include "locnil/matrix.hpp"
#include "oracles.hpp"

using namespace locnil;
namespace lt = locnil::testing;

namespace {

struct Case {
  const char* field;
  unsigned n;
};

const Case kCases[] = {{"gf:2", 3}, {"gf:3", 2}, {"gf:7", 3}, {"gf:13", 4}, {"gf:2^3", 3},
                       {"gf:3^2", 2}, {"gf:5^2", 3}, {"q", 2}, {"q", 3}};

Mat random_for(const Field& f, unsigned n, lt::Rng& rng) {
  return f.is_finite() ? lt::random_mat(f, n, rng) : lt::random_rational_mat(f, n, rng);
}

}  // namespace

TEST(Mat, ProductMatchesSchoolbook) {
  lt::Rng rng(1);
  for (const auto& c : kCases) {
    auto f = make_field(c.field);
    for (int i = 0; i < 100; ++i) {
      const Mat a = random_for(*f, c.n, rng), b = random_for(*f, c.n, rng);
      EXPECT_EQ(a * b, lt::naive_mul(a, b));
    }
  }
}

TEST(Mat, DeterminantMatchesLeibnizAndIsMultiplicative) {
  lt::Rng rng(2);
  for (const auto& c : kCases) {
    auto f = make_field(c.field);
    for (int i = 0; i < 100; ++i) {
      const Mat a = random_for(*f, c.n, rng), b = random_for(*f, c.n, rng);
      EXPECT_EQ(a.det(), lt::leibniz_det(a));
      EXPECT_EQ((a * b).det(), a.det() * b.det());
    }
  }
}

TEST(Mat, InverseAndPowers) {
  lt::Rng rng(3);
  for (const auto& c : kCases) {
    auto f = make_field(c.field);
    for (int i = 0; i < 50; ++i) {
      const Mat a = lt::random_invertible(*f, c.n, rng);
      EXPECT_TRUE((a * a.inverse()).is_identity());
      EXPECT_EQ(a.pow(5) * a.pow(-2), a.pow(3));
      EXPECT_TRUE(a.pow(0).is_identity());
    }
  }
  auto f = make_field("gf:5");
  EXPECT_THROW(Mat(*f, 2).inverse(), SingularMatrix);
}

TEST(Mat, CharpolyInvariantUnderConjugation) {
  lt::Rng rng(4);
  for (const auto& c : kCases) {
    auto f = make_field(c.field);
    for (int i = 0; i < 50; ++i) {
      const Mat a = random_for(*f, c.n, rng);
      const Mat t = lt::random_invertible(*f, c.n, rng);
      EXPECT_EQ(conjugate(t, a).charpoly(), a.charpoly());
      EXPECT_EQ(a.charpoly().degree(), static_cast<int>(c.n));
      // constant term is (-1)^n det, next-to-top is -trace
      const FieldElem sign = c.n % 2 ? -f->one() : f->one();
      EXPECT_EQ(a.charpoly().coeff(0), sign * a.det());
      EXPECT_EQ(a.charpoly().coeff(c.n - 1), -a.trace());
    }
  }
}

TEST(Mat, CayleyHamilton) {
  lt::Rng rng(5);
  for (const auto& c : kCases) {
    auto f = make_field(c.field);
    for (int i = 0; i < 50; ++i) {
      const Mat a = random_for(*f, c.n, rng);
      EXPECT_TRUE(evaluate(a.charpoly(), a).is_zero());
    }
  }
}

TEST(Mat, ProjectiveCanonicalIsScaleInvariant) {
  lt::Rng rng(6);
  for (const auto& c : kCases) {
    auto f = make_field(c.field);
    for (int i = 0; i < 50; ++i) {
      const Mat a = lt::random_invertible(*f, c.n, rng);
      const FieldElem s = f->is_finite() ? lt::random_unit(*f, rng) : f->from_rational(Rational(-7, 3));
      EXPECT_EQ(a.scaled(s).projective_canonical(), a.projective_canonical());
      EXPECT_EQ(a.scaled(s).projective_canonical().key(), a.projective_canonical().key());
    }
  }
}

TEST(Mat, ParsePrintRoundTrip) {
  lt::Rng rng(7);
  for (const auto& c : kCases) {
    auto f = make_field(c.field);
    for (int i = 0; i < 30; ++i) {
      const Mat a = random_for(*f, c.n, rng);
      EXPECT_EQ(Mat::parse(*f, a.to_string()), a);
    }
  }
  auto f = make_field("gf:3");
  EXPECT_THROW(Mat::parse(*f, "1,2;3"), Error);
  EXPECT_EQ(Mat::parse(*f, "0,1;1,0").to_string(), "0,1;1,0");
}

TEST(Linalg, NullspaceVectorsAreKilled) {
  lt::Rng rng(8);
  for (const auto& c : kCases) {
    auto f = make_field(c.field);
    for (int i = 0; i < 30; ++i) {
      Mat a = random_for(*f, c.n, rng);
      // make it singular by copying a row
      for (unsigned j = 0; j < c.n; ++j) a.set(c.n - 1, j, a.at(0, j));
      std::vector<Vec> rows;
      for (unsigned r = 0; r < c.n; ++r) {
        Vec v;
        for (unsigned j = 0; j < c.n; ++j) v.push_back(a.at(r, j));
        rows.push_back(v);
      }
      const auto ker = nullspace(*f, rows, c.n);
      EXPECT_GE(ker.size(), 1u);
      for (const auto& v : ker) EXPECT_TRUE(is_zero(mul_vec(a, v)));
    }
  }
}

TEST(Linalg, SpinReachesTheWholeSpaceForIrreducibleGenerators) {
  auto f = make_field("gf:5");
  const Mat c = Mat::parse(*f, "0,3;1,0");  // companion of X^2 - 3, irreducible over GF(5)
  EXPECT_EQ(spin({c}, {unit_vec(*f, 2, 0)}).dim(), 2u);
  const Mat d = Mat::diag({f->from_int(2), f->from_int(3)});
  EXPECT_EQ(spin({d}, {unit_vec(*f, 2, 0)}).dim(), 1u);
}
