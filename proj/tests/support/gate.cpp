#include "gate.hpp"

#include <random>

#include "locnil/classify.hpp"
#include "locnil/construct.hpp"
#include "locnil/oracle.hpp"
#include "locnil/props.hpp"

namespace locnil::testing {

namespace {

using Rng = std::mt19937_64;

FieldElem random_unit(const Field& f, Rng& rng) {
  return FieldElem(f, std::uniform_int_distribution<std::uint64_t>(1, f.size() - 1)(rng));
}

std::vector<FieldElem> random_coeffs(const Field& f, unsigned q, Rng& rng) {
  std::uniform_int_distribution<std::uint64_t> d(0, f.size() - 1);
  std::vector<FieldElem> v;
  for (unsigned i = 0; i < q; ++i) v.emplace_back(f, d(rng));
  return v;
}

std::vector<FieldElem> units(const Field& f) {
  std::vector<FieldElem> v;
  for (std::uint64_t c = 1; c < f.size(); ++c) v.emplace_back(f, c);
  return v;
}

void record(GateTally& t, bool criterion, bool oracle, const std::string& what) {
  ++t.checked;
  if (criterion != oracle) {
    if (t.disagreements++ == 0) t.first_disagreement = what;
  }
}

std::string join(const std::vector<FieldElem>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ",") + x.to_string();
  return s;
}

GateTally diagonal_gate(unsigned q, const Field& f, Rng& rng, std::size_t samples) {
  GateTally t{"diagonal I_alpha a ~ I_alpha b iff det a = det b"};
  const auto us = units(f);
  std::vector<std::vector<FieldElem>> all{{}};
  for (unsigned i = 0; i < q; ++i) {
    std::vector<std::vector<FieldElem>> next;
    for (const auto& v : all) {
      for (const auto& u : us) {
        next.push_back(v);
        next.back().push_back(u);
      }
    }
    all = std::move(next);
  }
  for (const FieldElem& alpha : {f.one(), f.primitive_root()}) {
    const Mat I = make_I_alpha(q, alpha);
    auto check = [&](const std::vector<FieldElem>& a, const std::vector<FieldElem>& b) {
      const Mat da = Mat::diag(a), db = Mat::diag(b);
      const DiagConjugacy c = ia_conjugate(da, db);
      const std::string what = "alpha " + alpha.to_string() + ", a " + join(a) + ", b " + join(b);
      if (c.conjugator && conjugate(*c.conjugator, I * da) != I * db) {
        record(t, true, false, what + " (returned conjugator is wrong)");
        return;
      }
      record(t, c.conjugate, element_conjugator(I * da, I * db).has_value(), what);
    };
    if (all.size() * all.size() <= 25000) {
      for (const auto& a : all) {
        for (const auto& b : all) check(a, b);
      }
      continue;
    }
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (std::size_t i = 0; i < samples; ++i) {
      const auto& a = all[pick(rng)];
      std::vector<FieldElem> b = all[pick(rng)];
      if (i % 2 == 0) {
        // same determinant as a
        FieldElem r = f.one();
        for (const auto& x : a) r = r * x;
        for (unsigned k = 0; k + 1 < q; ++k) r = r / b[k];
        b[q - 1] = r;
      }
      check(a, b);
    }
  }
  return t;
}

GateTally monomial_gate(unsigned q, const Field& f, Rng& rng, std::size_t samples) {
  GateTally t{"H_alpha1 ~ H_alpha2 iff <alpha1 S> = <alpha2 S>"};
  const auto us = units(f);
  std::vector<std::pair<FieldElem, FieldElem>> pairs;
  for (const auto& a : us) {
    for (const auto& b : us) pairs.emplace_back(a, b);
  }
  if (pairs.size() > samples) {
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(samples);
  }
  for (const auto& [a1, a2] : pairs) {
    const bool crit = monomial_conjugate(q, a1, a2);
    const bool oracle =
        conjugator_search(make_H_alpha(q, f, a1).group, make_H_alpha(q, f, a2).group).has_value();
    record(t, crit, oracle, "alpha " + a1.to_string() + " vs " + a2.to_string());
  }
  return t;
}

std::vector<FieldElem> primitive_alphas(unsigned q, const Field& f) {
  std::vector<FieldElem> out;
  for (const auto& a : units(f)) {
    if (binomial_irreducible(q, a)) out.push_back(a);
  }
  return out;
}

std::vector<FieldElem> random_delta_unit(const Mat& I, Rng& rng) {
  for (;;) {
    auto c = random_coeffs(I.field(), I.n(), rng);
    if (!delta_element(I, c).det().is_zero()) return c;
  }
}

GateTally delta_gate(unsigned q, const Field& f, Rng& rng, std::size_t samples) {
  GateTally t{"d b1 ~ d b2 iff det b1 = det b2"};
  const Mat d = make_d(q, f);
  for (const auto& alpha : primitive_alphas(q, f)) {
    const Mat I = make_I_alpha(q, alpha);
    for (std::size_t i = 0; i < samples; ++i) {
      const auto b1 = random_delta_unit(I, rng);
      std::vector<FieldElem> b2 = random_delta_unit(I, rng);
      if (i % 2 == 0) {
        // multiply by a norm-one element w = z^(|F|-1)
        const Mat w = delta_element(I, random_delta_unit(I, rng)).pow(static_cast<long long>(f.size() - 1));
        b2 = delta_coefficients(delta_element(I, b1) * w);
      }
      const bool crit = db_conjugate(q, alpha, b1, b2);
      const bool oracle = element_conjugator(d * delta_element(I, b1), d * delta_element(I, b2)).has_value();
      record(t, crit, oracle, "alpha " + alpha.to_string() + ", b1 " + join(b1) + ", b2 " + join(b2));
    }
  }
  return t;
}

GateTally primitivity_gate(unsigned q, const Field& f, Rng& rng, std::size_t samples) {
  GateTally t{"G(alpha, b) primitive iff the determinant criterion holds"};
  for (const auto& alpha : primitive_alphas(q, f)) {
    const Mat I = make_I_alpha(q, alpha);
    for (std::size_t i = 0; i < samples; ++i) {
      const auto b = random_delta_unit(I, rng);
      const bool crit = primitivity_criterion(q, alpha, b);
      const bool oracle = primitivity(make_G_alpha_b(q, f, alpha, b).group).primitive;
      record(t, crit, oracle, "alpha " + alpha.to_string() + ", b " + join(b));
    }
  }
  return t;
}

GateTally primitive_conjugacy_gate(unsigned q, const Field& f, Rng& rng, std::size_t samples) {
  GateTally t{"G(alpha, b1) ~ G(alpha, b2) by the determinant cosets"};
  for (const auto& alpha : primitive_alphas(q, f)) {
    const Mat I = make_I_alpha(q, alpha);
    std::vector<std::vector<FieldElem>> prim;
    for (std::size_t tries = 0; tries < 40 * samples && prim.size() < samples; ++tries) {
      auto b = random_delta_unit(I, rng);
      if (primitivity_criterion(q, alpha, b)) prim.push_back(std::move(b));
    }
    if (prim.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, prim.size() - 1);
    for (std::size_t i = 0; i < samples; ++i) {
      const auto& b1 = prim[pick(rng)];
      const auto& b2 = prim[pick(rng)];
      const PrimitiveConjugacy c = primitive_conjugate(q, alpha, b1, b2);
      if (c.decision == Decision::undecided) {
        ++t.undecided;
        continue;
      }
      const bool oracle =
          conjugator_search(make_G_alpha_b(q, f, alpha, b1).group, make_G_alpha_b(q, f, alpha, b2).group)
              .has_value();
      record(t, c.decision == Decision::conjugate, oracle,
             "alpha " + alpha.to_string() + ", b1 " + join(b1) + ", b2 " + join(b2));
    }
  }
  return t;
}

}  // namespace

std::vector<GateTally> run_gate(unsigned q, const Field& f, std::uint64_t seed, const GateSizes& sizes) {
  Rng rng(seed);
  std::vector<GateTally> out;
  out.push_back(diagonal_gate(q, f, rng, sizes.diagonal_pairs));
  if (!has_order_q_element(f, q)) return out;
  out.push_back(monomial_gate(q, f, rng, sizes.monomial_pairs));
  out.push_back(delta_gate(q, f, rng, sizes.delta_pairs));
  out.push_back(primitivity_gate(q, f, rng, sizes.primitivity_samples));
  out.push_back(primitive_conjugacy_gate(q, f, rng, sizes.primitive_pairs));
  return out;
}

}  // namespace locnil::testing
