#include "locnil/construct.hpp"

#include <algorithm>
#include <set>

namespace locnil {

namespace {

void check_degree(unsigned q) {
  if (q < 2 || q > 13 || !is_prime_u64(q)) throw DomainError("q must be a prime between 2 and 13");
}

void check_order_q(unsigned q, const Field& f) {
  if (!has_order_q_element(f, q)) {
    throw DomainError("F^x has no element of order " + std::to_string(q) + " over " + f.descriptor());
  }
}

// Q^q - 1 for a finite field, refusing values that do not fit comfortably.
std::uint64_t extension_unit_order(unsigned q, const Field& f) {
  unsigned __int128 v = 1;
  for (unsigned i = 0; i < q; ++i) {
    v *= f.size();
    if (v > (static_cast<unsigned __int128>(1) << 62)) throw DomainError("degree-q extension too large");
  }
  return static_cast<std::uint64_t>(v) - 1;
}

bool has_full_order(const Mat& x, std::uint64_t n) {
  if (!x.pow(static_cast<long long>(n)).is_identity()) return false;
  for (auto [r, e] : factor_u64(n)) {
    (void)e;
    if (x.pow(static_cast<long long>(n / r)).is_identity()) return false;
  }
  return true;
}

std::vector<FieldElem> coeffs_from_code(const Field& f, unsigned q, std::uint64_t code) {
  std::vector<FieldElem> c;
  for (unsigned i = 0; i < q; ++i) {
    c.emplace_back(f, code % f.size());
    code /= f.size();
  }
  return c;
}

}  // namespace

Mat make_I_alpha(unsigned q, const FieldElem& alpha) {
  check_degree(q);
  if (alpha.is_zero()) throw DomainError("alpha must be nonzero");
  const Field& f = alpha.field();
  Mat m(f, q);
  for (unsigned i = 0; i + 1 < q; ++i) m.set(i, i + 1, f.one());
  m.set(q - 1, 0, alpha);
  return m;
}

std::vector<Mat> make_D(unsigned q, const Field& f) {
  check_degree(q);
  check_order_q(q, f);
  std::vector<Mat> gens;
  const CyclicSubgroup syl = sylow_q_units(f, q);
  if (f.is_finite()) gens.push_back(Mat::scalar(f.primitive_root(), q));
  for (unsigned i = 0; i + 1 < q; ++i) {
    std::vector<FieldElem> diag(q, f.one());
    diag[i] = syl.generator;
    gens.push_back(Mat::diag(diag));
  }
  return gens;
}

FieldElem canonical_xi(unsigned q, const Field& f) {
  check_order_q(q, f);
  if (!f.is_finite()) return f.from_int(-1);
  return FieldElem(f, f.pow_code(f.primitive_root_code(), f.unit_order() / q));
}

Mat make_d(unsigned q, const Field& f) {
  const FieldElem xi = canonical_xi(q, f);
  std::vector<FieldElem> diag;
  FieldElem x = f.one();
  for (unsigned i = 0; i < q; ++i) {
    diag.push_back(x);
    x = x * xi;
  }
  return Mat::diag(diag);
}

Mat delta_element(const Mat& I_alpha, const std::vector<FieldElem>& coeffs) {
  if (coeffs.size() > I_alpha.n()) throw DomainError("b has more coefficients than q");
  const Field& f = I_alpha.field();
  Mat r(f, I_alpha.n());
  Mat p = Mat::identity(f, I_alpha.n());
  for (const auto& c : coeffs) {
    r = r + p.scaled(c);
    p = p * I_alpha;
  }
  return r;
}

bool is_case_star(unsigned q, const FieldElem& alpha) {
  if (q != 2 || alpha.is_zero()) return false;
  return qth_root(-alpha, 2).has_value();
}

bool binomial_irreducible(unsigned q, const FieldElem& alpha) {
  check_degree(q);
  if (alpha.is_zero()) return false;
  return !qth_root(alpha, q).has_value();
}

unsigned permutation_image_order(const std::vector<Mat>& monomials) {
  using Perm = std::vector<unsigned>;
  std::vector<Perm> gens;
  for (const auto& m : monomials) {
    Perm p(m.n(), m.n());
    for (unsigned j = 0; j < m.n(); ++j) {
      for (unsigned i = 0; i < m.n(); ++i) {
        if (!m.at(i, j).is_zero()) {
          if (p[j] != m.n()) throw DomainError("matrix is not monomial");
          p[j] = i;
        }
      }
      if (p[j] == m.n()) throw DomainError("matrix is not monomial");
    }
    gens.push_back(p);
  }
  if (gens.empty()) return 1;
  const unsigned n = static_cast<unsigned>(gens.front().size());
  Perm id(n);
  for (unsigned i = 0; i < n; ++i) id[i] = i;
  std::set<Perm> seen{id};
  std::vector<Perm> queue{id};
  while (!queue.empty()) {
    Perm x = queue.back();
    queue.pop_back();
    for (const auto& g : gens) {
      Perm y(n);
      for (unsigned i = 0; i < n; ++i) y[i] = g[x[i]];
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return static_cast<unsigned>(seen.size());
}

MonomialData make_H_alpha(unsigned q, const Field& f, const FieldElem& alpha) {
  MonomialData data;
  data.q = q;
  data.field = &f;
  data.alpha = alpha;
  data.D_gens = make_D(q, f);
  data.I_alpha = make_I_alpha(q, alpha);
  std::vector<Mat> gens = data.D_gens;
  gens.push_back(data.I_alpha);
  data.pi_image_order = permutation_image_order(gens);
  data.group = MatGroup(f, q, gens, true);
  return data;
}

std::vector<FieldElem> delta_unit_generator(unsigned q, const FieldElem& alpha) {
  const Field& f = alpha.field();
  if (!f.is_finite()) throw DomainError("Delta_alpha^x is not cyclic over Q");
  if (!binomial_irreducible(q, alpha)) throw DomainError("X^q - alpha is reducible");
  const std::uint64_t n = extension_unit_order(q, f);
  const Mat I = make_I_alpha(q, alpha);
  for (std::uint64_t code = 1; code <= n; ++code) {
    auto c = coeffs_from_code(f, q, code);
    if (has_full_order(delta_element(I, c), n)) return c;
  }
  throw Error("no generator of Delta_alpha^x found");
}

MatGroup make_A_alpha(unsigned q, const Field& f, const FieldElem& alpha) {
  check_degree(q);
  if (f.has_quasicyclic_two_torsion()) throw DomainError("quasicyclic Sylow 2-subgroups are out of scope");
  if (!binomial_irreducible(q, alpha)) {
    throw DomainError("X^" + std::to_string(q) + " - " + alpha.to_string() + " is reducible over " + f.descriptor());
  }
  const Mat I = make_I_alpha(q, alpha);
  if (!is_case_star(q, alpha)) return MatGroup(f, q, {I}, true);
  if (!f.is_finite()) {
    // Syl_2 of Q(eps)^x / Q^x is generated by the class of 1 + eps with eps = I_alpha / gamma.
    const FieldElem gamma = *qth_root(-alpha, 2);
    const Mat eps = I.scaled(gamma.inverse());
    return MatGroup(f, q, {I, Mat::identity(f, q) + eps}, true);
  }
  const Mat gamma = delta_element(I, delta_unit_generator(q, alpha));
  const std::uint64_t quotient = f.size() + 1;  // |Delta^x / F^x|
  const std::uint64_t odd = quotient / prime_part(quotient, 2);
  return MatGroup(f, q, {gamma.pow(static_cast<long long>(odd))}, true);
}

PrimitiveData make_G_alpha_b(unsigned q, const Field& f, const FieldElem& alpha, const std::vector<FieldElem>& b) {
  check_degree(q);
  check_order_q(q, f);
  PrimitiveData data;
  data.q = q;
  data.field = &f;
  data.alpha = alpha;
  data.b_coeffs = b;
  data.b_coeffs.resize(q, f.zero());
  data.A_alpha = make_A_alpha(q, f, alpha);
  data.I_alpha = make_I_alpha(q, alpha);
  data.b = delta_element(data.I_alpha, data.b_coeffs);
  if (data.b.det().is_zero()) throw DomainError("b is not a unit of Delta_alpha");
  data.d = make_d(q, f);
  data.case_star = is_case_star(q, alpha);
  std::vector<Mat> gens = data.A_alpha.generators();
  gens.push_back(data.d * data.b);
  data.group = MatGroup(f, q, gens, true);
  return data;
}

Mat companion_matrix(const Poly& p) {
  const Poly m = p.monic();
  const auto n = static_cast<unsigned>(m.degree());
  if (n < 1) throw DomainError("companion matrix needs a polynomial of positive degree");
  Mat c(p.field(), n);
  for (unsigned i = 0; i + 1 < n; ++i) c.set(i + 1, i, p.field().one());
  for (unsigned i = 0; i < n; ++i) c.set(i, n - 1, -m.coeff(i));
  return c;
}

Poly singer_polynomial(unsigned q, const Field& f) {
  check_degree(q);
  if (!f.is_finite()) {
    std::vector<FieldElem> c(q + 1, f.zero());
    c[0] = f.from_int(-2);
    c[q] = f.one();
    return Poly(f, c);
  }
  const std::uint64_t n = extension_unit_order(q, f);
  for (std::uint64_t code = 1; code <= n; ++code) {
    auto c = coeffs_from_code(f, q, code);
    if (c[0].is_zero()) continue;
    c.push_back(f.one());
    Poly p(f, c);
    if (!is_irreducible(p)) continue;
    if (has_full_order(companion_matrix(p), n)) return p;
  }
  throw Error("no primitive polynomial found");
}

MatGroup make_singer(unsigned q, const Field& f) {
  return MatGroup(f, q, {companion_matrix(singer_polynomial(q, f))}, true);
}

}  // namespace locnil
