#include "locnil/classify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "locnil/linalg.hpp"
#include "locnil/oracle.hpp"
#include "locnil/props.hpp"

namespace locnil {

std::string tag_name(ClassTag t) {
  switch (t) {
    case ClassTag::MonomialH:
      return "MonomialH";
    case ClassTag::PrimitiveG:
      return "PrimitiveG";
    case ClassTag::AbelianSinger:
      return "AbelianSinger";
  }
  return "?";
}

std::string decision_name(Decision d) {
  switch (d) {
    case Decision::conjugate:
      return "conjugate";
    case Decision::not_conjugate:
      return "not conjugate";
    case Decision::undecided:
      return "undecided by paper criteria";
  }
  return "?";
}

namespace {

bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

bool squarefree(std::uint64_t n) {
  for (auto [r, e] : factor_u64(n)) {
    (void)r;
    if (e > 1) return false;
  }
  return true;
}

bool qth_power_free(std::uint64_t n, unsigned q) {
  for (auto [r, e] : factor_u64(n)) {
    (void)r;
    if (e >= q) return false;
  }
  return true;
}

unsigned exact_log(std::uint64_t n, std::uint64_t base) {
  unsigned k = 0;
  while (n > 1) {
    if (n % base != 0) throw Error("not a power");
    n /= base;
    ++k;
  }
  return k;
}

std::string log2_string(std::uint64_t n) {
  if (is_power_of_two(n)) return std::to_string(exact_log(n, 2));
  std::ostringstream s;
  s.precision(4);
  s << "log2(" << n << ") = " << std::fixed << std::log2(static_cast<double>(n));
  return s.str();
}

bool epsilon_in_field(const Field& f) { return qth_root(f.from_int(-1), 2).has_value(); }

bool is_square(const FieldElem& x) { return qth_root(x, 2).has_value(); }

// Basis of {X : X g = g X for every generator}, each X flattened row-major.
std::vector<Vec> centralizer_algebra(const MatGroup& g) {
  const Field& f = g.field();
  const unsigned n = g.n();
  std::vector<Vec> rows;
  for (const auto& m : g.generators()) {
    // entry (i, j) of X m - m X as a linear form in the entries of X
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = 0; j < n; ++j) {
        Vec row(n * n, f.zero());
        for (unsigned k = 0; k < n; ++k) {
          row[i * n + k] = row[i * n + k] + m.at(k, j);
          row[k * n + j] = row[k * n + j] - m.at(i, k);
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return nullspace(f, rows, n * n);
}

// Number of invertible elements of the centralizer algebra, by enumeration.
std::optional<std::uint64_t> centralizer_units(const MatGroup& g) {
  const Field& f = g.field();
  const auto basis = centralizer_algebra(g);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (total > (std::uint64_t{1} << 20) / f.size()) return std::nullopt;
    total *= f.size();
  }
  const unsigned n = g.n();
  std::uint64_t units = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    Mat x(f, n);
    std::uint64_t c = code;
    for (const auto& v : basis) {
      const FieldElem coef(f, c % f.size());
      c /= f.size();
      if (coef.is_zero()) continue;
      for (unsigned e = 0; e < n * n; ++e) x.set(e / n, e % n, x.at(e / n, e % n) + coef * v[e]);
    }
    units += x.is_invertible();
  }
  return units;
}

void verify_rep(ClassRep& rep, const ClassifyOptions& opt) {
  VerifiedProperties& v = rep.verified;
  const MatGroup& g = rep.group;
  const Field& f = *rep.field;
  v.irreducible = is_irreducible(g);
  v.absolutely_irreducible = is_absolutely_irreducible(g);
  const bool infinite_image = !f.is_finite() && rep.tag == ClassTag::AbelianSinger;
  if (*v.irreducible && !infinite_image) v.primitive = is_primitive(g);
  v.nilpotency_class = nilpotency_class(g);
  v.nilpotent = v.nilpotency_class.has_value();
  if (!infinite_image) v.projective_order = g.projective_closure().size();
  v.order = g.order();
  if (rep.tag == ClassTag::AbelianSinger && f.is_finite()) {
    // self-centralizing: the unit group of the centralizer algebra is G itself
    if (auto u = centralizer_units(g)) v.maximal_abelian = *u == v.order.value;
  }
  if (!f.is_finite()) {
    v.maximality_note = "not checked: adjunction needs a finite ambient group";
    return;
  }
  auto amb = gl_order(rep.q, f);
  if (!amb || *amb > opt.maximality_ambient_cap) {
    v.maximality_note = "not checked: ambient group above the oracle cap";
    return;
  }
  if (!*v.nilpotent) {
    v.maximal = false;
    v.maximality_note = "not nilpotent";
    return;
  }
  MaximalityOptions mo;
  mo.threads = opt.threads;
  auto r = maximality_check(g, mo);
  v.maximal = r.maximal;
  v.maximality_note = "adjunction over " + std::to_string(r.candidates) + " projective classes of " +
                      ambient_name(rep.q, f) + " (order " + std::to_string(*amb) + ")";
  if (r.witness) v.maximality_note += "; nilpotent overgroup via " + r.witness->to_string();
}

ClassRep make_h_rep(unsigned q, const Field& f, const FieldElem& alpha) {
  ClassRep rep;
  rep.tag = ClassTag::MonomialH;
  rep.q = q;
  rep.field = &f;
  rep.alpha = alpha;
  rep.group = make_H_alpha(q, f, alpha).group;
  const PowerClass c = PowerClass::of(alpha, q, PowerMode::mod_S);
  rep.certificate.emplace_back("alpha_mod_S", c.is_trivial() ? "1" : c.to_string());
  rep.certificate.emplace_back("Ddet", det_group(rep.group).to_string());
  if (f.is_finite()) {
    rep.notes.push_back("class formula 1 + (q-1) log_q |Syl_q(F^x)| = " + std::to_string(h_class_formula(q, f)));
  }
  return rep;
}

ClassRep make_g_rep(unsigned q, const Field& f, const FieldElem& alpha, const std::vector<FieldElem>& b) {
  ClassRep rep;
  rep.tag = ClassTag::PrimitiveG;
  rep.q = q;
  rep.field = &f;
  rep.alpha = alpha;
  PrimitiveData data = make_G_alpha_b(q, f, alpha, b);
  rep.b = data.b_coeffs;
  rep.group = data.group;
  const DetGroup dA = det_group(data.A_alpha);
  rep.certificate.emplace_back("Ddet", det_group(rep.group).to_string());
  rep.certificate.emplace_back("Ddet_A", dA.to_string());
  rep.certificate.emplace_back("det_b_coset", dA.coset_representative(data.b.det()).to_string() + " Ddet(A)");
  if (data.case_star) rep.notes.push_back("case (*): Delta_alpha = F(eps)");
  if (data.case_star && f.is_finite()) {
    auto r = g_class_formula(f);
    rep.notes.push_back("class formula readings: |Syl_2(Delta^x) F^x| gives " + r.product_reading +
                        ", |Syl_2(Delta^x F^x)| gives " + r.sylow_reading);
  }
  return rep;
}

ClassRep make_singer_rep(unsigned q, const Field& f, const Poly& p) {
  ClassRep rep;
  rep.tag = ClassTag::AbelianSinger;
  rep.q = q;
  rep.field = &f;
  rep.polynomial = p;
  const Mat c = companion_matrix(p);
  if (f.is_finite()) {
    rep.group = MatGroup(f, q, {c}, true);
  } else {
    // theta and 2 + theta: the second has infinite order modulo scalars.
    rep.group = MatGroup(f, q, {c, c + Mat::scalar(f.from_int(2), q)}, true);
    rep.notes.push_back("represents the unit group of F[X]/(" + p.to_string() +
                        "); generated here by theta, 2 + theta and the scalars, maximality is not enumerated");
  }
  rep.certificate.emplace_back("polynomial", p.to_string());
  return rep;
}

Poly binomial(const Field& f, unsigned q, const FieldElem& d) {
  std::vector<FieldElem> c(q + 1, f.zero());
  c[0] = -d;
  c[q] = f.one();
  return Poly(f, c);
}

std::vector<FieldElem> coeffs2(const Field& f, long long b0, long long b1) { return {f.from_int(b0), f.from_int(b1)}; }

// Stream of primitive G(alpha, b) over Q with q = 2 outside case (*):
// squarefree alpha not in {1, -1}, det b outside <-alpha, squares> (primitive)
// and outside -squares and alpha squares (no containment in some G(-1, c)).
// Candidates are produced in stages of growing height max(|alpha|, |b0|, |b1|).
void rational_g_stream(const Field& f, const ClassifyOptions& opt, Classification& out) {
  std::set<std::pair<long long, std::string>> seen;
  std::size_t emitted = 0;
  std::size_t absorbed = 0;
  for (long long h = 2; emitted < opt.limit && h < 200; ++h) {
    std::vector<std::pair<std::tuple<long long, int, std::string>, ClassRep>> stage;
    for (long long a = 2; a <= h; ++a) {
      if (!squarefree(static_cast<std::uint64_t>(a))) continue;
      for (long long alpha_v : {a, -a}) {
        const FieldElem alpha = f.from_int(alpha_v);
        const DetGroup dA = DetGroup::generated(f, 2, {-alpha}, true);
        for (long long b0 = -h; b0 <= h; ++b0) {
          for (long long b1 = -h; b1 <= h; ++b1) {
            if (std::max({a, std::llabs(b0), std::llabs(b1)}) != h) continue;
            const FieldElem det = f.from_int(b0 * b0 - alpha_v * b1 * b1);
            if (det.is_zero() || dA.contains(det)) continue;
            if (is_square(-det) || is_square(det / alpha)) {
              ++absorbed;
              continue;
            }
            const std::string cls = dA.coset_representative(det).to_string();
            if (!seen.insert({alpha_v, cls}).second) continue;
            ClassRep rep = make_g_rep(2, f, alpha, coeffs2(f, b0, b1));
            stage.push_back({{a, alpha_v < 0 ? 1 : 0, cls}, std::move(rep)});
          }
        }
      }
    }
    std::stable_sort(stage.begin(), stage.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& [key, rep] : stage) {
      if (emitted == opt.limit) break;
      out.reps.push_back(std::move(rep));
      ++emitted;
    }
  }
  if (absorbed) {
    out.suppressed.push_back(std::to_string(absorbed) +
                             " candidate G(alpha, b) with det b in -F^x2 or alpha F^x2 (conjugate into some G(-1, c))");
  }
}

void classify_rational_q2(const Field& f, const ClassifyOptions& opt, Classification& out) {
  out.suppressed.push_back("H_1: proper subgroup of G(-1, 1) since eps is not in F");
  // H_alpha: one per nontrivial class of Q^x / S, S = +-squares.
  std::size_t n = 0;
  for (std::uint64_t a = 2; n < opt.limit; ++a) {
    if (!squarefree(a)) continue;
    out.reps.push_back(make_h_rep(2, f, f.from_int(static_cast<long long>(a))));
    ++n;
  }
  // Case (*): G(-1, b) with distinct Ddet = <2, -N(b), squares>; N(b) runs over
  // squarefree odd products of primes = 1 mod 4.
  n = 0;
  for (std::uint64_t m = 1; n < opt.limit; m += 2) {
    if (!squarefree(m)) continue;
    bool ok = true;
    for (auto [r, e] : factor_u64(m)) {
      (void)e;
      if (r % 4 != 1) ok = false;
    }
    if (!ok) continue;
    long long b0 = -1, b1 = 0;
    for (;; ++b1) {
      const long long rest = static_cast<long long>(m) - b1 * b1;
      const long long s = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(rest))));
      if (s * s == rest) {
        b0 = s;
        break;
      }
    }
    ClassRep rep = make_g_rep(2, f, f.from_int(-1), coeffs2(f, b0, b1));
    rep.notes.push_back("other G(-1, b) with the same Ddet are not separated by the determinant criteria");
    out.reps.push_back(std::move(rep));
    ++n;
  }
  rational_g_stream(f, opt, out);
  // Abelian: Q(sqrt d)^x for squarefree d != 1, ordered by |d| then sign.
  n = 0;
  for (long long a = 1; n < opt.limit; ++a) {
    if (!squarefree(static_cast<std::uint64_t>(a))) continue;
    for (long long d : {a, -a}) {
      if (d == 1 || n == opt.limit) continue;
      out.reps.push_back(make_singer_rep(2, f, binomial(f, 2, f.from_int(d))));
      ++n;
    }
  }
}

void classify_rational_odd(unsigned q, const Field& f, const ClassifyOptions& opt, Classification& out) {
  out.notes.push_back("F^x has no element of order " + std::to_string(q) + ": every such group is abelian");
  out.notes.push_back("abelian classes are listed for pure extensions Q(d^(1/q)) only");
  std::vector<PowerClass> seen;
  std::size_t n = 0;
  for (std::uint64_t d = 2; n < opt.limit; ++d) {
    if (!qth_power_free(d, q)) continue;
    const FieldElem x = f.from_int(static_cast<long long>(d));
    const PowerClass c = PowerClass::of(x, q, PowerMode::qth_powers);
    if (std::any_of(seen.begin(), seen.end(), [&](const PowerClass& s) { return same_cyclic_subgroup(s, c); })) {
      continue;
    }
    seen.push_back(c);
    out.reps.push_back(make_singer_rep(q, f, binomial(f, q, x)));
    ++n;
  }
}

void classify_finite(unsigned q, const Field& f, Classification& out) {
  const bool has_q = has_order_q_element(f, q);
  const bool eps_in_f = f.characteristic() == 2 || epsilon_in_field(f);
  if (!has_q) {
    out.notes.push_back("F^x has no element of order " + std::to_string(q) + ": every such group is abelian");
    out.reps.push_back(make_singer_rep(q, f, singer_polynomial(q, f)));
    return;
  }
  if (q == 2 && !eps_in_f) {
    out.suppressed.push_back("H_1: proper subgroup of G(-1, 1) since eps is not in F");
  } else {
    out.reps.push_back(make_h_rep(q, f, f.one()));
  }
  out.notes.push_back("H family empty: F^x / S is trivial");

  const FieldElem g = f.primitive_root();
  for (unsigned j = 1; j < q; ++j) {
    FieldElem alpha = g.pow(j);
    if (is_case_star(q, alpha)) alpha = f.from_int(-1);
    if (is_case_star(q, alpha)) {
      const Mat I = make_I_alpha(q, alpha);
      const Mat gamma = delta_element(I, delta_unit_generator(q, alpha));
      const std::uint64_t quotient = f.size() + 1;
      const std::uint64_t index = quotient / prime_part(quotient, 2);
      std::vector<ClassRep> found;
      for (std::uint64_t k = 0; k < index; ++k) {
        const auto b = delta_coefficients(gamma.pow(static_cast<long long>(k)));
        ClassRep rep = make_g_rep(q, f, alpha, b);
        bool dup = false;
        for (const auto& prev : found) {
          if (auto t = conjugator_search(rep.group, prev.group)) {
            out.suppressed.push_back("G(" + alpha.to_string() + ", " + rep.group.generators().back().to_string() +
                                     "): conjugate by " + t->to_string() + " to an earlier representative");
            dup = true;
            break;
          }
        }
        if (!dup) found.push_back(std::move(rep));
      }
      for (auto& r : found) out.reps.push_back(std::move(r));
      continue;
    }
    const FieldElem gen = q % 2 == 0 ? -alpha : alpha;
    const DetGroup dA = DetGroup::generated(f, q, {gen}, true);
    if (dA.step() == 1) {
      out.notes.push_back("G(" + alpha.to_string() + ", b) is monomial for every b: Ddet(A_alpha) = F^x");
      continue;
    }
    const Mat I = make_I_alpha(q, alpha);
    std::set<std::uint64_t> classes;
    std::uint64_t total = 1;
    for (unsigned i = 0; i < q; ++i) total *= f.size();
    for (std::uint64_t code = 1; code < total && classes.size() + 1 < dA.step(); ++code) {
      std::vector<FieldElem> b;
      std::uint64_t c = code;
      for (unsigned i = 0; i < q; ++i) {
        b.emplace_back(f, c % f.size());
        c /= f.size();
      }
      const FieldElem det = delta_element(I, b).det();
      if (det.is_zero() || dA.contains(det)) continue;
      if (q == 2 && !eps_in_f && (is_square(-det) || is_square(det / alpha))) continue;
      if (classes.insert(f.dlog_code(det.code()) % dA.step()).second) out.reps.push_back(make_g_rep(q, f, alpha, b));
    }
  }

  const Poly p = singer_polynomial(q, f);
  if (q == 2 && !eps_in_f && is_power_of_two(f.size() + 1)) {
    out.suppressed.push_back("abelian " + p.to_string() + ": projective image of order " +
                             std::to_string(f.size() + 1) + " is a 2-group");
  } else {
    out.reps.push_back(make_singer_rep(q, f, p));
  }
}

}  // namespace

std::vector<FieldElem> delta_coefficients(const Mat& x) {
  std::vector<FieldElem> c;
  for (unsigned i = 0; i < x.n(); ++i) c.push_back(x.at(0, i));
  return c;
}

unsigned h_class_formula(unsigned q, const Field& f) {
  if (!f.is_finite()) throw DomainError("Syl_q(F^x) is not finite-cyclic here");
  return 1 + (q - 1) * exact_log(sylow_q_units(f, q).order, q);
}

ClassFormulaReadings g_class_formula(const Field& f) {
  if (!f.is_finite() || f.size() % 4 != 3) throw DomainError("needs a finite field with |F| = 3 mod 4");
  const std::uint64_t Q = f.size();
  const std::uint64_t syl_delta = prime_part(Q * Q - 1, 2);
  const std::uint64_t syl_f = prime_part(Q - 1, 2);
  ClassFormulaReadings r;
  r.product_order = syl_delta * (Q - 1) / syl_f;
  r.sylow_of_product_order = syl_delta;
  r.product_reading = log2_string(r.product_order);
  r.sylow_reading = log2_string(r.sylow_of_product_order);
  return r;
}

Classification classify(unsigned q, const Field& f, const ClassifyOptions& options) {
  if (q < 2 || q > 13 || !is_prime_u64(q)) throw DomainError("q must be a prime between 2 and 13");
  Classification out;
  out.q = q;
  out.field = &f;
  if (f.is_finite()) {
    classify_finite(q, f, out);
  } else if (q == 2) {
    classify_rational_q2(f, options, out);
  } else {
    classify_rational_odd(q, f, options, out);
  }
  if (options.verify) {
    for (auto& rep : out.reps) verify_rep(rep, options);
  }
  if (f.is_finite()) {
    std::map<ClassTag, std::uint64_t> by_tag;
    for (const auto& r : out.reps) ++by_tag[r.tag];
    out.count.total = Cardinal::finite(out.reps.size());
    for (auto t : {ClassTag::MonomialH, ClassTag::PrimitiveG, ClassTag::AbelianSinger}) {
      out.count.breakdown.push_back({tag_name(t), Cardinal::finite(by_tag[t]), ""});
    }
  } else {
    out.count = count_classes(q, f);
  }
  return out;
}

ClassCount count_classes(unsigned q, const Field& f) {
  if (f.is_finite()) {
    ClassifyOptions o;
    o.verify = false;
    return classify(q, f, o).count;
  }
  ClassCount c;
  c.total = Cardinal::unbounded();
  if (q == 2) {
    c.breakdown.push_back({tag_name(ClassTag::MonomialH), Cardinal::unbounded(), "F^x / S is infinite"});
    c.breakdown.push_back({tag_name(ClassTag::PrimitiveG), Cardinal::unbounded(), "F^x / (F^x)^q is infinite"});
  } else {
    c.breakdown.push_back({tag_name(ClassTag::MonomialH), Cardinal::finite(0), "no element of order q in F^x"});
    c.breakdown.push_back({tag_name(ClassTag::PrimitiveG), Cardinal::finite(0), "no element of order q in F^x"});
  }
  c.breakdown.push_back(
      {tag_name(ClassTag::AbelianSinger), Cardinal::unbounded(), "infinitely many degree-q extensions of F"});
  return c;
}

bool monomial_conjugate(unsigned q, const FieldElem& alpha1, const FieldElem& alpha2) {
  const PowerClass c1 = PowerClass::of(alpha1, q, PowerMode::mod_S);
  const PowerClass c2 = PowerClass::of(alpha2, q, PowerMode::mod_S);
  if (c1.is_trivial() || c2.is_trivial()) return c1.is_trivial() && c2.is_trivial();
  return same_cyclic_subgroup(c1, c2);
}

DiagConjugacy ia_conjugate(const Mat& a, const Mat& b) {
  if (!a.is_diagonal() || !b.is_diagonal()) throw DomainError("a and b must be diagonal");
  if (a.det().is_zero() || b.det().is_zero()) throw DomainError("a and b must be invertible");
  const Field& f = a.field();
  const unsigned q = a.n();
  DiagConjugacy r;
  if (a.det() != b.det()) return r;
  // x_i (I a)_{i,i+1} / x_{i+1} = (I b)_{i,i+1} gives x_{i+1} = x_i a_{i+1} / b_{i+1}.
  std::vector<FieldElem> x{f.one()};
  for (unsigned i = 1; i < q; ++i) x.push_back(x.back() * a.at(i, i) / b.at(i, i));
  r.conjugate = true;
  r.conjugator = Mat::diag(x);
  return r;
}

bool db_conjugate(unsigned q, const FieldElem& alpha, const std::vector<FieldElem>& b1,
                  const std::vector<FieldElem>& b2) {
  const Mat I = make_I_alpha(q, alpha);
  return delta_element(I, b1).det() == delta_element(I, b2).det();
}

PrimitiveConjugacy primitive_conjugate(unsigned q, const FieldElem& alpha, const std::vector<FieldElem>& b1,
                                       const std::vector<FieldElem>& b2) {
  const Field& f = alpha.field();
  PrimitiveConjugacy r;
  const PrimitiveData g1 = make_G_alpha_b(q, f, alpha, b1);
  const PrimitiveData g2 = make_G_alpha_b(q, f, alpha, b2);
  if (g1.case_star) {
    if (!f.is_finite()) {
      r.decision = Decision::undecided;
      r.method = "case (*) over an infinite field";
      return r;
    }
    r.conjugator = conjugator_search(g1.group, g2.group);
    r.decision = r.conjugator ? Decision::conjugate : Decision::not_conjugate;
    r.method = "case (*): conjugator search";
    return r;
  }
  if (!primitivity_criterion(q, alpha, b1) || !primitivity_criterion(q, alpha, b2)) {
    throw DomainError("both groups must be primitive");
  }
  const DetGroup dA = det_group(g1.A_alpha);
  const bool same_ddet = det_group(g1.group) == det_group(g2.group);
  const bool coset = dA.contains(g1.b.det() / g2.b.det());
  r.decision = same_ddet && coset ? Decision::conjugate : Decision::not_conjugate;
  r.method = "determinant criterion";
  return r;
}

}  // namespace locnil
