#include "locnil/props.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace locnil {

namespace {

constexpr std::size_t kLineLimit = 2000000;

std::string line_key(const Vec& v) { return vec_to_string(normalize_line(v)); }

Vec flatten_vec(const Mat& m) { return m.flatten(); }

Mat unflatten(const Field& f, unsigned n, const Vec& v) {
  Mat m(f, n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) m.set(i, j, v[i * n + j]);
  }
  return m;
}

// Basis of W ∩ ker(a) for W given by a basis.
std::vector<Vec> intersect_kernel(const std::vector<Vec>& w, const Mat& a) {
  const Field& f = a.field();
  const unsigned n = a.n();
  if (w.empty()) return {};
  std::vector<Vec> images;
  for (const auto& x : w) images.push_back(mul_vec(a, x));
  // rows of the system: coordinate i of sum_k c_k images[k]
  std::vector<Vec> rows(n, Vec(w.size(), f.zero()));
  for (unsigned i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < w.size(); ++k) rows[i][k] = images[k][i];
  }
  std::vector<Vec> out;
  for (const auto& c : nullspace(f, rows, static_cast<unsigned>(w.size()))) {
    Vec v = zero_vec(f, n);
    for (std::size_t k = 0; k < w.size(); ++k) {
      for (unsigned i = 0; i < n; ++i) v[i] = v[i] + c[k] * w[k][i];
    }
    out.push_back(std::move(v));
  }
  return out;
}

// A vector that is an eigenvector of every matrix in gens, searched through
// rational/field eigenvalues of each generator in turn.
std::optional<Vec> common_eigenvector(const std::vector<Mat>& gens, std::size_t idx, const std::vector<Vec>& w) {
  if (w.empty()) return std::nullopt;
  if (idx == gens.size()) return w.front();
  const Mat& g = gens[idx];
  const Mat id = Mat::identity(g.field(), g.n());
  for (const auto& lambda : roots(g.charpoly())) {
    auto sub = intersect_kernel(w, g - id.scaled(lambda));
    if (auto v = common_eigenvector(gens, idx + 1, sub)) return v;
  }
  return std::nullopt;
}

std::vector<Vec> standard_basis(const Field& f, unsigned n) {
  std::vector<Vec> b;
  for (unsigned i = 0; i < n; ++i) b.push_back(unit_vec(f, n, i));
  return b;
}

// Orthogonal complement of u (a hyperplane when u != 0).
std::vector<Vec> complement(const Vec& u) {
  const Field& f = u.front().field();
  return nullspace(f, {u}, static_cast<unsigned>(u.size()));
}

}  // namespace

std::vector<Vec> all_lines(const Field& f, unsigned n) {
  if (!f.is_finite()) throw DomainError("lines are enumerated over finite fields only");
  const std::uint64_t size = f.size();
  long double total = 0, pw = 1;
  for (unsigned i = 0; i < n; ++i) {
    total += pw;
    pw *= static_cast<long double>(size);
  }
  if (total > kLineLimit) throw DomainError("too many lines to enumerate");
  std::vector<Vec> lines;
  for (unsigned lead = 0; lead < n; ++lead) {
    const unsigned free = n - lead - 1;
    std::uint64_t count = 1;
    for (unsigned i = 0; i < free; ++i) count *= size;
    for (std::uint64_t code = 0; code < count; ++code) {
      Vec v = zero_vec(f, n);
      v[lead] = f.one();
      std::uint64_t c = code;
      for (unsigned i = lead + 1; i < n; ++i) {
        v[i] = FieldElem(f, c % size);
        c /= size;
      }
      lines.push_back(std::move(v));
    }
  }
  return lines;
}

unsigned enveloping_dim(const MatGroup& g) {
  const Field& f = g.field();
  const unsigned n = g.n();
  EchelonBasis span(f, n * n);
  std::vector<Mat> queue{Mat::identity(f, n)};
  span.add(flatten_vec(queue.front()));
  while (!queue.empty()) {
    Mat a = std::move(queue.back());
    queue.pop_back();
    for (const auto& x : g.generators()) {
      Mat b = a * x;
      if (span.add(flatten_vec(b))) queue.push_back(std::move(b));
    }
  }
  return span.dim();
}

bool is_absolutely_irreducible(const MatGroup& g) { return enveloping_dim(g) == g.n() * g.n(); }

IrreducibilityReport irreducibility(const MatGroup& g) {
  const Field& f = g.field();
  const unsigned n = g.n();
  IrreducibilityReport r;
  const auto gens = g.nonscalar_generators();
  if (gens.empty()) {
    r.invariant_subspace = {unit_vec(f, n, 0)};
    r.method = "scalar group";
    return r;
  }
  if (enveloping_dim(g) == n * n) {
    r.irreducible = true;
    r.method = "enveloping algebra is full";
    return r;
  }
  if (f.is_finite()) {
    for (const auto& line : all_lines(f, n)) {
      EchelonBasis s = spin(gens, {line});
      if (s.dim() < n) {
        r.invariant_subspace = s.basis();
        r.method = "line spin";
        return r;
      }
    }
    r.irreducible = true;
    r.method = "every line spins to the whole space";
    return r;
  }
  std::vector<Mat> candidates = gens;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i; j < gens.size(); ++j) candidates.push_back(gens[i] * gens[j]);
  }
  for (const auto& c : candidates) {
    try {
      if (is_irreducible(c.charpoly())) {
        r.irreducible = true;
        r.method = "element with irreducible characteristic polynomial";
        return r;
      }
    } catch (const DomainError&) {
    }
  }
  const auto basis = standard_basis(f, n);
  if (auto v = common_eigenvector(gens, 0, basis)) {
    r.invariant_subspace = {*v};
    r.method = "common eigenvector";
    return r;
  }
  std::vector<Mat> transposed;
  for (const auto& x : gens) transposed.push_back(x.transpose());
  if (auto u = common_eigenvector(transposed, 0, basis)) {
    r.invariant_subspace = complement(*u);
    r.method = "common eigenvector of the transposes";
    return r;
  }
  if (n > 3) throw DomainError("irreducibility over Q is decided for q <= 3 only");
  r.irreducible = true;
  r.method = "no invariant line or hyperplane";
  return r;
}

bool is_irreducible(const MatGroup& g) { return irreducibility(g).irreducible; }

namespace {

bool independent(const std::vector<Vec>& lines) {
  EchelonBasis b(lines.front().front().field(), static_cast<unsigned>(lines.front().size()));
  for (const auto& v : lines) {
    if (!b.add(v)) return false;
  }
  return true;
}

// Kernel line of a - lambda for a simple eigenvalue.
Vec eigenline(const Mat& a) {
  std::vector<Vec> rows;
  for (unsigned i = 0; i < a.n(); ++i) {
    Vec row;
    for (unsigned j = 0; j < a.n(); ++j) row.push_back(a.at(i, j));
    rows.push_back(std::move(row));
  }
  return nullspace(a.field(), rows, a.n()).front();
}

bool permutes_lines(const std::vector<Mat>& gens, const std::vector<Vec>& lines) {
  std::vector<std::string> keys;
  for (const auto& v : lines) keys.push_back(line_key(v));
  for (const auto& g : gens) {
    for (const auto& v : lines) {
      if (std::find(keys.begin(), keys.end(), line_key(mul_vec(g, v))) == keys.end()) return false;
    }
  }
  return true;
}

}  // namespace

PrimitivityReport primitivity(const MatGroup& g) {
  PrimitivityReport r;
  const Field& f = g.field();
  const unsigned n = g.n();
  if (!is_irreducible(g)) {
    r.method = "reducible";
    return r;
  }
  const auto gens = g.nonscalar_generators();
  if (f.is_finite()) {
    auto lines = all_lines(f, n);
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < lines.size(); ++i) index.emplace(vec_to_string(lines[i]), i);
    std::vector<bool> seen(lines.size(), false);
    for (std::size_t start = 0; start < lines.size(); ++start) {
      if (seen[start]) continue;
      std::vector<std::size_t> orbit{start};
      seen[start] = true;
      for (std::size_t k = 0; k < orbit.size(); ++k) {
        for (const auto& x : gens) {
          std::size_t j = index.at(line_key(mul_vec(x, lines[orbit[k]])));
          if (!seen[j]) {
            seen[j] = true;
            orbit.push_back(j);
          }
        }
      }
      if (orbit.size() != n) continue;
      std::vector<Vec> system;
      for (auto i : orbit) system.push_back(lines[i]);
      if (independent(system)) {
        r.block_lines = system;
        r.method = "line orbit of size q spanning the space";
        return r;
      }
    }
    r.primitive = true;
    r.method = "no line orbit forms a system of imprimitivity";
    return r;
  }
  const ElementSet& proj = g.projective_closure(1 << 16);
  if (proj.size() == n) {
    const Mat& x = gens.front();
    std::vector<Vec> system{unit_vec(f, n, 0)};
    for (unsigned i = 1; i < n; ++i) system.push_back(mul_vec(x, system.back()));
    if (independent(system) && permutes_lines(gens, system)) {
      r.block_lines = system;
      r.method = "cyclic projective image of order q";
      return r;
    }
  }
  const Mat id = Mat::identity(f, n);
  for (const auto& x : proj) {
    if (x.is_scalar()) continue;
    auto eig = roots(x.charpoly());
    if (eig.size() != n) continue;
    std::vector<Vec> system;
    for (const auto& lambda : eig) system.push_back(eigenline(x - id.scaled(lambda)));
    if (permutes_lines(gens, system)) {
      r.block_lines = system;
      r.method = "eigenlines of a split element";
      return r;
    }
  }
  if (n != 2) throw DomainError("primitivity over Q is decided for q = 2 or cyclic projective image");
  r.primitive = true;
  r.method = "no eigenline system is permuted";
  return r;
}

bool is_primitive(const MatGroup& g) { return primitivity(g).primitive; }

ModuleDecomposition decompose(const MatGroup& g) {
  ModuleDecomposition d;
  d.enveloping_dim = enveloping_dim(g);
  auto irr = irreducibility(g);
  d.invariant_subspace = irr.invariant_subspace;
  if (irr.irreducible) d.block_system = primitivity(g).block_lines;
  return d;
}

DetGroup DetGroup::generated(const Field& f, unsigned q, const std::vector<FieldElem>& gens, bool with_qth_powers) {
  DetGroup d;
  d.field_ = &f;
  d.q_ = q;
  if (f.is_finite()) {
    std::uint64_t s = f.unit_order();
    if (with_qth_powers) s = gcd_u64(s, q);
    for (const auto& x : gens) s = gcd_u64(s, f.dlog_code(x.code()));
    d.step_ = s == 0 ? f.unit_order() : s;
    if (f.unit_order() == 1) d.step_ = 1;
    return d;
  }
  if (!with_qth_powers) throw DomainError("determinant groups over Q are tracked modulo q-th powers");
  for (const auto& x : gens) {
    PowerClass c = PowerClass::of(x, q, PowerMode::qth_powers);
    if (!c.is_trivial()) d.classes_.push_back(c);
  }
  return d;
}

bool DetGroup::contains(const FieldElem& x) const {
  if (x.is_zero()) return false;
  if (field_->is_finite()) return field_->dlog_code(x.code()) % step_ == 0;
  return in_subgroup(PowerClass::of(x, q_, PowerMode::qth_powers), classes_);
}

Cardinal DetGroup::order() const {
  if (field_->is_finite()) return Cardinal::finite(field_->unit_order() / step_);
  return Cardinal::unbounded();
}

bool DetGroup::operator==(const DetGroup& o) const {
  if (field_ != o.field_) return false;
  if (field_->is_finite()) return step_ == o.step_;
  auto a = subgroup_elements(PowerClass::identity(*field_, q_, PowerMode::qth_powers), classes_);
  auto b = subgroup_elements(PowerClass::identity(*field_, q_, PowerMode::qth_powers), o.classes_);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::string DetGroup::to_string() const {
  if (field_->is_finite()) {
    FieldElem g(*field_, field_->pow_code(field_->primitive_root_code(), step_));
    return "<" + g.to_string() + "> (order " + std::to_string(field_->unit_order() / step_) + ")";
  }
  auto elems = subgroup_elements(PowerClass::identity(*field_, q_, PowerMode::qth_powers), classes_);
  std::string s = "<";
  bool first = true;
  for (const auto& c : elems) {
    if (c.is_trivial()) continue;
    if (!first) s += ", ";
    s += c.to_string();
    first = false;
  }
  if (!first) s += ", ";
  s += "(Q^x)^" + std::to_string(q_) + ">";
  return s;
}

FieldElem DetGroup::coset_representative(const FieldElem& x) const {
  if (x.is_zero()) throw DomainError("zero has no coset");
  if (field_->is_finite()) {
    return FieldElem(*field_, field_->pow_code(field_->primitive_root_code(), field_->dlog_code(x.code()) % step_));
  }
  const PowerClass c = PowerClass::of(x, q_, PowerMode::qth_powers);
  std::optional<PowerClass> best;
  for (const auto& h : subgroup_elements(PowerClass::identity(*field_, q_, PowerMode::qth_powers), classes_)) {
    PowerClass y = c * h;
    if (!best || y < *best) best = y;
  }
  return best->representative();
}

DetGroup det_group(const MatGroup& g) {
  std::vector<FieldElem> dets;
  for (const auto& x : g.generators()) dets.push_back(x.det());
  return DetGroup::generated(g.field(), g.n(), dets, g.scalars_adjoined());
}

bool primitivity_criterion(unsigned q, const FieldElem& alpha, const std::vector<FieldElem>& b) {
  if (is_case_star(q, alpha)) return true;
  const Field& f = alpha.field();
  std::vector<FieldElem> coeffs = b;
  coeffs.resize(q, f.zero());
  const FieldElem detb = delta_element(make_I_alpha(q, alpha), coeffs).det();
  const FieldElem gen = q % 2 == 0 ? -alpha : alpha;
  return !DetGroup::generated(f, q, {gen}, true).contains(detb);
}

KonyukhSeries konyukh_check(const MatGroup& g) {
  KonyukhSeries r;
  const Field& f = g.field();
  const unsigned q = g.n();
  if (!f.is_finite()) {
    r.reason = "not applicable: infinite field";
    return r;
  }
  if (f.characteristic() == q) {
    r.reason = "not applicable: characteristic equals the degree";
    return r;
  }
  if (!is_absolutely_irreducible(g)) {
    r.reason = "not applicable: not absolutely irreducible";
    return r;
  }
  if (!is_primitive(g)) {
    r.reason = "not applicable: imprimitive";
    return r;
  }
  if (!nilpotency_class(g)) {
    r.reason = "not applicable: not nilpotent";
    return r;
  }
  r.applicable = true;
  MatGroup k = derived_subgroup(g);
  const ElementSet& ks = k.elements();
  r.k_order = ks.size();
  r.k_abelian = true;
  for (const auto& a : ks) {
    for (const auto& b : ks) {
      if (a * b != b * a) r.k_abelian = false;
    }
  }
  std::uint64_t size = ks.size();
  while (size % q == 0) size /= q;
  r.k_q_group = size == 1;

  EchelonBasis span(f, q * q);
  for (const auto& a : ks) span.add(a.flatten());
  r.sigma_dim = span.dim();
  bool closed = true;
  for (const auto& a : span.basis()) {
    for (const auto& b : span.basis()) {
      if (!span.contains((unflatten(f, q, a) * unflatten(f, q, b)).flatten())) closed = false;
    }
  }
  bool units = closed;
  if (closed) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < r.sigma_dim; ++i) count *= f.size();
    for (std::uint64_t code = 1; code < count && units; ++code) {
      Vec v = zero_vec(f, q * q);
      std::uint64_t c = code;
      for (const auto& bv : span.basis()) {
        FieldElem coef(f, c % f.size());
        c /= f.size();
        for (unsigned i = 0; i < q * q; ++i) v[i] = v[i] + coef * bv[i];
      }
      if (unflatten(f, q, v).det().is_zero()) units = false;
    }
  }
  r.sigma_is_field = closed && units;

  MatGroup h = centralizer(g, ks.elements());
  const std::uint64_t g_proj = g.projective_closure().size();
  const std::uint64_t h_proj = h.projective_closure().size();
  r.galois_order = g_proj / h_proj;
  r.galois_matches_degree = r.galois_order == r.sigma_dim;
  r.galois_divides_q = q % r.galois_order == 0;
  r.hh_scalar = true;
  const ElementSet& hp = h.projective_closure();
  for (const auto& a : hp) {
    for (const auto& b : hp) {
      if (!commutator(a, b).is_scalar()) r.hh_scalar = false;
    }
  }
  return r;
}

Syl2Structure syl2_quotient_structure(const Field& f) {
  Syl2Structure s;
  if (!f.is_finite()) {
    // E = Q(i): Syl_2(E^x) = <i>, sigma(i) = -i = i^{-1}.
    s.m = 2;
    const Mat I = make_I_alpha(2, f.from_int(-1));
    const Mat one_plus = Mat::identity(f, 2) + I;
    s.syl2_case = "ii";
    s.predicted_order = 4;
    s.enumerated_order = projective_order(one_plus);
    s.cyclic = true;
    s.generator = "1+eps";
    s.note = "(1+eps)^4 = " + one_plus.pow(4).scalar_value().to_string() + " is rational";
    return s;
  }
  if (f.characteristic() == 2) throw DomainError("characteristic 2");
  if (f.size() % 4 != 3) throw DomainError("eps lies in F");
  const std::uint64_t Q = f.size();
  auto e = make_field("gf:" + std::to_string(f.characteristic()) + "^" + std::to_string(2 * f.degree()));
  const std::uint64_t n = e->unit_order();
  const std::uint64_t two_m = prime_part(n, 2);
  s.m = valuation(n, 2);
  const std::uint64_t eps_m = e->pow_code(e->primitive_root_code(), n / two_m);
  const std::uint64_t sigma = e->pow_code(eps_m, Q);
  const std::uint64_t inv = e->inv_code(eps_m);
  if (sigma == inv) {
    s.syl2_case = "ii";
    s.predicted_order = two_m;
    s.generator = "(1+eps_m)F^x";
  } else if (sigma == e->neg_code(inv)) {
    s.syl2_case = "i";
    s.predicted_order = two_m / 2;
    s.generator = "eps_m F^x";
  } else {
    throw Error("Frobenius image of eps_m is neither eps_m^-1 nor -eps_m^-1");
  }
  if (e->size() > (1ULL << 20)) {
    s.note = "enumeration skipped: field too large";
    return s;
  }
  // The class of x in E^x/F^x has the order of x^{Q-1} in E^x.
  std::uint64_t two_power = 0, largest = 0;
  for (std::uint64_t x = 1; x < e->size(); ++x) {
    const std::uint64_t o = e->order_code(e->pow_code(x, Q - 1));
    if ((o & (o - 1)) == 0) {
      ++two_power;
      largest = std::max(largest, o);
    }
  }
  s.enumerated_order = two_power / (Q - 1);
  s.cyclic = largest == s.enumerated_order;
  return s;
}

SylqQuotient sylq_quotient_generator(unsigned q, const FieldElem& alpha) {
  const Field& f = alpha.field();
  if (!has_order_q_element(f, q)) throw DomainError("F^x has no element of order q");
  if (!binomial_irreducible(q, alpha)) throw DomainError("X^q - alpha is reducible");
  if (is_case_star(q, alpha)) throw DomainError("Delta_alpha = F(eps): use the Syl_2 quotient structure instead");
  SylqQuotient s;
  s.generator = make_I_alpha(q, alpha);
  s.generator_order = projective_order(s.generator);
  if (!f.is_finite()) {
    s.sylow_order = s.generator_order;
    s.note = "a square class x with x^2 rational forces x in Q or Q I_alpha";
    return s;
  }
  std::uint64_t total = 1;
  for (unsigned i = 0; i < q; ++i) total *= f.size();
  if (total > (1ULL << 20)) {
    s.note = "enumeration skipped: extension too large";
    return s;
  }
  std::uint64_t count = 0;
  for (std::uint64_t code = 1; code < total; ++code) {
    std::vector<FieldElem> c;
    std::uint64_t x = code;
    for (unsigned i = 0; i < q; ++i) {
      c.emplace_back(f, x % f.size());
      x /= f.size();
    }
    std::uint64_t o = projective_order(delta_element(s.generator, c));
    while (o % q == 0) o /= q;
    if (o == 1) ++count;
  }
  s.sylow_order = count / f.unit_order();
  s.enumerated = true;
  return s;
}

std::optional<MatGroup> irreducible_abelian_normal_subgroup(const MatGroup& g) {
  const ElementSet& all = g.closure();
  const bool projective = all.projective();
  const auto gens = g.nonscalar_generators();
  std::optional<MatGroup> best;
  std::size_t best_size = 0;
  std::map<std::string, bool> tried;
  for (const auto& x : all) {
    if (x.is_scalar()) continue;
    ElementSet n = normal_closure(g.field(), g.n(), {x}, gens, projective);
    std::string key;
    {
      std::vector<std::string> keys;
      for (const auto& y : n) keys.push_back(y.key());
      std::sort(keys.begin(), keys.end());
      for (const auto& k : keys) key += k;
    }
    if (tried.count(key)) continue;
    tried[key] = true;
    bool abelian = true;
    for (std::size_t i = 0; i < n.size() && abelian; ++i) {
      for (std::size_t j = i + 1; j < n.size(); ++j) {
        if (n[i] * n[j] != n[j] * n[i]) {
          abelian = false;
          break;
        }
      }
    }
    if (!abelian) continue;
    MatGroup cand = MatGroup::from_elements(g.field(), g.n(), n, g.scalars_adjoined());
    if (!is_irreducible(cand)) continue;
    if (n.size() > best_size) {
      best_size = n.size();
      best = cand;
    }
  }
  return best;
}

}  // namespace locnil
