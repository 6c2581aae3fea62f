#include "locnil/group.hpp"

#include <algorithm>
#include <map>

namespace locnil {

std::optional<std::size_t> ElementSet::index_of(const Mat& m) const {
  auto it = index_.find(projective_ ? m.projective_canonical().key() : m.key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool ElementSet::insert(const Mat& m) {
  Mat c = projective_ ? m.projective_canonical() : m;
  auto [it, inserted] = index_.emplace(c.key(), elems_.size());
  if (inserted) elems_.push_back(std::move(c));
  return inserted;
}

namespace {

// Right-multiplication BFS. Elements with index < old_count are already closed
// under old_gens and only need the new generators applied.
bool run_closure(ElementSet& set, std::size_t old_count, const std::vector<Mat>& old_gens,
                 const std::vector<Mat>& new_gens, std::size_t cap) {
  std::vector<Mat> all = old_gens;
  all.insert(all.end(), new_gens.begin(), new_gens.end());
  for (std::size_t i = 0; i < set.size(); ++i) {
    const Mat e = set[i];
    for (const Mat& g : i < old_count ? new_gens : all) {
      if (set.insert(e * g) && set.size() > cap) return false;
    }
  }
  return true;
}

std::string budget_message(std::size_t cap) {
  return "closure not finite within cap of " + std::to_string(cap) + " elements";
}

}  // namespace

ElementSet enumerate_closure(const Field& f, unsigned n, const std::vector<Mat>& gens, bool projective,
                             std::size_t cap) {
  ElementSet set(projective);
  set.insert(Mat::identity(f, n));
  if (!run_closure(set, 0, {}, gens, cap)) throw ClosureBudgetExceeded(budget_message(cap));
  return set;
}

ElementSet extend_closure(const ElementSet& closed, const std::vector<Mat>& old_gens,
                          const std::vector<Mat>& new_gens, std::size_t cap) {
  auto r = try_extend_closure(closed, old_gens, new_gens, cap);
  if (!r) throw ClosureBudgetExceeded(budget_message(cap));
  return std::move(*r);
}

std::optional<ElementSet> try_extend_closure(const ElementSet& closed, const std::vector<Mat>& old_gens,
                                             const std::vector<Mat>& new_gens, std::size_t cap,
                                             ElementSet* partial) {
  ElementSet set = closed;
  if (!run_closure(set, closed.size(), old_gens, new_gens, cap)) {
    if (partial) *partial = std::move(set);
    return std::nullopt;
  }
  return set;
}

MatGroup::MatGroup(const Field& f, unsigned n, std::vector<Mat> gens, bool scalars_adjoined)
    : field_(&f), n_(n), gens_(std::move(gens)), scalars_(scalars_adjoined), cache_(std::make_shared<Cache>()) {
  for (const auto& g : gens_) {
    if (&g.field() != field_ || g.n() != n_) throw DomainError("generator of the wrong field or degree");
    if (!g.is_invertible()) throw DomainError("generator is singular: " + g.to_string());
  }
}

MatGroup MatGroup::from_elements(const Field& f, unsigned n, const ElementSet& elems, bool scalars_adjoined) {
  const bool projective = elems.projective();
  if (scalars_adjoined && !projective) throw DomainError("scalar-adjoined groups are given modulo scalars");
  ElementSet span(projective);
  span.insert(Mat::identity(f, n));
  std::vector<Mat> gens;
  for (const Mat& e : elems) {
    if (span.contains(e)) continue;
    span = extend_closure(span, gens, {e}, elems.size());
    gens.push_back(e);
  }
  MatGroup g(f, n, gens, scalars_adjoined);
  if (projective) g.cache_->projective = elems;
  else g.cache_->full = elems;
  return g;
}

std::vector<Mat> MatGroup::nonscalar_generators() const {
  std::vector<Mat> out;
  for (const auto& g : gens_) {
    if (!g.is_scalar()) out.push_back(g);
  }
  return out;
}

const ElementSet& MatGroup::projective_closure(std::size_t cap) const {
  std::lock_guard lock(cache_->mutex);
  if (!cache_->projective) {
    if (cache_->full) {
      ElementSet s(true);
      for (const auto& e : *cache_->full) s.insert(e);
      cache_->projective = std::move(s);
    } else {
      cache_->projective = enumerate_closure(*field_, n_, gens_, true, cap);
    }
  }
  return *cache_->projective;
}

const ElementSet& MatGroup::elements(std::size_t cap) const {
  if (scalars_) {
    if (!field_->is_finite()) throw DomainError("the group contains all rational scalars and is infinite");
    const ElementSet& proj = projective_closure(cap);
    std::lock_guard lock(cache_->mutex);
    if (!cache_->full) {
      if (proj.size() * field_->unit_order() > cap) throw ClosureBudgetExceeded(budget_message(cap));
      ElementSet s(false);
      for (const auto& e : proj) {
        for (std::uint64_t c = 1; c < field_->size(); ++c) s.insert(e.scaled(FieldElem(*field_, c)));
      }
      cache_->full = std::move(s);
    }
    return *cache_->full;
  }
  std::lock_guard lock(cache_->mutex);
  if (!cache_->full) cache_->full = enumerate_closure(*field_, n_, gens_, false, cap);
  return *cache_->full;
}

const ElementSet& MatGroup::closure(std::size_t cap) const {
  return scalars_ ? projective_closure(cap) : elements(cap);
}

Cardinal MatGroup::order() const {
  if (scalars_) {
    if (!field_->is_finite()) return Cardinal::unbounded();
    return Cardinal::finite(projective_closure().size() * field_->unit_order());
  }
  return Cardinal::finite(elements().size());
}

bool MatGroup::contains(const Mat& m) const {
  if (scalars_) return projective_closure().contains(m);
  return elements().contains(m);
}

MatGroup MatGroup::with_generator(const Mat& g) const {
  std::vector<Mat> gens = gens_;
  gens.push_back(g);
  return MatGroup(*field_, n_, std::move(gens), scalars_);
}

std::string MatGroup::to_string() const {
  std::string s = "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += " | ";
    s += gens_[i].to_string();
  }
  s += ">";
  if (scalars_) s += " F^x";
  return s;
}

ElementSet normal_closure(const Field& f, unsigned n, const std::vector<Mat>& seeds,
                          const std::vector<Mat>& conj_gens, bool projective, std::size_t cap) {
  std::vector<Mat> gens;
  for (const auto& s : seeds) {
    if (!(projective ? s.is_scalar() : s.is_identity())) gens.push_back(s);
  }
  ElementSet set = enumerate_closure(f, n, gens, projective, cap);
  std::vector<Mat> conj_inv;
  for (const auto& c : conj_gens) conj_inv.push_back(c.inverse());
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < set.size() && !grew; ++i) {
      for (std::size_t j = 0; j < conj_gens.size(); ++j) {
        Mat c = conj_gens[j] * set[i] * conj_inv[j];
        if (!set.contains(c)) {
          set = extend_closure(set, gens, {c}, cap);
          gens.push_back(c);
          grew = true;
          break;
        }
      }
    }
  }
  return set;
}

namespace {

std::vector<Mat> generator_commutators(const std::vector<Mat>& gens) {
  std::vector<Mat> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) out.push_back(commutator(gens[i], gens[j]));
  }
  return out;
}

}  // namespace

MatGroup derived_subgroup(const MatGroup& g) {
  auto gens = g.nonscalar_generators();
  ElementSet k = normal_closure(g.field(), g.n(), generator_commutators(gens), gens, false);
  return MatGroup::from_elements(g.field(), g.n(), k, false);
}

MatGroup centralizer(const MatGroup& g, const std::vector<Mat>& s) {
  const ElementSet& all = g.closure();
  ElementSet c(all.projective());
  for (const auto& x : all) {
    bool ok = true;
    for (const auto& y : s) {
      if (x * y != y * x) {
        ok = false;
        break;
      }
    }
    if (ok) c.insert(x);
  }
  return MatGroup::from_elements(g.field(), g.n(), c, g.scalars_adjoined());
}

MatGroup center(const MatGroup& g) { return centralizer(g, g.nonscalar_generators()); }

CentralSeries lower_central_series(const MatGroup& g, std::size_t cap) {
  CentralSeries out;
  auto gens = g.nonscalar_generators();
  const bool trivial =
      std::all_of(g.generators().begin(), g.generators().end(), [](const Mat& m) { return m.is_identity(); }) &&
      (!g.scalars_adjoined() || (g.field().is_finite() && g.field().size() == 2));
  if (trivial) {
    out.nilpotency_class = 0;
    return out;
  }
  ElementSet gamma = normal_closure(g.field(), g.n(), generator_commutators(gens), gens, false, cap);
  out.sizes.push_back(gamma.size());
  unsigned c = 1;
  while (gamma.size() > 1) {
    std::vector<Mat> seeds;
    for (const auto& x : gamma) {
      for (const auto& y : gens) seeds.push_back(commutator(x, y));
    }
    ElementSet next = normal_closure(g.field(), g.n(), seeds, gens, false, cap);
    ++c;
    out.sizes.push_back(next.size());
    if (next.size() == gamma.size()) return out;  // stabilized above the identity
    gamma = std::move(next);
  }
  out.nilpotency_class = c;
  return out;
}

std::optional<unsigned> nilpotency_class(const MatGroup& g, std::size_t cap) {
  return lower_central_series(g, cap).nilpotency_class;
}

std::optional<unsigned> upper_central_class(const MatGroup& g) {
  const ElementSet& all = g.elements();
  auto gens = g.nonscalar_generators();
  ElementSet z(false);
  z.insert(Mat::identity(g.field(), g.n()));
  unsigned i = 0;
  while (z.size() < all.size()) {
    ElementSet next(false);
    for (const auto& x : all) {
      bool central = true;
      for (const auto& y : gens) {
        if (!z.contains(commutator(x, y))) {
          central = false;
          break;
        }
      }
      if (central) next.insert(x);
    }
    ++i;
    if (next.size() == z.size()) return std::nullopt;
    z = std::move(next);
  }
  return i;
}

std::uint64_t element_order(const Mat& m, std::uint64_t cap) {
  Mat x = m;
  std::uint64_t k = 1;
  while (!x.is_identity()) {
    if (++k > cap) throw ClosureBudgetExceeded("element order exceeds " + std::to_string(cap));
    x = x * m;
  }
  return k;
}

std::uint64_t projective_order(const Mat& m, std::uint64_t cap) {
  Mat x = m;
  std::uint64_t k = 1;
  while (!x.is_scalar()) {
    if (++k > cap) throw ClosureBudgetExceeded("projective order exceeds " + std::to_string(cap));
    x = x * m;
  }
  return k;
}

bool commute_projectively(const Mat& a, const Mat& b) {
  return (a * b).projective_canonical() == (b * a).projective_canonical();
}

std::vector<PrimePart> prime_parts(const Mat& m, bool projective) {
  const std::uint64_t n = projective ? projective_order(m) : element_order(m);
  std::vector<PrimePart> out;
  if (n == 1) return out;
  for (auto [r, e] : factor_u64(n)) {
    std::uint64_t re = 1;
    for (unsigned i = 0; i < e; ++i) re *= r;
    const std::uint64_t a = n / re;
    // u = 1 mod r^e, u = 0 mod a
    std::uint64_t u = 0;
    if (re == n) {
      u = 1;
    } else {
      Integer inv, am(static_cast<unsigned long>(a % re)), mod(static_cast<unsigned long>(re));
      mpz_invert(inv.get_mpz_t(), am.get_mpz_t(), mod.get_mpz_t());
      u = mulmod_u64(a, inv.get_ui(), n);
    }
    out.push_back({r, m.pow(static_cast<long long>(u))});
  }
  return out;
}

NilpotenceVerdict finite_nilpotence(const ElementSet& elems) {
  const bool projective = elems.projective();
  const std::uint64_t size = elems.size();
  NilpotenceVerdict v;
  if (size == 1) return v;
  std::map<std::uint64_t, std::vector<std::size_t>> by_prime;  // prime-power-order elements
  for (std::size_t i = 0; i < elems.size(); ++i) {
    std::uint64_t o = projective ? projective_order(elems[i]) : element_order(elems[i]);
    if (o == 1) continue;
    auto f = factor_u64(o);
    if (f.size() == 1) by_prime[f[0].first].push_back(i);
  }
  for (auto [r, e] : factor_u64(size)) {
    (void)e;
    const std::uint64_t expected = prime_part(size, r) - 1;
    if (by_prime[r].size() != expected) v.nilpotent = false;
  }
  if (v.nilpotent) return v;
  auto commute = [&](const Mat& a, const Mat& b) { return projective ? commute_projectively(a, b) : a * b == b * a; };
  for (auto it = by_prime.begin(); it != by_prime.end(); ++it) {
    for (auto jt = std::next(it); jt != by_prime.end(); ++jt) {
      for (std::size_t a : it->second) {
        for (std::size_t b : jt->second) {
          if (!commute(elems[a], elems[b])) {
            v.witness = std::make_pair(elems[a], elems[b]);
            return v;
          }
        }
      }
    }
  }
  return v;
}

bool is_unipotent(const Mat& m) {
  Mat x = m - Mat::identity(m.field(), m.n());
  return x.pow(m.n()).is_zero();
}

JordanPair jordan_decompose(const Mat& g) {
  if (!g.field().is_finite()) throw DomainError("Jordan decomposition is only computed over finite fields");
  const std::uint64_t n = element_order(g);
  const std::uint64_t p = g.field().characteristic();
  const std::uint64_t pa = prime_part(n, p);
  const std::uint64_t m = n / pa;
  if (pa == 1) return {g, Mat::identity(g.field(), g.n())};
  if (m == 1) return {Mat::identity(g.field(), g.n()), g};
  Integer inv, mm(static_cast<unsigned long>(m % pa)), mod(static_cast<unsigned long>(pa));
  mpz_invert(inv.get_mpz_t(), mm.get_mpz_t(), mod.get_mpz_t());
  const std::uint64_t u = mulmod_u64(m, inv.get_ui(), n);  // 1 mod p^a, 0 mod m
  Mat gu = g.pow(static_cast<long long>(u));
  Mat gd = g.pow(static_cast<long long>((n + 1 - u) % n));
  return {gd, gu};
}

SplitReport splittable_check(const MatGroup& g) {
  SplitReport r;
  if (!g.field().is_finite()) {
    r.reason = "not applicable: infinite field";
    return r;
  }
  if (!nilpotency_class(g)) {
    r.reason = "not applicable: group is not nilpotent";
    return r;
  }
  r.applicable = true;
  const ElementSet& all = g.elements();
  r.order = all.size();
  ElementSet us(false), ds(false);
  for (const auto& x : all) {
    JordanPair j = jordan_decompose(x);
    us.insert(j.g_u);
    ds.insert(j.g_d);
  }
  r.unipotent_parts = us.size();
  r.semisimple_parts = ds.size();
  auto closed = [](const ElementSet& s) {
    for (const auto& a : s) {
      for (const auto& b : s) {
        if (!s.contains(a * b)) return false;
      }
    }
    return true;
  };
  r.unipotent_is_subgroup = closed(us);
  r.semisimple_is_subgroup = closed(ds);
  auto normal = [&](const ElementSet& s) {
    for (const auto& y : g.generators()) {
      Mat yi = y.inverse();
      for (const auto& a : s) {
        if (!s.contains(y * a * yi)) return false;
      }
    }
    return true;
  };
  r.unipotent_normal = normal(us);
  r.semisimple_normal = normal(ds);
  std::size_t common = 0;
  for (const auto& a : us) common += ds.contains(a);
  r.trivial_intersection = common == 1;
  r.parts_commute = true;
  for (const auto& a : us) {
    for (const auto& b : ds) {
      if (a * b != b * a) {
        r.parts_commute = false;
        break;
      }
    }
    if (!r.parts_commute) break;
  }
  r.direct_product = r.parts_commute && r.trivial_intersection && us.size() * ds.size() == all.size();
  return r;
}

}  // namespace locnil
