#include "locnil/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bitset>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <random>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "locnil/linalg.hpp"
#include "locnil/props.hpp"

namespace locnil {

bool OracleReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const OracleCheck& c) { return c.passed; });
}

std::string ambient_name(unsigned q, const Field& f) {
  return "GL(" + std::to_string(q) + ", " + f.descriptor() + ")";
}

std::optional<std::uint64_t> gl_order(unsigned q, const Field& f) {
  if (!f.is_finite()) return std::nullopt;
  unsigned __int128 qn = 1;
  for (unsigned i = 0; i < q; ++i) qn *= f.size();
  unsigned __int128 order = 1, qi = 1;
  for (unsigned i = 0; i < q; ++i) {
    order *= qn - qi;
    qi *= f.size();
    if (order > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  }
  return static_cast<std::uint64_t>(order);
}

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

// Prime-power-order elements of an element set, keyed by the prime.
std::map<std::uint64_t, std::vector<Mat>> prime_power_elements(const ElementSet& s) {
  std::map<std::uint64_t, std::vector<Mat>> out;
  for (const auto& x : s) {
    const std::uint64_t o = s.projective() ? projective_order(x) : element_order(x);
    if (o == 1) continue;
    auto f = factor_u64(o);
    if (f.size() == 1) out[f.front().first].push_back(x);
  }
  return out;
}

bool has_coprime_noncommuting_pair(const ElementSet& s) {
  auto by_prime = prime_power_elements(s);
  for (auto it = by_prime.begin(); it != by_prime.end(); ++it) {
    for (auto jt = std::next(it); jt != by_prime.end(); ++jt) {
      for (const auto& a : it->second) {
        for (const auto& b : jt->second) {
          if (!commute_projectively(a, b)) return true;
        }
      }
    }
  }
  return false;
}

struct BlockStats {
  std::uint64_t candidates = 0;
  std::uint64_t certified = 0;
  std::uint64_t closures = 0;
  std::uint64_t overruns = 0;
};

}  // namespace

std::uint64_t projective_candidate_count(const Field& f, unsigned q) {
  std::uint64_t total = 0;
  for (unsigned lead = 0; lead < q * q; ++lead) total += ipow(f.size(), q * q - 1 - lead);
  return total;
}

Mat projective_candidate(const Field& f, unsigned q, std::uint64_t index) {
  const unsigned n2 = q * q;
  unsigned lead = 0;
  for (; lead < n2; ++lead) {
    const std::uint64_t count = ipow(f.size(), n2 - 1 - lead);
    if (index < count) break;
    index -= count;
  }
  if (lead == n2) throw DomainError("candidate index out of range");
  Mat m(f, q);
  m.set(lead / q, lead % q, f.one());
  for (unsigned pos = lead + 1; pos < n2; ++pos) {
    m.set(pos / q, pos % q, FieldElem(f, index % f.size()));
    index /= f.size();
  }
  return m;
}

MaximalityResult maximality_check(const MatGroup& g, const MaximalityOptions& opt) {
  const Field& f = g.field();
  const unsigned q = g.n();
  if (!f.is_finite()) throw DomainError("maximality by adjunction needs a finite field");
  MaximalityResult result;
  const ElementSet& gbar = g.projective_closure();
  if (!finite_nilpotence(gbar).nilpotent) throw DomainError("the group is not nilpotent");

  if (!g.scalars_adjoined()) {
    const ElementSet& all = g.elements();
    for (std::uint64_t c = 1; c < f.size(); ++c) {
      Mat s = Mat::scalar(FieldElem(f, c), q);
      if (!all.contains(s)) {
        result.witness = s;
        result.overgroup_projective_order = gbar.size();
        return result;
      }
    }
  }

  std::map<std::uint64_t, std::vector<Mat>> sylow_gens;
  for (auto& [s, elems] : prime_power_elements(gbar)) {
    ElementSet sylow(true);
    sylow.insert(Mat::identity(f, q));
    for (const auto& x : elems) sylow.insert(x);
    sylow_gens[s] = MatGroup::from_elements(f, q, sylow, true).generators();
  }
  const std::vector<Mat> ggens = g.nonscalar_generators();
  const std::size_t budget = std::max<std::size_t>(opt.budget_factor * gbar.size(), 64);

  const std::uint64_t total = projective_candidate_count(f, q);
  constexpr std::uint64_t kBlock = 2048;
  const std::uint64_t blocks = (total + kBlock - 1) / kBlock;
  std::vector<BlockStats> stats(blocks);
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
  std::mutex witness_mutex;
  std::map<std::uint64_t, std::uint64_t> witness_orders;

  auto worker = [&] {
    for (;;) {
      const std::uint64_t b = next.fetch_add(1);
      if (b >= blocks) return;
      const std::uint64_t start = b * kBlock;
      if (start > best.load()) continue;
      const std::uint64_t stop = std::min(total, start + kBlock);
      BlockStats& st = stats[b];
      for (std::uint64_t idx = start; idx < stop; ++idx) {
        Mat c = projective_candidate(f, q, idx);
        if (c.det().is_zero() || gbar.contains(c)) continue;
        ++st.candidates;
        if (opt.certificates) {
          bool certified = false;
          for (const auto& part : prime_parts(c, true)) {
            for (const auto& [s, gens] : sylow_gens) {
              if (s == part.prime) continue;
              for (const auto& x : gens) {
                if (!commute_projectively(part.part, x)) {
                  certified = true;
                  break;
                }
              }
              if (certified) break;
            }
            if (certified) break;
          }
          if (certified) {
            ++st.certified;
            continue;
          }
        }
        ++st.closures;
        ElementSet partial(true);
        auto over = try_extend_closure(gbar, ggens, {c}, budget, &partial);
        if (!over) {
          ++st.overruns;
          if (opt.certificates && has_coprime_noncommuting_pair(partial)) continue;
          over = extend_closure(gbar, ggens, {c});
        }
        if (finite_nilpotence(*over).nilpotent) {
          std::lock_guard lock(witness_mutex);
          witness_orders[idx] = over->size();
          std::uint64_t cur = best.load();
          while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
          }
          break;
        }
      }
    }
  };

  const unsigned threads = std::max(1u, opt.threads);
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  const std::uint64_t w = best.load();
  for (std::uint64_t b = 0; b < blocks; ++b) {
    if (b * kBlock > w) break;
    result.candidates += stats[b].candidates;
    result.certified_by_parts += stats[b].certified;
    result.closures += stats[b].closures;
    result.budget_overruns += stats[b].overruns;
  }
  if (w == std::numeric_limits<std::uint64_t>::max()) {
    result.maximal = true;
    return result;
  }
  result.witness = projective_candidate(f, q, w);
  result.overgroup_projective_order = witness_orders.at(w);
  return result;
}

namespace {

constexpr std::size_t kMaxAmbient = 512;
using Bits = std::bitset<kMaxAmbient>;

struct Lattice {
  std::vector<Mat> elems;
  std::vector<std::vector<std::uint16_t>> mul;
  std::vector<std::uint16_t> inv;
  std::vector<std::uint64_t> order;
  std::uint16_t identity = 0;

  std::uint16_t index(const Mat& m, const std::unordered_map<std::string, std::uint16_t>& idx) const {
    return idx.at(m.key());
  }
};

struct Sub {
  Bits bits;
  std::vector<std::uint16_t> gens;
  std::size_t size = 0;
};

Bits close(const Lattice& L, const std::vector<std::uint16_t>& gens) {
  Bits bits;
  std::vector<std::uint16_t> queue{L.identity};
  bits.set(L.identity);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto g : gens) {
      auto y = L.mul[queue[i]][g];
      if (!bits.test(y)) {
        bits.set(y);
        queue.push_back(y);
      }
    }
  }
  return bits;
}

bool nilpotent_subgroup(const Lattice& L, const Bits& bits, std::size_t size) {
  std::map<std::uint64_t, std::size_t> counts;
  for (std::size_t i = 0; i < L.elems.size(); ++i) {
    if (!bits.test(i) || L.order[i] == 1) continue;
    auto fac = factor_u64(L.order[i]);
    if (fac.size() == 1) ++counts[fac.front().first];
  }
  for (auto [r, e] : factor_u64(size)) {
    (void)e;
    if (counts[r] != prime_part(size, r) - 1) return false;
  }
  return true;
}

}  // namespace

std::vector<SubgroupClass> exhaustive_classification(unsigned q, const Field& f) {
  auto ord = gl_order(q, f);
  if (!ord || *ord > kMaxAmbient) throw DomainError("ambient group too large for the subgroup lattice");
  Lattice L;
  std::unordered_map<std::string, std::uint16_t> idx;
  const std::uint64_t all = ipow(f.size(), q * q);
  for (std::uint64_t code = 0; code < all; ++code) {
    Mat m(f, q);
    std::uint64_t c = code;
    for (unsigned pos = 0; pos < q * q; ++pos) {
      m.set(pos / q, pos % q, FieldElem(f, c % f.size()));
      c /= f.size();
    }
    if (m.det().is_zero()) continue;
    idx.emplace(m.key(), static_cast<std::uint16_t>(L.elems.size()));
    L.elems.push_back(std::move(m));
  }
  const std::size_t n = L.elems.size();
  L.identity = L.index(Mat::identity(f, q), idx);
  L.mul.assign(n, std::vector<std::uint16_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) L.mul[i][j] = L.index(L.elems[i] * L.elems[j], idx);
  }
  L.inv.resize(n);
  L.order.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t o = 1;
    std::uint16_t x = static_cast<std::uint16_t>(i);
    while (x != L.identity) {
      x = L.mul[x][i];
      ++o;
    }
    L.order[i] = o;
    std::uint16_t y = static_cast<std::uint16_t>(i);
    for (std::uint64_t k = 1; k + 1 < o; ++k) y = L.mul[y][i];
    L.inv[i] = o == 1 ? L.identity : y;
  }

  // All subgroups as joins of cyclic subgroups.
  std::vector<Sub> subs;
  std::unordered_set<Bits> seen;
  std::vector<Sub> cyclic;
  for (std::size_t i = 0; i < n; ++i) {
    Sub s;
    s.gens = {static_cast<std::uint16_t>(i)};
    s.bits = close(L, s.gens);
    s.size = s.bits.count();
    if (seen.insert(s.bits).second) {
      subs.push_back(s);
      cyclic.push_back(s);
    }
  }
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (const auto& c : cyclic) {
      if ((c.bits & ~subs[i].bits).none()) continue;
      Sub s;
      s.gens = subs[i].gens;
      s.gens.push_back(c.gens.front());
      s.bits = close(L, s.gens);
      s.size = s.bits.count();
      if (seen.insert(s.bits).second) subs.push_back(std::move(s));
    }
  }

  std::vector<bool> nilpotent(subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i) nilpotent[i] = nilpotent_subgroup(L, subs[i].bits, subs[i].size);

  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (!nilpotent[i]) continue;
    bool maximal = true;
    for (std::size_t j = 0; j < subs.size() && maximal; ++j) {
      if (j != i && nilpotent[j] && subs[j].size > subs[i].size && (subs[i].bits & ~subs[j].bits).none()) {
        maximal = false;
      }
    }
    if (!maximal) continue;
    std::vector<Mat> gens;
    for (auto g : subs[i].gens) gens.push_back(L.elems[g]);
    if (!is_irreducible(MatGroup(f, q, gens, false))) continue;
    chosen.push_back(i);
  }

  auto conjugate_bits = [&](const Bits& b, std::size_t t) {
    Bits out;
    for (std::size_t x = 0; x < n; ++x) {
      if (b.test(x)) out.set(L.mul[L.mul[t][x]][L.inv[t]]);
    }
    return out;
  };

  std::vector<SubgroupClass> classes;
  std::vector<bool> used(chosen.size(), false);
  for (std::size_t a = 0; a < chosen.size(); ++a) {
    if (used[a]) continue;
    std::unordered_set<Bits> orbit;
    for (std::size_t t = 0; t < n; ++t) orbit.insert(conjugate_bits(subs[chosen[a]].bits, t));
    for (std::size_t b = a; b < chosen.size(); ++b) {
      if (orbit.count(subs[chosen[b]].bits)) used[b] = true;
    }
    const Sub& s = subs[chosen[a]];
    SubgroupClass c;
    for (std::size_t x = 0; x < n; ++x) {
      if (s.bits.test(x)) c.elements.push_back(L.elems[x]);
    }
    c.order = s.size;
    c.class_size = orbit.size();
    std::vector<Mat> gens;
    for (auto g : s.gens) gens.push_back(L.elems[g]);
    c.nilpotency_class = nilpotency_class(MatGroup(f, q, gens, false));
    classes.push_back(std::move(c));
  }
  return classes;
}

namespace {

// Rows of the linear conditions t x = y t on the n^2 entries of t.
void append_intertwining_rows(const Mat& x, const Mat& y, std::vector<Vec>& rows) {
  const Field& f = x.field();
  const unsigned n = x.n();
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      Vec row = zero_vec(f, n * n);
      for (unsigned k = 0; k < n; ++k) {
        row[i * n + k] = row[i * n + k] + x.at(k, j);
        row[k * n + j] = row[k * n + j] - y.at(i, k);
      }
      if (!is_zero(row)) rows.push_back(std::move(row));
    }
  }
}

Mat from_coords(const Field& f, unsigned n, const std::vector<Vec>& basis, const std::vector<FieldElem>& coef) {
  Mat m(f, n);
  for (std::size_t b = 0; b < basis.size(); ++b) {
    if (coef[b].is_zero()) continue;
    for (unsigned p = 0; p < n * n; ++p) m.set(p / n, p % n, m.at(p / n, p % n) + coef[b] * basis[b][p]);
  }
  return m;
}

}  // namespace

std::optional<Mat> invertible_in_span(const Field& f, unsigned n, const std::vector<Vec>& basis) {
  if (basis.empty()) return std::nullopt;
  const std::size_t r = basis.size();
  if (!f.is_finite()) {
    // Small integer combinations: the singular ones lie on a hypersurface.
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<int> dist(-3, 3);
    for (std::size_t b = 0; b < r; ++b) {
      std::vector<FieldElem> coef(r, f.zero());
      coef[b] = f.one();
      Mat m = from_coords(f, n, basis, coef);
      if (m.is_invertible()) return m;
    }
    for (int attempt = 0; attempt < 2000; ++attempt) {
      std::vector<FieldElem> coef;
      for (std::size_t b = 0; b < r; ++b) coef.push_back(f.from_int(dist(rng)));
      Mat m = from_coords(f, n, basis, coef);
      if (m.is_invertible()) return m;
    }
    return std::nullopt;
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::uint64_t> dist(0, f.size() - 1);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<FieldElem> coef;
    for (std::size_t b = 0; b < r; ++b) coef.emplace_back(f, dist(rng));
    Mat m = from_coords(f, n, basis, coef);
    if (m.is_invertible()) return m;
  }
  long double space = 1;
  for (std::size_t b = 0; b < r; ++b) space *= static_cast<long double>(f.size());
  if (space > 5e5L) {
    for (int attempt = 0; attempt < 20000; ++attempt) {
      std::vector<FieldElem> coef;
      for (std::size_t b = 0; b < r; ++b) coef.emplace_back(f, dist(rng));
      Mat m = from_coords(f, n, basis, coef);
      if (m.is_invertible()) return m;
    }
    throw DomainError("solution space too large to rule out an invertible element");
  }
  const std::uint64_t total = static_cast<std::uint64_t>(space);
  for (std::uint64_t code = 1; code < total; ++code) {
    std::vector<FieldElem> coef;
    std::uint64_t c = code;
    for (std::size_t b = 0; b < r; ++b) {
      coef.emplace_back(f, c % f.size());
      c /= f.size();
    }
    Mat m = from_coords(f, n, basis, coef);
    if (m.is_invertible()) return m;
  }
  return std::nullopt;
}

std::optional<Mat> element_conjugator(const Mat& a, const Mat& b) {
  if (a.charpoly() != b.charpoly()) return std::nullopt;
  std::vector<Vec> rows;
  append_intertwining_rows(a, b, rows);
  return invertible_in_span(a.field(), a.n(), nullspace(a.field(), rows, a.n() * a.n()));
}

std::optional<Mat> conjugator_search(const MatGroup& g1, const MatGroup& g2, ConjugacyMode mode) {
  const Field& f = g1.field();
  const unsigned n = g1.n();
  if (!f.is_finite()) throw DomainError("conjugator search needs a finite field");
  if (&g2.field() != &f || g2.n() != n) throw DomainError("groups live in different ambient groups");
  const bool projective = g1.scalars_adjoined() && g2.scalars_adjoined();
  const ElementSet& s1 = projective ? g1.projective_closure() : g1.elements();
  const ElementSet& s2 = projective ? g2.projective_closure() : g2.elements();
  if (mode == ConjugacyMode::equal ? s1.size() != s2.size() : s1.size() > s2.size()) return std::nullopt;
  if (!projective && g1.scalars_adjoined()) {
    for (std::uint64_t c = 1; c < f.size(); ++c) {
      if (!s2.contains(Mat::scalar(FieldElem(f, c), n))) return std::nullopt;
    }
  }
  const std::vector<Mat> gens = g1.nonscalar_generators();
  if (gens.empty()) return Mat::identity(f, n);

  std::vector<std::vector<Mat>> images(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Poly cp = gens[i].charpoly();
    std::unordered_set<std::string> keys;
    for (const auto& y : s2) {
      if (projective) {
        for (std::uint64_t c = 1; c < f.size(); ++c) {
          Mat z = y.scaled(FieldElem(f, c));
          if (z.charpoly() == cp && keys.insert(z.key()).second) images[i].push_back(std::move(z));
        }
      } else if (y.charpoly() == cp && keys.insert(y.key()).second) {
        images[i].push_back(y);
      }
    }
    if (images[i].empty()) return std::nullopt;
  }

  std::optional<Mat> found;
  std::function<void(std::size_t, const std::vector<Vec>&)> search = [&](std::size_t level,
                                                                          const std::vector<Vec>& rows) {
    if (found) return;
    const auto space = nullspace(f, rows, n * n);
    if (space.empty()) return;
    if (level == gens.size()) {
      auto t = invertible_in_span(f, n, space);
      if (t) found = t;
      return;
    }
    for (const auto& y : images[level]) {
      std::vector<Vec> next = rows;
      append_intertwining_rows(gens[level], y, next);
      search(level + 1, next);
      if (found) return;
    }
  };
  search(0, {});
  return found;
}

}  // namespace locnil
