#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace locnil::testing {

FieldElem random_elem(const Field& f, Rng& rng) {
  return FieldElem(f, std::uniform_int_distribution<std::uint64_t>(0, f.size() - 1)(rng));
}

FieldElem random_unit(const Field& f, Rng& rng) {
  return FieldElem(f, std::uniform_int_distribution<std::uint64_t>(1, f.size() - 1)(rng));
}

Mat random_mat(const Field& f, unsigned n, Rng& rng) {
  Mat m(f, n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) m.set(i, j, random_elem(f, rng));
  }
  return m;
}

Mat random_invertible(const Field& f, unsigned n, Rng& rng) {
  for (;;) {
    Mat m = f.is_finite() ? random_mat(f, n, rng) : random_rational_mat(f, n, rng);
    if (m.is_invertible()) return m;
  }
}

Mat random_rational_mat(const Field& q, unsigned n, Rng& rng, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound), den(1, 4);
  Mat m(q, n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) m.set(i, j, q.from_rational(Rational(d(rng), den(rng))));
  }
  return m;
}

std::vector<Mat> all_invertible(const Field& f, unsigned n) {
  std::vector<Mat> out;
  const std::uint64_t s = f.size();
  std::uint64_t total = 1;
  for (unsigned i = 0; i < n * n; ++i) total *= s;
  for (std::uint64_t code = 0; code < total; ++code) {
    Mat m(f, n);
    std::uint64_t c = code;
    for (unsigned i = 0; i < n * n; ++i, c /= s) m.set(i / n, i % n, FieldElem(f, c % s));
    if (m.is_invertible()) out.push_back(std::move(m));
  }
  return out;
}

Mat naive_mul(const Mat& a, const Mat& b) {
  const unsigned n = a.n();
  Mat c(a.field(), n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      FieldElem s = a.field().zero();
      for (unsigned k = 0; k < n; ++k) s = s + a.at(i, k) * b.at(k, j);
      c.set(i, j, s);
    }
  }
  return c;
}

FieldElem leibniz_det(const Mat& m) {
  const unsigned n = m.n();
  std::vector<unsigned> p(n);
  std::iota(p.begin(), p.end(), 0u);
  FieldElem total = m.field().zero();
  do {
    int inversions = 0;
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    }
    FieldElem term = m.field().one();
    for (unsigned i = 0; i < n; ++i) term = term * m.at(i, p[i]);
    total = inversions % 2 ? total - term : total + term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

namespace {

struct KeySet {
  std::set<std::string> keys;
  std::vector<Mat> elems;
  bool add(const Mat& m) {
    if (!keys.insert(m.key()).second) return false;
    elems.push_back(m);
    return true;
  }
};

std::vector<Mat> close_set(std::vector<Mat> seeds, const Mat& identity) {
  KeySet s;
  s.add(identity);
  for (const auto& m : seeds) s.add(m);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Mat> cur = s.elems;
    for (const auto& a : cur) {
      for (const auto& b : cur) grew = s.add(naive_mul(a, b)) || grew;
    }
  }
  return s.elems;
}

}  // namespace

std::vector<Mat> naive_closure(const std::vector<Mat>& gens) {
  return close_set(gens, Mat::identity(gens.front().field(), gens.front().n()));
}

bool same_set(const std::vector<Mat>& a, const std::vector<Mat>& b) {
  std::set<std::string> ka, kb;
  for (const auto& m : a) ka.insert(m.key());
  for (const auto& m : b) kb.insert(m.key());
  return ka == kb;
}

std::optional<unsigned> naive_nilpotency_class(const std::vector<Mat>& elems) {
  const Mat id = Mat::identity(elems.front().field(), elems.front().n());
  std::vector<Mat> cur = elems;
  for (unsigned c = 0; c <= 64; ++c) {
    if (cur.size() == 1) return c;
    std::vector<Mat> comms;
    std::set<std::string> seen;
    for (const auto& g : elems) {
      for (const auto& h : cur) {
        const Mat x = g.inverse() * h.inverse() * g * h;
        if (seen.insert(x.key()).second) comms.push_back(x);
      }
    }
    std::vector<Mat> next = close_set(comms, id);
    if (next.size() == cur.size()) return std::nullopt;
    cur = std::move(next);
  }
  return std::nullopt;
}

bool brute_is_qth_power(const FieldElem& x, unsigned q) {
  const Field& f = x.field();
  for (std::uint64_t c = 0; c < f.size(); ++c) {
    if (FieldElem(f, c).pow(q) == x) return true;
  }
  return false;
}

bool brute_in_S(const FieldElem& x, unsigned q) {
  const Field& f = x.field();
  for (std::uint64_t c = 1; c < f.size(); ++c) {
    const FieldElem s(f, c);
    std::uint64_t o = 1;
    for (FieldElem y = s; !y.is_one(); y = y * s) ++o;
    while (o % q == 0) o /= q;
    if (o != 1) continue;
    for (std::uint64_t d = 1; d < f.size(); ++d) {
      if (s * FieldElem(f, d).pow(q) == x) return true;
    }
  }
  return false;
}

namespace {

std::vector<std::vector<FieldElem>> all_vectors(const Field& f, unsigned n) {
  std::vector<std::vector<FieldElem>> out{{}};
  for (unsigned i = 0; i < n; ++i) {
    std::vector<std::vector<FieldElem>> next;
    for (const auto& v : out) {
      for (std::uint64_t c = 0; c < f.size(); ++c) {
        next.push_back(v);
        next.back().emplace_back(f, c);
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<FieldElem> image_of(const Mat& m, const std::vector<FieldElem>& v) {
  std::vector<FieldElem> out;
  for (unsigned i = 0; i < m.n(); ++i) {
    FieldElem s = m.field().zero();
    for (unsigned j = 0; j < m.n(); ++j) s = s + m.at(i, j) * v[j];
    out.push_back(s);
  }
  return out;
}

bool nonzero(const std::vector<FieldElem>& v) {
  return std::any_of(v.begin(), v.end(), [](const FieldElem& x) { return !x.is_zero(); });
}

bool parallel(const std::vector<FieldElem>& a, const std::vector<FieldElem>& b) {
  // a and b nonzero: all 2x2 minors vanish
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (!(a[i] * b[j] - a[j] * b[i]).is_zero()) return false;
    }
  }
  return true;
}

bool invariant_line(const std::vector<Mat>& gens, const std::vector<FieldElem>& v) {
  return std::all_of(gens.begin(), gens.end(), [&](const Mat& g) { return parallel(image_of(g, v), v); });
}

}  // namespace

bool brute_reducible(const std::vector<Mat>& gens) {
  const Field& f = gens.front().field();
  const unsigned n = gens.front().n();
  const auto vecs = all_vectors(f, n);
  for (const auto& v : vecs) {
    if (nonzero(v) && invariant_line(gens, v)) return true;
  }
  if (n < 3) return false;
  // an invariant plane of G is an invariant line of the transposes
  std::vector<Mat> t;
  for (const auto& g : gens) t.push_back(g.transpose());
  for (const auto& v : vecs) {
    if (nonzero(v) && invariant_line(t, v)) return true;
  }
  return false;
}

bool brute_monomial(const std::vector<Mat>& gens) {
  const Field& f = gens.front().field();
  std::vector<std::vector<FieldElem>> lines;
  for (const auto& v : all_vectors(f, 2)) {
    if (!nonzero(v)) continue;
    bool seen = false;
    for (const auto& l : lines) seen = seen || parallel(l, v);
    if (!seen) lines.push_back(v);
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      bool ok = true;
      for (const auto& g : gens) {
        const auto a = image_of(g, lines[i]), b = image_of(g, lines[j]);
        ok = ok && ((parallel(a, lines[i]) && parallel(b, lines[j])) ||
                    (parallel(a, lines[j]) && parallel(b, lines[i])));
      }
      if (ok) return true;
    }
  }
  return false;
}

std::optional<Mat> brute_conjugator(const std::vector<Mat>& g1, const std::vector<Mat>& g2) {
  if (g1.size() != g2.size()) return std::nullopt;
  std::set<std::string> target;
  for (const auto& m : g2) target.insert(m.key());
  for (const auto& t : all_invertible(g1.front().field(), g1.front().n())) {
    const Mat ti = t.inverse();
    bool ok = true;
    for (const auto& m : g1) {
      if (!target.count((t * m * ti).key())) {
        ok = false;
        break;
      }
    }
    if (ok) return t;
  }
  return std::nullopt;
}

bool brute_conjugate_elements(const Mat& a, const Mat& b) {
  for (const auto& t : all_invertible(a.field(), a.n())) {
    if (t * a == b * t) return true;
  }
  return false;
}

}  // namespace locnil::testing
