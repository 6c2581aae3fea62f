#include "locnil/linalg.hpp"

#include <algorithm>

namespace locnil {

Vec zero_vec(const Field& f, unsigned n) { return Vec(n, f.zero()); }

Vec unit_vec(const Field& f, unsigned n, unsigned i) {
  Vec v = zero_vec(f, n);
  v[i] = f.one();
  return v;
}

Vec mul_vec(const Mat& m, const Vec& v) {
  const Field& f = m.field();
  Vec r = zero_vec(f, m.n());
  for (unsigned i = 0; i < m.n(); ++i) {
    FieldElem acc = f.zero();
    for (unsigned j = 0; j < m.n(); ++j) acc = acc + m.at(i, j) * v[j];
    r[i] = acc;
  }
  return r;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vec normalize_line(const Vec& v) {
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    const FieldElem inv = x.inverse();
    Vec r = v;
    for (auto& y : r) y = y * inv;
    return r;
  }
  throw DomainError("zero vector spans no line");
}

std::string vec_to_string(const Vec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i].to_string();
  }
  return s;
}

Vec EchelonBasis::reduce(Vec v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const unsigned p = pivots_[r];
    if (v[p].is_zero()) continue;
    const FieldElem c = v[p];
    for (unsigned j = p; j < n_; ++j) v[j] = v[j] - c * rows_[r][j];
  }
  return v;
}

bool EchelonBasis::add(const Vec& v) {
  if (v.size() != n_) throw DomainError("vector length mismatch");
  Vec w = reduce(v);
  unsigned p = 0;
  while (p < n_ && w[p].is_zero()) ++p;
  if (p == n_) return false;
  const FieldElem inv = w[p].inverse();
  for (unsigned j = p; j < n_; ++j) w[j] = w[j] * inv;
  // keep the basis fully reduced
  for (auto& row : rows_) {
    if (row[p].is_zero()) continue;
    const FieldElem c = row[p];
    for (unsigned j = p; j < n_; ++j) row[j] = row[j] - c * w[j];
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  rows_.insert(rows_.begin() + pos, std::move(w));
  pivots_.insert(pivots_.begin() + pos, p);
  return true;
}

bool EchelonBasis::contains(const Vec& v) const { return is_zero(reduce(v)); }

std::vector<Vec> nullspace(const Field& f, const std::vector<Vec>& rows, unsigned n) {
  std::vector<Vec> a = rows;
  std::vector<int> pivot_col_of_row;
  std::vector<int> row_of_col(n, -1);
  unsigned r = 0;
  for (unsigned c = 0; c < n && r < a.size(); ++c) {
    unsigned piv = r;
    while (piv < a.size() && a[piv][c].is_zero()) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[r], a[piv]);
    const FieldElem inv = a[r][c].inverse();
    for (unsigned j = c; j < n; ++j) a[r][j] = a[r][j] * inv;
    for (unsigned i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const FieldElem m = a[i][c];
      for (unsigned j = c; j < n; ++j) a[i][j] = a[i][j] - m * a[r][j];
    }
    row_of_col[c] = static_cast<int>(r);
    ++r;
  }
  std::vector<Vec> basis;
  for (unsigned free = 0; free < n; ++free) {
    if (row_of_col[free] >= 0) continue;
    Vec v = zero_vec(f, n);
    v[free] = f.one();
    for (unsigned c = 0; c < n; ++c) {
      if (row_of_col[c] >= 0) v[c] = -a[row_of_col[c]][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

EchelonBasis spin(const std::vector<Mat>& generators, const std::vector<Vec>& seeds) {
  if (generators.empty() && seeds.empty()) throw DomainError("spin needs generators or seeds");
  const Field& f = generators.empty() ? seeds.front().front().field() : generators.front().field();
  const unsigned n = generators.empty() ? static_cast<unsigned>(seeds.front().size()) : generators.front().n();
  EchelonBasis basis(f, n);
  std::vector<Vec> queue;
  for (const auto& s : seeds) {
    if (basis.add(s)) queue.push_back(s);
  }
  while (!queue.empty()) {
    Vec v = std::move(queue.back());
    queue.pop_back();
    for (const auto& g : generators) {
      Vec w = mul_vec(g, v);
      if (basis.add(w)) queue.push_back(std::move(w));
    }
  }
  return basis;
}

}  // namespace locnil
