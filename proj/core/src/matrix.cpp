#include "locnil/matrix.hpp"

#include <cstring>

namespace locnil {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t end = s.find(sep, start);
    out.push_back(strip(s.substr(start, end == std::string_view::npos ? end : end - start)));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

void check_compatible(const Mat& a, const Mat& b) {
  if (&a.field() != &b.field() || a.n() != b.n()) throw DomainError("matrices of different fields or sizes");
}

}  // namespace

Mat::Mat(const Field& f, unsigned n) : field_(&f), n_(n) {
  if (f.is_finite()) fin_.assign(n * n, 0);
  else rat_.assign(n * n, Rational(0));
}

Mat Mat::identity(const Field& f, unsigned n) { return scalar(f.one(), n); }

Mat Mat::scalar(const FieldElem& c, unsigned n) {
  Mat m(c.field(), n);
  for (unsigned i = 0; i < n; ++i) m.set(i, i, c);
  return m;
}

Mat Mat::diag(const std::vector<FieldElem>& entries) {
  if (entries.empty()) throw DomainError("empty diagonal");
  Mat m(entries.front().field(), static_cast<unsigned>(entries.size()));
  for (unsigned i = 0; i < m.n_; ++i) m.set(i, i, entries[i]);
  return m;
}

Mat Mat::from_rows(const Field& f, const std::vector<std::vector<FieldElem>>& rows) {
  const auto n = static_cast<unsigned>(rows.size());
  Mat m(f, n);
  for (unsigned i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw DomainError("matrix rows must form a square array");
    for (unsigned j = 0; j < n; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Mat Mat::parse(const Field& f, std::string_view text) {
  std::vector<std::vector<FieldElem>> rows;
  for (auto row : split(strip(text), ';')) {
    std::vector<FieldElem> r;
    for (auto entry : split(row, ',')) r.push_back(f.parse(entry));
    rows.push_back(std::move(r));
  }
  if (rows.size() < 1) throw ParseError("empty matrix literal");
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw ParseError("matrix literal is not square: '" + std::string(text) + "'");
  }
  return from_rows(f, rows);
}

FieldElem Mat::at(unsigned i, unsigned j) const {
  if (field_->is_finite()) return FieldElem(*field_, fin_[i * n_ + j]);
  return FieldElem(*field_, rat_[i * n_ + j]);
}

void Mat::set(unsigned i, unsigned j, const FieldElem& v) {
  if (&v.field() != field_) throw DomainError("matrix entry from a different field");
  if (field_->is_finite()) fin_[i * n_ + j] = v.code();
  else rat_[i * n_ + j] = v.rational();
}

Mat Mat::operator*(const Mat& o) const {
  check_compatible(*this, o);
  Mat r(*field_, n_);
  const unsigned n = n_;
  if (field_->is_prime_field()) {
    const std::uint64_t p = field_->characteristic();
    if (p < (1ULL << 28)) {
      for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
          std::uint64_t acc = 0;
          for (unsigned k = 0; k < n; ++k) acc += fin_[i * n + k] * o.fin_[k * n + j];
          r.fin_[i * n + j] = acc % p;
        }
      }
    } else {
      for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
          unsigned __int128 acc = 0;
          for (unsigned k = 0; k < n; ++k) acc += static_cast<unsigned __int128>(fin_[i * n + k]) * o.fin_[k * n + j];
          r.fin_[i * n + j] = static_cast<std::uint64_t>(acc % p);
        }
      }
    }
  } else if (field_->is_finite()) {
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = 0; j < n; ++j) {
        std::uint64_t acc = 0;
        for (unsigned k = 0; k < n; ++k) acc = field_->add_code(acc, field_->mul_code(fin_[i * n + k], o.fin_[k * n + j]));
        r.fin_[i * n + j] = acc;
      }
    }
  } else {
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = 0; j < n; ++j) {
        Rational acc = 0;
        for (unsigned k = 0; k < n; ++k) acc += rat_[i * n + k] * o.rat_[k * n + j];
        r.rat_[i * n + j] = acc;
      }
    }
  }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  check_compatible(*this, o);
  Mat r(*field_, n_);
  for (unsigned i = 0; i < n_ * n_; ++i) {
    if (field_->is_finite()) r.fin_[i] = field_->add_code(fin_[i], o.fin_[i]);
    else r.rat_[i] = rat_[i] + o.rat_[i];
  }
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  check_compatible(*this, o);
  Mat r(*field_, n_);
  for (unsigned i = 0; i < n_ * n_; ++i) {
    if (field_->is_finite()) r.fin_[i] = field_->sub_code(fin_[i], o.fin_[i]);
    else r.rat_[i] = rat_[i] - o.rat_[i];
  }
  return r;
}

Mat Mat::scaled(const FieldElem& c) const {
  if (&c.field() != field_) throw DomainError("scalar from a different field");
  Mat r(*field_, n_);
  for (unsigned i = 0; i < n_ * n_; ++i) {
    if (field_->is_finite()) r.fin_[i] = field_->mul_code(fin_[i], c.code());
    else r.rat_[i] = rat_[i] * c.rational();
  }
  return r;
}

bool Mat::operator==(const Mat& o) const {
  return field_ == o.field_ && n_ == o.n_ && fin_ == o.fin_ && rat_ == o.rat_;
}

FieldElem Mat::det() const {
  const unsigned n = n_;
  if (field_->is_finite()) {
    std::vector<std::uint64_t> a = fin_;
    std::uint64_t d = 1;
    for (unsigned c = 0; c < n; ++c) {
      unsigned piv = c;
      while (piv < n && a[piv * n + c] == 0) ++piv;
      if (piv == n) return field_->zero();
      if (piv != c) {
        for (unsigned j = 0; j < n; ++j) std::swap(a[c * n + j], a[piv * n + j]);
        d = field_->neg_code(d);
      }
      d = field_->mul_code(d, a[c * n + c]);
      const std::uint64_t inv = field_->inv_code(a[c * n + c]);
      for (unsigned i = c + 1; i < n; ++i) {
        if (a[i * n + c] == 0) continue;
        const std::uint64_t f = field_->mul_code(a[i * n + c], inv);
        for (unsigned j = c; j < n; ++j) a[i * n + j] = field_->sub_code(a[i * n + j], field_->mul_code(f, a[c * n + j]));
      }
    }
    return FieldElem(*field_, d);
  }
  // Bareiss over Z after clearing denominators row by row.
  std::vector<Integer> a(n * n);
  Rational scale = 1;
  for (unsigned i = 0; i < n; ++i) {
    Integer l = 1;
    for (unsigned j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), rat_[i * n + j].get_den_mpz_t());
    for (unsigned j = 0; j < n; ++j) a[i * n + j] = Integer(rat_[i * n + j] * l);
    scale *= l;
  }
  int sign = 1;
  Integer prev = 1;
  for (unsigned c = 0; c + 1 < n; ++c) {
    unsigned piv = c;
    while (piv < n && a[piv * n + c] == 0) ++piv;
    if (piv == n) return field_->zero();
    if (piv != c) {
      for (unsigned j = 0; j < n; ++j) std::swap(a[c * n + j], a[piv * n + j]);
      sign = -sign;
    }
    for (unsigned i = c + 1; i < n; ++i) {
      for (unsigned j = c + 1; j < n; ++j) {
        Integer t = a[i * n + j] * a[c * n + c] - a[i * n + c] * a[c * n + j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i * n + j] = t;
      }
    }
    prev = a[c * n + c];
  }
  Rational d(a[n * n - 1] * sign);
  d /= scale;
  return FieldElem(*field_, d);
}

FieldElem Mat::trace() const {
  FieldElem t = field_->zero();
  for (unsigned i = 0; i < n_; ++i) t = t + at(i, i);
  return t;
}

Mat Mat::inverse() const {
  const unsigned n = n_;
  std::vector<std::vector<FieldElem>> a(n, std::vector<FieldElem>(2 * n, field_->zero()));
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) a[i][j] = at(i, j);
    a[i][n + i] = field_->one();
  }
  for (unsigned c = 0; c < n; ++c) {
    unsigned piv = c;
    while (piv < n && a[piv][c].is_zero()) ++piv;
    if (piv == n) throw SingularMatrix();
    std::swap(a[c], a[piv]);
    const FieldElem inv = a[c][c].inverse();
    for (auto& x : a[c]) x = x * inv;
    for (unsigned i = 0; i < n; ++i) {
      if (i == c || a[i][c].is_zero()) continue;
      const FieldElem f = a[i][c];
      for (unsigned j = c; j < 2 * n; ++j) a[i][j] = a[i][j] - f * a[c][j];
    }
  }
  Mat r(*field_, n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) r.set(i, j, a[i][n + j]);
  }
  return r;
}

Mat Mat::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  Mat r = identity(*field_, n_), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Mat Mat::transpose() const {
  Mat r(*field_, n_);
  for (unsigned i = 0; i < n_; ++i) {
    for (unsigned j = 0; j < n_; ++j) r.set(j, i, at(i, j));
  }
  return r;
}

Poly Mat::charpoly() const {
  // Reduce to upper Hessenberg form by similarity, then use the standard recurrence.
  const unsigned n = n_;
  std::vector<std::vector<FieldElem>> h(n, std::vector<FieldElem>(n));
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) h[i][j] = at(i, j);
  }
  for (unsigned m = 1; m + 1 < n; ++m) {
    unsigned piv = m;
    while (piv < n && h[piv][m - 1].is_zero()) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      std::swap(h[piv], h[m]);
      for (unsigned i = 0; i < n; ++i) std::swap(h[i][piv], h[i][m]);
    }
    const FieldElem inv = h[m][m - 1].inverse();
    for (unsigned i = m + 1; i < n; ++i) {
      if (h[i][m - 1].is_zero()) continue;
      const FieldElem u = h[i][m - 1] * inv;
      for (unsigned j = 0; j < n; ++j) h[i][j] = h[i][j] - u * h[m][j];
      for (unsigned j = 0; j < n; ++j) h[j][m] = h[j][m] + u * h[j][i];
    }
  }
  const Field& f = *field_;
  std::vector<Poly> p(n + 1);
  p[0] = Poly::constant(f.one());
  const Poly x = Poly::x(f);
  for (unsigned k = 1; k <= n; ++k) {
    p[k] = (x - Poly::constant(h[k - 1][k - 1])) * p[k - 1];
    FieldElem t = f.one();
    for (unsigned i = 1; i < k; ++i) {
      t = t * h[k - i][k - i - 1];
      p[k] = p[k] - p[k - i - 1] * (t * h[k - i - 1][k - 1]);
    }
  }
  return p[n];
}

bool Mat::is_zero() const {
  for (unsigned i = 0; i < n_ * n_; ++i) {
    if (field_->is_finite() ? fin_[i] != 0 : rat_[i] != 0) return false;
  }
  return true;
}

bool Mat::is_diagonal() const {
  for (unsigned i = 0; i < n_; ++i) {
    for (unsigned j = 0; j < n_; ++j) {
      if (i != j && !(field_->is_finite() ? fin_[i * n_ + j] == 0 : rat_[i * n_ + j] == 0)) return false;
    }
  }
  return true;
}

bool Mat::is_scalar() const {
  if (!is_diagonal()) return false;
  for (unsigned i = 1; i < n_; ++i) {
    if (field_->is_finite() ? fin_[i * n_ + i] != fin_[0] : rat_[i * n_ + i] != rat_[0]) return false;
  }
  return true;
}

bool Mat::is_identity() const { return is_scalar() && at(0, 0).is_one(); }

FieldElem Mat::scalar_value() const {
  if (!is_scalar()) throw DomainError("matrix is not scalar");
  return at(0, 0);
}

Mat Mat::projective_canonical() const {
  for (unsigned i = 0; i < n_ * n_; ++i) {
    if (field_->is_finite()) {
      if (fin_[i] == 0) continue;
      if (fin_[i] == 1) return *this;
      return scaled(FieldElem(*field_, field_->inv_code(fin_[i])));
    }
    if (rat_[i] == 0) continue;
    if (rat_[i] == 1) return *this;
    return scaled(FieldElem(*field_, Rational(1 / rat_[i])));
  }
  throw DomainError("zero matrix has no projective class");
}

std::string Mat::key() const {
  if (field_->is_finite()) {
    const std::uint64_t size = field_->size();
    const std::size_t width = size <= 256 ? 1 : size <= 65536 ? 2 : size <= (1ULL << 32) ? 4 : 8;
    std::string k(fin_.size() * width, '\0');
    for (std::size_t i = 0; i < fin_.size(); ++i) {
      std::uint64_t v = fin_[i];
      std::memcpy(k.data() + i * width, &v, width);  // little-endian low bytes
    }
    return k;
  }
  return to_string();
}

std::string Mat::to_string() const {
  std::string s;
  for (unsigned i = 0; i < n_; ++i) {
    if (i) s += ';';
    for (unsigned j = 0; j < n_; ++j) {
      if (j) s += ',';
      s += at(i, j).to_string();
    }
  }
  return s;
}

std::vector<std::vector<std::string>> Mat::row_strings() const {
  std::vector<std::vector<std::string>> rows(n_);
  for (unsigned i = 0; i < n_; ++i) {
    for (unsigned j = 0; j < n_; ++j) rows[i].push_back(at(i, j).to_string());
  }
  return rows;
}

std::vector<FieldElem> Mat::flatten() const {
  std::vector<FieldElem> v;
  v.reserve(n_ * n_);
  for (unsigned i = 0; i < n_; ++i) {
    for (unsigned j = 0; j < n_; ++j) v.push_back(at(i, j));
  }
  return v;
}

Mat conjugate(const Mat& t, const Mat& m) { return t * m * t.inverse(); }

Mat commutator(const Mat& a, const Mat& b) { return a.inverse() * b.inverse() * a * b; }

Mat evaluate(const Poly& p, const Mat& m) {
  Mat r(m.field(), m.n());
  const Mat id = Mat::identity(m.field(), m.n());
  for (std::size_t i = p.coeffs().size(); i-- > 0;) r = r * m + id.scaled(p.coeffs()[i]);
  return r;
}

}  // namespace locnil
