#include "locnil/field.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <mutex>
#include <unordered_map>

namespace locnil {

namespace {

constexpr std::uint64_t kMaxUnitOrder = 1ULL << 40;
constexpr std::uint64_t kTableLimit = 1ULL << 20;

using GfPoly = std::vector<std::uint64_t>;  // coefficients over GF(p), low to high

void trim(GfPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

GfPoly poly_mod(GfPoly a, const GfPoly& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = powmod_u64(m.back(), p - 2, p);
  while (a.size() > dm && !a.empty()) {
    const std::uint64_t c = mulmod_u64(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + p - mulmod_u64(c, m[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

GfPoly poly_mulmod(const GfPoly& a, const GfPoly& b, const GfPoly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  GfPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + mulmod_u64(a[i], b[j], p)) % p;
    }
  }
  return poly_mod(std::move(r), m, p);
}

GfPoly poly_powmod(GfPoly base, std::uint64_t e, const GfPoly& m, std::uint64_t p) {
  GfPoly r{1};
  base = poly_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

GfPoly poly_gcd(GfPoly a, GfPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    GfPoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin's test for a monic f of degree k over GF(p).
bool gf_irreducible(const GfPoly& f, std::uint64_t p) {
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  const GfPoly x{0, 1};
  std::vector<GfPoly> frob(k + 1);  // frob[i] = X^{p^i} mod f
  frob[0] = poly_mod(x, f, p);
  for (unsigned i = 1; i <= k; ++i) frob[i] = poly_powmod(frob[i - 1], p, f, p);
  if (frob[k] != poly_mod(x, f, p)) return false;
  for (auto [l, e] : factor_u64(k)) {
    (void)e;
    GfPoly h = frob[k / l];
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    GfPoly g = poly_gcd(h, f, p);
    if (g.size() != 1) return false;
  }
  return true;
}

long long parse_ll(std::string_view s) {
  long long v = 0;
  auto first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || first == s.data() + s.size()) {
    throw ParseError("not an integer: '" + std::string(s) + "'");
  }
  return v;
}

std::uint64_t parse_u64(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("not a nonnegative integer: '" + std::string(s) + "'");
  }
  return v;
}

std::uint64_t reduce_signed(long long v, std::uint64_t p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += static_cast<long long>(p);
  return static_cast<std::uint64_t>(r);
}

}  // namespace

FieldPtr make_field(std::string_view spec) {
  static std::mutex mutex;
  static std::unordered_map<std::string, FieldPtr> registry;

  std::string key(spec);
  {
    std::lock_guard lock(mutex);
    if (auto it = registry.find(key); it != registry.end()) return it->second;
  }

  FieldPtr field;
  if (spec == "q" || spec == "Q") {
    field = Field::make_rational();
  } else if (spec.rfind("gf:", 0) == 0) {
    std::string_view body = spec.substr(3);
    std::uint64_t p = 0;
    unsigned k = 1;
    if (auto caret = body.find('^'); caret != std::string_view::npos) {
      p = parse_u64(body.substr(0, caret));
      k = static_cast<unsigned>(parse_u64(body.substr(caret + 1)));
      if (k == 0) throw ParseError("extension degree must be >= 1 in '" + key + "'");
    } else {
      p = parse_u64(body);
    }
    if (!is_prime_u64(p)) {
      throw DomainError("characteristic " + std::to_string(p) + " is not prime in '" + key +
                        "' (prime powers are written gf:p^k)");
    }
    field = Field::make_finite(p, k);
  } else {
    throw ParseError("unrecognized field descriptor '" + key + "' (expected gf:p, gf:p^k or q)");
  }

  std::lock_guard lock(mutex);
  auto [it, inserted] = registry.emplace(key, field);
  if (inserted) registry.emplace(field->descriptor(), field);
  return it->second;
}

FieldPtr Field::make_rational() {
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = FieldKind::rational;
  f->descriptor_ = "q";
  return f;
}

FieldPtr Field::make_finite(std::uint64_t p, unsigned k) {
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = FieldKind::finite;
  f->p_ = p;
  f->k_ = k;
  std::uint64_t size = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (size > kMaxUnitOrder / p + 1) throw DomainError("field too large (|F^x| capped at 2^40)");
    size *= p;
  }
  if (size - 1 > kMaxUnitOrder) throw DomainError("field too large (|F^x| capped at 2^40)");
  f->size_ = size;
  f->descriptor_ = k == 1 ? "gf:" + std::to_string(p) : "gf:" + std::to_string(p) + "^" + std::to_string(k);

  if (k == 1) {
    f->modulus_ = {0, 1};
  } else {
    // Least monic irreducible: scan lower coefficients in increasing code order.
    for (std::uint64_t code = 1; code < size; ++code) {
      GfPoly cand(k + 1, 0);
      std::uint64_t c = code;
      for (unsigned i = 0; i < k; ++i) {
        cand[i] = c % p;
        c /= p;
      }
      cand[k] = 1;
      if (cand[0] == 0) continue;
      if (gf_irreducible(cand, p)) {
        f->modulus_ = std::move(cand);
        break;
      }
    }
    if (f->modulus_.empty()) throw Error("no irreducible polynomial found");
  }

  const std::uint64_t n = size - 1;
  f->unit_factors_ = n > 1 ? factor_u64(n) : decltype(f->unit_factors_){};
  f->primitive_root_ = 1;
  if (n > 1) {
    for (std::uint64_t g = 2; g < size; ++g) {
      bool generator = true;
      for (auto [l, e] : f->unit_factors_) {
        (void)e;
        if (f->pow_code(g, n / l) == 1) {
          generator = false;
          break;
        }
      }
      if (generator) {
        f->primitive_root_ = g;
        break;
      }
    }
  }
  if (size <= kTableLimit) {
    f->exp_.resize(n);
    f->log_.assign(size, 0);
    std::uint64_t x = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
      f->exp_[i] = static_cast<std::uint32_t>(x);
      f->log_[x] = static_cast<std::uint32_t>(i);
      x = f->k_ == 1 ? mulmod_u64(x, f->primitive_root_, p) : f->poly_mul_code(x, f->primitive_root_);
    }
  }
  return f;
}

std::uint64_t Field::poly_mul_code(std::uint64_t a, std::uint64_t b) const {
  GfPoly pa(k_), pb(k_);
  for (unsigned i = 0; i < k_; ++i) {
    pa[i] = a % p_;
    a /= p_;
    pb[i] = b % p_;
    b /= p_;
  }
  GfPoly r = poly_mulmod(pa, pb, modulus_, p_);
  std::uint64_t code = 0;
  for (std::size_t i = r.size(); i-- > 0;) code = code * p_ + r[i];
  return code;
}

std::uint64_t Field::add_code(std::uint64_t a, std::uint64_t b) const {
  if (k_ == 1) {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t r = 0, scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    std::uint64_t d = a % p_ + b % p_;
    if (d >= p_) d -= p_;
    r += d * scale;
    scale *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

std::uint64_t Field::neg_code(std::uint64_t a) const {
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  std::uint64_t r = 0, scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    std::uint64_t d = a % p_;
    r += (d == 0 ? 0 : p_ - d) * scale;
    scale *= p_;
    a /= p_;
  }
  return r;
}

std::uint64_t Field::sub_code(std::uint64_t a, std::uint64_t b) const { return add_code(a, neg_code(b)); }

std::uint64_t Field::mul_code(std::uint64_t a, std::uint64_t b) const {
  if (k_ == 1) {
    if (p_ < (1ULL << 32)) return a * b % p_;
    return mulmod_u64(a, b, p_);
  }
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) {
    std::uint64_t e = static_cast<std::uint64_t>(log_[a]) + log_[b];
    const std::uint64_t n = size_ - 1;
    if (e >= n) e -= n;
    return exp_[e];
  }
  return poly_mul_code(a, b);
}

std::uint64_t Field::pow_code(std::uint64_t a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  if (!exp_.empty()) {
    const std::uint64_t n = size_ - 1;
    return exp_[mulmod_u64(log_[a], e % n, n)];
  }
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul_code(r, a);
    a = mul_code(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t Field::inv_code(std::uint64_t a) const {
  if (a == 0) throw DomainError("division by zero");
  if (!exp_.empty()) {
    const std::uint64_t n = size_ - 1;
    return exp_[(n - log_[a]) % n];
  }
  return pow_code(a, size_ - 2);
}

std::uint64_t Field::dlog_code(std::uint64_t a) const {
  if (a == 0) throw DomainError("discrete log of zero");
  if (!log_.empty()) return log_[a];
  // baby-step giant-step
  const std::uint64_t n = size_ - 1;
  const auto m = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  std::unordered_map<std::uint64_t, std::uint64_t> baby;
  baby.reserve(m * 2);
  std::uint64_t x = 1;
  for (std::uint64_t j = 0; j < m; ++j) {
    baby.emplace(x, j);
    x = mul_code(x, primitive_root_);
  }
  const std::uint64_t giant = inv_code(pow_code(primitive_root_, m));
  std::uint64_t y = a;
  for (std::uint64_t i = 0; i <= m; ++i) {
    if (auto it = baby.find(y); it != baby.end()) return (i * m + it->second) % n;
    y = mul_code(y, giant);
  }
  throw Error("discrete log failed");
}

std::uint64_t Field::order_code(std::uint64_t a) const {
  if (a == 0) throw DomainError("order of zero");
  std::uint64_t ord = size_ - 1;
  for (auto [l, e] : unit_factors_) {
    (void)e;
    while (ord % l == 0 && pow_code(a, ord / l) == 1) ord /= l;
  }
  return ord;
}

std::string Field::format_code(std::uint64_t a) const {
  if (k_ == 1) return std::to_string(a);
  std::string s;
  for (unsigned i = 0; i < k_; ++i) {
    if (i) s += ':';
    s += std::to_string(a % p_);
    a /= p_;
  }
  return s;
}

FieldElem Field::zero() const {
  return is_finite() ? FieldElem(*this, std::uint64_t{0}) : FieldElem(*this, Rational(0));
}

FieldElem Field::one() const {
  return is_finite() ? FieldElem(*this, std::uint64_t{1}) : FieldElem(*this, Rational(1));
}

FieldElem Field::from_int(long long v) const {
  if (!is_finite()) return FieldElem(*this, Rational(static_cast<long>(v)));
  return FieldElem(*this, reduce_signed(v, p_));
}

FieldElem Field::from_rational(const Rational& r) const {
  if (!is_finite()) return FieldElem(*this, r);
  Integer num = r.get_num(), den = r.get_den();
  Integer pm(static_cast<unsigned long>(p_));
  num %= pm;
  if (num < 0) num += pm;
  den %= pm;
  if (den == 0) throw DomainError("denominator divisible by the characteristic");
  FieldElem n(*this, num.get_ui()), d(*this, den.get_ui());
  return n / d;
}

FieldElem Field::primitive_root() const {
  if (!is_finite()) throw DomainError("the rationals have no primitive root");
  return FieldElem(*this, primitive_root_);
}

FieldElem Field::parse(std::string_view text) const {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty field element");
  if (!is_finite()) {
    Rational r;
    if (r.set_str(std::string(text[0] == '+' ? text.substr(1) : text), 10) != 0) {
      throw ParseError("not a rational number: '" + std::string(text) + "'");
    }
    if (r.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    r.canonicalize();
    return FieldElem(*this, r);
  }
  if (text.find(':') != std::string_view::npos) {
    std::uint64_t code = 0, scale = 1;
    unsigned count = 0;
    std::size_t start = 0;
    while (true) {
      std::size_t end = text.find(':', start);
      std::string_view part = text.substr(start, end == std::string_view::npos ? end : end - start);
      if (++count > k_) throw ParseError("too many coefficients for " + descriptor_);
      code += reduce_signed(parse_ll(part), p_) * scale;
      scale *= p_;
      if (end == std::string_view::npos) break;
      start = end + 1;
    }
    return FieldElem(*this, code);
  }
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return from_int(parse_ll(text.substr(0, slash))) / from_int(parse_ll(text.substr(slash + 1)));
  }
  return from_int(parse_ll(text));
}

FieldElem::FieldElem(const Field& f, Rational r) : field_(&f), value_(std::move(r)) {
  std::get<Rational>(value_).canonicalize();
}

bool FieldElem::is_zero() const {
  if (field_->is_finite()) return code() == 0;
  return rational() == 0;
}

bool FieldElem::is_one() const {
  if (field_->is_finite()) return code() == 1;
  return rational() == 1;
}

namespace {
void check_same(const FieldElem& a, const FieldElem& b) {
  if (&a.field() != &b.field()) throw DomainError("field elements from different fields");
}
}  // namespace

FieldElem FieldElem::operator+(const FieldElem& o) const {
  check_same(*this, o);
  if (field_->is_finite()) return FieldElem(*field_, field_->add_code(code(), o.code()));
  return FieldElem(*field_, Rational(rational() + o.rational()));
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  check_same(*this, o);
  if (field_->is_finite()) return FieldElem(*field_, field_->sub_code(code(), o.code()));
  return FieldElem(*field_, Rational(rational() - o.rational()));
}

FieldElem FieldElem::operator-() const {
  if (field_->is_finite()) return FieldElem(*field_, field_->neg_code(code()));
  return FieldElem(*field_, Rational(-rational()));
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  check_same(*this, o);
  if (field_->is_finite()) return FieldElem(*field_, field_->mul_code(code(), o.code()));
  return FieldElem(*field_, Rational(rational() * o.rational()));
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  if (field_->is_finite()) return FieldElem(*field_, field_->inv_code(code()));
  return FieldElem(*field_, Rational(1 / rational()));
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inverse(); }

FieldElem FieldElem::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  if (field_->is_finite()) return FieldElem(*field_, field_->pow_code(code(), static_cast<std::uint64_t>(e)));
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), rational().get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), rational().get_den_mpz_t(), static_cast<unsigned long>(e));
  return FieldElem(*field_, r);
}

bool FieldElem::operator==(const FieldElem& o) const {
  if (field_ != o.field_) return false;
  if (field_->is_finite()) return code() == o.code();
  return rational() == o.rational();
}

std::string FieldElem::to_string() const {
  if (field_->is_finite()) return field_->format_code(code());
  return rational().get_str();
}

bool has_order_q_element(const Field& f, unsigned q) {
  if (!is_prime_u64(q)) throw DomainError("q must be prime");
  if (f.is_finite()) return f.unit_order() % q == 0;
  return q == 2;
}

CyclicSubgroup sylow_q_units(const Field& f, unsigned q) {
  if (!is_prime_u64(q)) throw DomainError("q must be prime");
  if (!f.is_finite()) {
    if (q == 2) return {f.from_int(-1), 2};
    return {f.one(), 1};
  }
  const std::uint64_t n = f.unit_order();
  const std::uint64_t qa = prime_part(n, q);
  return {FieldElem(f, f.pow_code(f.primitive_root_code(), n / qa)), qa};
}

namespace {
std::uint64_t finite_class_index(const Field& f, unsigned q, PowerMode mode) {
  const std::uint64_t n = f.unit_order();
  if (mode == PowerMode::qth_powers) return gcd_u64(q, n);
  // S = <g^{n/q^a}, g^q>
  const std::uint64_t qa = prime_part(n, q);
  return gcd_u64(gcd_u64(n / qa, q), n);
}
}  // namespace

std::optional<std::uint64_t> s_subgroup_index(const Field& f, unsigned q) {
  if (!has_order_q_element(f, q)) throw DomainError("F^x has no element of order q");
  if (f.is_finite()) return finite_class_index(f, q, PowerMode::mod_S);
  return std::nullopt;
}

std::optional<FieldElem> qth_root(const FieldElem& x, unsigned q) {
  const Field& f = x.field();
  if (x.is_zero()) return x;
  if (f.is_finite()) {
    const std::uint64_t n = f.unit_order();
    const std::uint64_t e = f.dlog_code(x.code());
    const std::uint64_t g = gcd_u64(q, n);
    if (e % g != 0) return std::nullopt;
    const std::uint64_t n2 = n / g;
    std::uint64_t y = 0;
    if (n2 > 1) {
      // q/g is invertible modulo n/g
      Integer inv;
      Integer qg(static_cast<unsigned long>(q / g)), mod(static_cast<unsigned long>(n2));
      mpz_invert(inv.get_mpz_t(), qg.get_mpz_t(), mod.get_mpz_t());
      y = mulmod_u64((e / g) % n2, inv.get_ui(), n2);
    }
    FieldElem r(f, f.pow_code(f.primitive_root_code(), y));
    if (r.pow(q) != x) throw Error("q-th root computation failed");
    return r;
  }
  const Rational& r = x.rational();
  if (r < 0 && q % 2 == 0) return std::nullopt;
  Integer num = abs(r.get_num()), den = r.get_den(), rn, rd;
  if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), q)) return std::nullopt;
  if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), q)) return std::nullopt;
  Rational root(rn, rd);
  if (r < 0) root = -root;
  return FieldElem(f, root);
}

PowerClass PowerClass::identity(const Field& f, unsigned q, PowerMode mode) {
  PowerClass c;
  c.field_ = &f;
  c.q_ = q;
  c.mode_ = mode;
  if (f.is_finite()) c.index_ = finite_class_index(f, q, mode);
  return c;
}

PowerClass PowerClass::of(const FieldElem& x, unsigned q, PowerMode mode) {
  if (x.is_zero()) throw DomainError("power class of zero");
  if (!is_prime_u64(q)) throw DomainError("q must be prime");
  PowerClass c = identity(x.field(), q, mode);
  if (x.field().is_finite()) {
    c.exponent_ = x.field().dlog_code(x.code()) % c.index_;
    return c;
  }
  const Rational& r = x.rational();
  c.sign_ = r < 0 ? -1 : 1;
  if (r.get_num() != 1 && r.get_num() != -1) {
    for (auto& [prime, e] : factor_integer(r.get_num())) c.primes_[prime] = (c.primes_[prime] + e) % q;
  }
  if (r.get_den() != 1) {
    for (auto& [prime, e] : factor_integer(r.get_den())) {
      c.primes_[prime] = (c.primes_[prime] + (q - e % q)) % q;
    }
  }
  c.normalize();
  return c;
}

void PowerClass::normalize() {
  if (!field_->is_finite()) {
    for (auto it = primes_.begin(); it != primes_.end();) {
      it->second %= q_;
      it = it->second == 0 ? primes_.erase(it) : std::next(it);
    }
    // -1 is a q-th power for odd q; mod S it is absorbed by Syl_2 = {+-1}.
    if (q_ % 2 == 1 || mode_ == PowerMode::mod_S) sign_ = 1;
  } else {
    exponent_ %= index_;
  }
}

FieldElem PowerClass::representative() const {
  if (field_->is_finite()) return FieldElem(*field_, field_->pow_code(field_->primitive_root_code(), exponent_));
  Integer v = sign_;
  for (auto& [prime, e] : primes_) {
    Integer t;
    mpz_pow_ui(t.get_mpz_t(), prime.get_mpz_t(), e);
    v *= t;
  }
  return FieldElem(*field_, Rational(v));
}

bool PowerClass::is_trivial() const {
  if (field_->is_finite()) return exponent_ == 0;
  return sign_ == 1 && primes_.empty();
}

std::uint64_t PowerClass::order() const {
  if (field_->is_finite()) return index_ / gcd_u64(exponent_, index_);
  return is_trivial() ? 1 : q_;
}

PowerClass PowerClass::operator*(const PowerClass& o) const {
  if (field_ != o.field_ || q_ != o.q_ || mode_ != o.mode_) throw DomainError("incompatible power classes");
  PowerClass r = *this;
  if (field_->is_finite()) {
    r.exponent_ = (exponent_ + o.exponent_) % index_;
    return r;
  }
  r.sign_ = sign_ * o.sign_;
  for (auto& [prime, e] : o.primes_) r.primes_[prime] += e;
  r.normalize();
  return r;
}

PowerClass PowerClass::pow(long long e) const {
  PowerClass r = *this;
  if (field_->is_finite()) {
    long long m = static_cast<long long>(index_);
    long long ee = ((e % m) + m) % m;
    r.exponent_ = mulmod_u64(exponent_, static_cast<std::uint64_t>(ee), index_);
    return r;
  }
  long long qq = q_;
  long long ee = ((e % qq) + qq) % qq;
  r.sign_ = (e % 2 == 0) ? 1 : sign_;
  for (auto& [prime, x] : r.primes_) x = static_cast<unsigned>((x * ee) % qq);
  r.normalize();
  return r;
}

bool PowerClass::operator==(const PowerClass& o) const {
  return field_ == o.field_ && q_ == o.q_ && mode_ == o.mode_ && exponent_ == o.exponent_ && sign_ == o.sign_ &&
         primes_ == o.primes_;
}

bool PowerClass::operator<(const PowerClass& o) const {
  if (field_->is_finite()) return exponent_ < o.exponent_;
  Rational a = abs(representative().rational()), b = abs(o.representative().rational());
  if (a != b) return a < b;
  return sign_ > o.sign_;
}

std::string PowerClass::to_string() const { return representative().to_string(); }

std::vector<PowerClass> subgroup_elements(const PowerClass& identity, const std::vector<PowerClass>& generators) {
  std::vector<PowerClass> elems{identity};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : generators) {
      PowerClass c = elems[i] * g;
      if (std::find(elems.begin(), elems.end(), c) == elems.end()) elems.push_back(c);
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

bool in_subgroup(const PowerClass& x, const std::vector<PowerClass>& generators) {
  auto elems = subgroup_elements(PowerClass::identity(x.field(), x.q(), x.mode()), generators);
  return std::find(elems.begin(), elems.end(), x) != elems.end();
}

bool same_cyclic_subgroup(const PowerClass& x, const PowerClass& y) {
  return in_subgroup(x, {y}) && in_subgroup(y, {x});
}

}  // namespace locnil
