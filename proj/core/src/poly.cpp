#include "locnil/poly.hpp"

#include <algorithm>
#include <set>

namespace locnil {

Poly::Poly(const Field& f, std::vector<FieldElem> coeffs) : field_(&f), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (&c.field() != field_) throw DomainError("polynomial coefficient from a different field");
  }
  trim();
}

Poly Poly::constant(const FieldElem& c) { return Poly(c.field(), {c}); }

Poly Poly::monomial(const FieldElem& c, unsigned deg) {
  std::vector<FieldElem> v(deg + 1, c.field().zero());
  v[deg] = c;
  return Poly(c.field(), std::move(v));
}

Poly Poly::x(const Field& f) { return monomial(f.one(), 1); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldElem Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_->zero(); }

FieldElem Poly::lead() const {
  if (is_zero()) throw DomainError("leading coefficient of zero polynomial");
  return coeffs_.back();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * lead().inverse();
}

FieldElem Poly::evaluate(const FieldElem& x) const {
  FieldElem r = field_->zero();
  for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<FieldElem> v(std::max(coeffs_.size(), o.coeffs_.size()), field_->zero());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
  return Poly(*field_, std::move(v));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<FieldElem> v(std::max(coeffs_.size(), o.coeffs_.size()), field_->zero());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - o.coeff(i);
  return Poly(*field_, std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly(*field_);
  std::vector<FieldElem> v(coeffs_.size() + o.coeffs_.size() - 1, field_->zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] = v[i + j] + coeffs_[i] * o.coeffs_[j];
  }
  return Poly(*field_, std::move(v));
}

Poly Poly::operator*(const FieldElem& c) const {
  std::vector<FieldElem> v = coeffs_;
  for (auto& x : v) x = x * c;
  return Poly(*field_, std::move(v));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  Poly rem = *this;
  const int dd = divisor.degree();
  if (degree() < dd) return {Poly(*field_), rem};
  std::vector<FieldElem> quot(degree() - dd + 1, field_->zero());
  const FieldElem inv = divisor.lead().inverse();
  while (!rem.is_zero() && rem.degree() >= dd) {
    const int shift = rem.degree() - dd;
    const FieldElem c = rem.lead() * inv;
    quot[shift] = c;
    for (int i = 0; i <= dd; ++i) rem.coeffs_[shift + i] = rem.coeffs_[shift + i] - c * divisor.coeffs_[i];
    rem.trim();
  }
  return {Poly(*field_, std::move(quot)), rem};
}

bool Poly::operator==(const Poly& o) const {
  if (field_ != o.field_ || coeffs_.size() != o.coeffs_.size()) return false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != o.coeffs_[i]) return false;
  }
  return true;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const FieldElem& c = coeffs_[i];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    bool negative = !field_->is_finite() && c.rational() < 0;
    if (negative) cs = (-c).to_string();
    if (!s.empty()) s += negative ? " - " : " + ";
    else if (negative) s += "-";
    bool unit = c.is_one() || (negative && (-c).is_one());
    if (field_->is_finite() && cs.find(':') != std::string::npos && i > 0) cs = "(" + cs + ")";
    if (i == 0) s += cs;
    else {
      if (!unit) s += cs + "*";
      s += i == 1 ? "X" : "X^" + std::to_string(i);
    }
  }
  return s;
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly pow_mod(Poly base, std::uint64_t e, const Poly& modulus) {
  Poly r = Poly::constant(base.field().one()) % modulus;
  base = base % modulus;
  while (e) {
    if (e & 1) r = (r * base) % modulus;
    base = (base * base) % modulus;
    e >>= 1;
  }
  return r;
}

namespace {

bool rational_binomial(const Poly& f, FieldElem& a) {
  const int n = f.degree();
  for (int i = 1; i < n; ++i) {
    if (!f.coeff(i).is_zero()) return false;
  }
  a = -(f.coeff(0) / f.lead());
  return true;
}

// Rational roots of a polynomial over Q via the rational root theorem.
std::vector<FieldElem> rational_roots(const Poly& f) {
  const Field& F = f.field();
  // clear denominators
  Integer l = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rational().get_den_mpz_t());
  std::vector<Integer> ints;
  for (const auto& c : f.coeffs()) ints.push_back(Integer(c.rational() * l));
  std::set<Rational> found;
  std::size_t low = 0;
  while (ints[low] == 0) ++low;
  if (low > 0) found.insert(Rational(0));
  auto divisors = [](const Integer& n) {
    std::vector<Integer> ds{1};
    for (auto& [p, e] : factor_integer(n)) {
      std::vector<Integer> next;
      for (const auto& d : ds) {
        Integer pk = 1;
        for (unsigned i = 0; i <= e; ++i) {
          next.push_back(d * pk);
          pk *= p;
        }
      }
      ds = std::move(next);
    }
    return ds;
  };
  if (static_cast<int>(low) < f.degree()) {
    auto num_divs = divisors(ints[low]);
    auto den_divs = divisors(ints.back());
    for (const auto& a : num_divs) {
      for (const auto& b : den_divs) {
        for (int sign : {1, -1}) {
          Rational r(a * sign, b);
          r.canonicalize();
          if (f.evaluate(FieldElem(F, r)).is_zero()) found.insert(r);
        }
      }
    }
  }
  std::vector<FieldElem> out;
  for (const auto& r : found) out.emplace_back(F, r);
  return out;
}

}  // namespace

bool is_irreducible(const Poly& f) {
  const Field& F = f.field();
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  if (!F.is_finite()) {
    FieldElem a;
    if (n <= 3) return rational_roots(f).empty();
    if (is_prime_u64(static_cast<std::uint64_t>(n)) && rational_binomial(f, a)) {
      return !qth_root(a, static_cast<unsigned>(n)).has_value();
    }
    throw DomainError("irreducibility over Q is supported for degree <= 3 and prime-degree binomials");
  }
  const Poly g = f.monic();
  const Poly x = Poly::x(F);
  const std::uint64_t size = F.size();
  std::vector<Poly> frob(n + 1);  // X^{|F|^i} mod g
  frob[0] = x % g;
  for (int i = 1; i <= n; ++i) frob[i] = pow_mod(frob[i - 1], size, g);
  if (frob[n] != x % g) return false;
  for (auto [l, e] : factor_u64(static_cast<std::uint64_t>(n))) {
    (void)e;
    if (gcd(frob[n / l] - x, g).degree() != 0) return false;
  }
  return true;
}

std::vector<FieldElem> roots(const Poly& f) {
  const Field& F = f.field();
  if (f.is_zero()) throw DomainError("roots of the zero polynomial");
  if (!F.is_finite()) return rational_roots(f);
  if (F.size() > (1ULL << 20)) throw DomainError("root search limited to fields of size <= 2^20");
  std::vector<FieldElem> out;
  for (std::uint64_t c = 0; c < F.size(); ++c) {
    FieldElem x(F, c);
    if (f.evaluate(x).is_zero()) out.push_back(x);
  }
  return out;
}

}  // namespace locnil
