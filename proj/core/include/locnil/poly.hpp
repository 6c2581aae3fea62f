#pragma once

#include <string>
#include <vector>

#include "locnil/field.hpp"

namespace locnil {

/// Univariate polynomial over a Field, coefficients low to high, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Field& f) : field_(&f) {}
  Poly(const Field& f, std::vector<FieldElem> coeffs);

  static Poly constant(const FieldElem& c);
  /// c X^deg
  static Poly monomial(const FieldElem& c, unsigned deg);
  static Poly x(const Field& f);

  const Field& field() const { return *field_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<FieldElem>& coeffs() const { return coeffs_; }
  FieldElem coeff(std::size_t i) const;
  FieldElem lead() const;
  Poly monic() const;

  FieldElem evaluate(const FieldElem& x) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const FieldElem& c) const;
  /// Quotient and remainder; divisor must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;
  Poly operator%(const Poly& o) const { return divmod(o).second; }
  Poly operator/(const Poly& o) const { return divmod(o).first; }
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// e.g. "X^3 + 5" (finite extension coefficients in c0:c1 syntax)
  std::string to_string() const;

 private:
  void trim();

  const Field* field_ = nullptr;
  std::vector<FieldElem> coeffs_;
};

/// Monic gcd (zero if both inputs are zero).
Poly gcd(Poly a, Poly b);
Poly pow_mod(Poly base, std::uint64_t e, const Poly& modulus);

/// Irreducibility over the coefficient field.
///
/// Finite fields: Rabin's test, any degree. Rationals: degree <= 3 via the
/// rational root test, and binomials X^n - a with n prime. Other rational
/// inputs throw DomainError.
bool is_irreducible(const Poly& f);

/// Distinct roots in the coefficient field, ascending by code (finite) or value (Q).
/// Finite fields are searched exhaustively up to 2^20 elements.
std::vector<FieldElem> roots(const Poly& f);

}  // namespace locnil
