#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "locnil/error.hpp"
#include "locnil/factor.hpp"

namespace locnil {

using Rational = mpq_class;

enum class FieldKind { finite, rational };

class Field;
class FieldElem;

/// Shared handle to an immutable field. Fields are interned by make_field and
/// live for the remainder of the process, so FieldElem and Mat keep plain
/// references to them.
using FieldPtr = std::shared_ptr<const Field>;

/// Parses `gf:<p>`, `gf:<p>^<k>` or `q` and returns the (interned) field.
FieldPtr make_field(std::string_view spec);

/// GF(p^k) with a fixed modulus and primitive root, or the rationals.
///
/// Finite elements are encoded as integers: the coefficient vector
/// (c_0, ..., c_{k-1}) of the residue modulo the defining polynomial maps to
/// c_0 + c_1 p + ... + c_{k-1} p^{k-1}. The `*_code` members are the raw
/// arithmetic on those encodings and are what the matrix kernels use.
class Field {
 public:
  FieldKind kind() const { return kind_; }
  bool is_finite() const { return kind_ == FieldKind::finite; }
  bool is_prime_field() const { return is_finite() && k_ == 1; }

  /// 0 for the rationals.
  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  /// |F| (finite fields only).
  std::uint64_t size() const { return size_; }
  /// |F^x| = p^k - 1 (finite fields only).
  std::uint64_t unit_order() const { return size_ - 1; }
  const std::vector<std::pair<std::uint64_t, unsigned>>& unit_order_factors() const {
    return unit_factors_;
  }
  /// Monic defining polynomial over GF(p), coefficients low to high.
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }
  /// Canonical descriptor, e.g. "gf:3^2" or "q".
  const std::string& descriptor() const { return descriptor_; }

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_int(long long v) const;
  FieldElem from_rational(const Rational& r) const;
  /// Fixed generator of F^x (finite fields only).
  FieldElem primitive_root() const;
  /// Element from its textual form (`3`, `-1`, `1:2` for GF(p^k), `-2/3` over Q).
  FieldElem parse(std::string_view text) const;

  std::uint64_t add_code(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub_code(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg_code(std::uint64_t a) const;
  std::uint64_t mul_code(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t inv_code(std::uint64_t a) const;
  std::uint64_t pow_code(std::uint64_t a, std::uint64_t e) const;
  std::string format_code(std::uint64_t a) const;
  /// Discrete logarithm to the base primitive_root (a != 0).
  std::uint64_t dlog_code(std::uint64_t a) const;
  /// Multiplicative order of a nonzero element.
  std::uint64_t order_code(std::uint64_t a) const;
  std::uint64_t primitive_root_code() const { return primitive_root_; }

  /// Both supported families have finite 2-primary torsion in F^x.
  bool has_quasicyclic_two_torsion() const { return false; }

 private:
  friend FieldPtr make_field(std::string_view spec);
  Field() = default;
  static FieldPtr make_finite(std::uint64_t p, unsigned k);
  static FieldPtr make_rational();

  std::uint64_t poly_mul_code(std::uint64_t a, std::uint64_t b) const;

  FieldKind kind_ = FieldKind::rational;
  std::uint64_t p_ = 0;
  unsigned k_ = 0;
  std::uint64_t size_ = 0;
  std::vector<std::uint64_t> modulus_;
  std::uint64_t primitive_root_ = 0;
  std::vector<std::pair<std::uint64_t, unsigned>> unit_factors_;
  std::string descriptor_;
  // log/exp tables for fields small enough to tabulate
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
};

/// Exact element of a Field.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(const Field& f, std::uint64_t code) : field_(&f), value_(code) {}
  FieldElem(const Field& f, Rational r);

  const Field& field() const { return *field_; }
  bool valid() const { return field_ != nullptr; }
  bool is_zero() const;
  bool is_one() const;
  std::uint64_t code() const { return std::get<std::uint64_t>(value_); }
  const Rational& rational() const { return std::get<Rational>(value_); }

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem inverse() const;
  FieldElem pow(long long e) const;
  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  const Field* field_ = nullptr;
  std::variant<std::uint64_t, Rational> value_;
};

/// Cyclic subgroup of F^x given by a generator and its order.
struct CyclicSubgroup {
  FieldElem generator;
  std::uint64_t order = 1;
};

bool has_order_q_element(const Field& f, unsigned q);

/// Syl_q(F^x). Over Q this is {+-1} for q = 2 and trivial otherwise.
CyclicSubgroup sylow_q_units(const Field& f, unsigned q);

/// |F^x / S| with S = Syl_q(F^x) (F^x)^q; nullopt means infinite.
std::optional<std::uint64_t> s_subgroup_index(const Field& f, unsigned q);

/// Some y with y^q = x, if one exists.
std::optional<FieldElem> qth_root(const FieldElem& x, unsigned q);

enum class PowerMode { qth_powers, mod_S };

/// Element of F^x/(F^x)^q or F^x/S in canonical form.
///
/// Finite fields store the discrete log modulo the index of the subgroup.
/// Over Q the class is a sign together with prime exponents reduced mod q.
class PowerClass {
 public:
  static PowerClass of(const FieldElem& x, unsigned q, PowerMode mode);
  static PowerClass identity(const Field& f, unsigned q, PowerMode mode);

  const Field& field() const { return *field_; }
  unsigned q() const { return q_; }
  PowerMode mode() const { return mode_; }

  /// Canonical element of the class (finite: primitive_root^e with e reduced;
  /// rational: sign times a q-th-power-free integer).
  FieldElem representative() const;
  bool is_trivial() const;
  /// Order in the quotient group (1 or q for Q; divides the index for finite F).
  std::uint64_t order() const;

  PowerClass operator*(const PowerClass& o) const;
  PowerClass pow(long long e) const;
  bool operator==(const PowerClass& o) const;
  bool operator!=(const PowerClass& o) const { return !(*this == o); }
  bool operator<(const PowerClass& o) const;

  std::string to_string() const;

 private:
  PowerClass() = default;
  void normalize();

  const Field* field_ = nullptr;
  unsigned q_ = 2;
  PowerMode mode_ = PowerMode::qth_powers;
  std::uint64_t exponent_ = 0;
  std::uint64_t index_ = 1;
  int sign_ = 1;
  std::map<Integer, unsigned> primes_;
};

/// True when x generates the same cyclic subgroup of the quotient as y.
bool same_cyclic_subgroup(const PowerClass& x, const PowerClass& y);

/// True when x lies in the subgroup generated by the given classes.
bool in_subgroup(const PowerClass& x, const std::vector<PowerClass>& generators);

/// All elements of the subgroup generated by the given classes.
std::vector<PowerClass> subgroup_elements(const PowerClass& identity,
                                          const std::vector<PowerClass>& generators);

}  // namespace locnil
