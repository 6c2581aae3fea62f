#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "locnil/field.hpp"
#include "locnil/poly.hpp"

namespace locnil {

/// Dense square matrix with exact entries.
///
/// Finite-field entries are stored as element codes, rational entries as
/// mpq values. Products over prime fields take an integer fast path.
class Mat {
 public:
  Mat() = default;
  /// Zero matrix.
  Mat(const Field& f, unsigned n);

  static Mat identity(const Field& f, unsigned n);
  static Mat scalar(const FieldElem& c, unsigned n);
  static Mat diag(const std::vector<FieldElem>& entries);
  static Mat from_rows(const Field& f, const std::vector<std::vector<FieldElem>>& rows);
  /// Row-major literal, rows separated by ';', entries by ','; e.g. "0,1;1,0".
  static Mat parse(const Field& f, std::string_view text);

  const Field& field() const { return *field_; }
  unsigned n() const { return n_; }
  bool valid() const { return field_ != nullptr; }

  FieldElem at(unsigned i, unsigned j) const;
  void set(unsigned i, unsigned j, const FieldElem& v);
  /// Raw code of a finite-field entry.
  std::uint64_t code(unsigned i, unsigned j) const { return fin_[i * n_ + j]; }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(const FieldElem& c) const;
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

  FieldElem det() const;
  FieldElem trace() const;
  bool is_invertible() const { return !det().is_zero(); }
  /// Throws SingularMatrix.
  Mat inverse() const;
  Mat pow(long long e) const;
  Mat transpose() const;
  Poly charpoly() const;

  bool is_zero() const;
  bool is_scalar() const;
  bool is_identity() const;
  bool is_diagonal() const;
  /// The c with m = c 1_n (requires is_scalar()).
  FieldElem scalar_value() const;

  /// Representative of m F^x: scaled so the first nonzero row-major entry is 1.
  Mat projective_canonical() const;
  /// Exact, collision-free serialization used as a set key.
  std::string key() const;

  /// Literal form, e.g. "0,1;1,0".
  std::string to_string() const;
  std::vector<std::vector<std::string>> row_strings() const;
  /// Entries row-major, as a vector of length n^2.
  std::vector<FieldElem> flatten() const;

 private:
  const Field* field_ = nullptr;
  unsigned n_ = 0;
  std::vector<std::uint64_t> fin_;
  std::vector<Rational> rat_;
};

/// t m t^{-1}
Mat conjugate(const Mat& t, const Mat& m);
/// a^{-1} b^{-1} a b
Mat commutator(const Mat& a, const Mat& b);
/// p(m)
Mat evaluate(const Poly& p, const Mat& m);

}  // namespace locnil
