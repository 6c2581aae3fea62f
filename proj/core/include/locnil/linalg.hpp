#pragma once

#include <vector>

#include "locnil/matrix.hpp"

namespace locnil {

using Vec = std::vector<FieldElem>;

Vec zero_vec(const Field& f, unsigned n);
Vec unit_vec(const Field& f, unsigned n, unsigned i);
/// m v (column vector)
Vec mul_vec(const Mat& m, const Vec& v);
bool is_zero(const Vec& v);
/// Scaled so the first nonzero entry is 1.
Vec normalize_line(const Vec& v);
std::string vec_to_string(const Vec& v);

/// Incrementally built subspace of F^n kept in reduced row echelon form.
class EchelonBasis {
 public:
  EchelonBasis(const Field& f, unsigned n) : field_(&f), n_(n) {}

  /// Adds v; returns false if v already lies in the span.
  bool add(const Vec& v);
  bool contains(const Vec& v) const;
  unsigned dim() const { return static_cast<unsigned>(rows_.size()); }
  unsigned ambient_dim() const { return n_; }
  const std::vector<Vec>& basis() const { return rows_; }

 private:
  Vec reduce(Vec v) const;

  const Field* field_;
  unsigned n_;
  std::vector<Vec> rows_;
  std::vector<unsigned> pivots_;
};

/// Basis of {x : A x = 0} where A is given by its rows (each of length n).
std::vector<Vec> nullspace(const Field& f, const std::vector<Vec>& rows, unsigned n);

/// Smallest subspace containing the seed vectors and invariant under all generators.
EchelonBasis spin(const std::vector<Mat>& generators, const std::vector<Vec>& seeds);

}  // namespace locnil
