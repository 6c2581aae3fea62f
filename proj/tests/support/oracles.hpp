#pragma once

// Slow reference implementations used to cross-check the library.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "locnil/matrix.hpp"

namespace locnil::testing {

using Rng = std::mt19937_64;

FieldElem random_elem(const Field& f, Rng& rng);
FieldElem random_unit(const Field& f, Rng& rng);
Mat random_mat(const Field& f, unsigned n, Rng& rng);
Mat random_invertible(const Field& f, unsigned n, Rng& rng);
/// Small-integer rational matrix.
Mat random_rational_mat(const Field& q, unsigned n, Rng& rng, long bound = 9);

/// Every element of GL(n, F) (finite, small).
std::vector<Mat> all_invertible(const Field& f, unsigned n);

/// Schoolbook product.
Mat naive_mul(const Mat& a, const Mat& b);
/// Determinant by expansion over permutations.
FieldElem leibniz_det(const Mat& m);

/// Group generated by `gens`, by multiplying everything by everything until stable.
std::vector<Mat> naive_closure(const std::vector<Mat>& gens);
bool same_set(const std::vector<Mat>& a, const std::vector<Mat>& b);

/// Nilpotency class of a finite group from its element list, by iterating [G, H].
std::optional<unsigned> naive_nilpotency_class(const std::vector<Mat>& elems);

/// Whether x = y^q for some y in F (finite).
bool brute_is_qth_power(const FieldElem& x, unsigned q);
/// Whether x lies in Syl_q(F^x) (F^x)^q (finite).
bool brute_in_S(const FieldElem& x, unsigned q);

/// Some proper nonzero subspace invariant under all generators (n <= 3, finite).
bool brute_reducible(const std::vector<Mat>& gens);
/// Some q independent lines permuted by the group (n = 2, finite).
bool brute_monomial(const std::vector<Mat>& gens);
/// Some t with t G1 t^-1 = G2, by running through GL(n, F).
std::optional<Mat> brute_conjugator(const std::vector<Mat>& g1, const std::vector<Mat>& g2);
/// Some t with t a t^-1 = b, by running through GL(n, F).
bool brute_conjugate_elements(const Mat& a, const Mat& b);

}  // namespace locnil::testing
