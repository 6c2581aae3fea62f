#pragma once

#include <vector>

#include "locnil/group.hpp"

namespace locnil {

/// [[0, 1_{q-1}], [alpha, 0]]; its q-th power is alpha 1_q.
Mat make_I_alpha(unsigned q, const FieldElem& alpha);

/// Generators of D = {diag(b b_1, ..., b b_q) : b_i in Syl_q(F^x), b in F^x}.
/// Over Q the scalars are not listed; groups built from D carry the
/// scalars_adjoined flag instead.
std::vector<Mat> make_D(unsigned q, const Field& f);

/// The order-q root of unity used for d: primitive_root^{|F^x|/q}, or -1 over Q.
FieldElem canonical_xi(unsigned q, const Field& f);
/// diag(1, xi, ..., xi^{q-1})
Mat make_d(unsigned q, const Field& f);

/// sum_i coeffs[i] I_alpha^i, an element of the algebra F[I_alpha].
Mat delta_element(const Mat& I_alpha, const std::vector<FieldElem>& coeffs);

/// q = 2 and -alpha a nonzero square.
bool is_case_star(unsigned q, const FieldElem& alpha);
/// X^q - alpha irreducible over F.
bool binomial_irreducible(unsigned q, const FieldElem& alpha);

struct MonomialData {
  unsigned q = 0;
  const Field* field = nullptr;
  FieldElem alpha;
  std::vector<Mat> D_gens;
  Mat I_alpha;
  /// Order of the image of H in Sym(q) under the monomial-to-permutation map.
  unsigned pi_image_order = 0;
  MatGroup group;
};

/// H_alpha = <D, I_alpha> with scalars adjoined.
MonomialData make_H_alpha(unsigned q, const Field& f, const FieldElem& alpha);

/// A_alpha: the preimage of Syl_q(Delta_alpha^x / F^x 1_q) in Delta_alpha^x = F[I_alpha]^x.
MatGroup make_A_alpha(unsigned q, const Field& f, const FieldElem& alpha);

struct PrimitiveData {
  unsigned q = 0;
  const Field* field = nullptr;
  FieldElem alpha;
  std::vector<FieldElem> b_coeffs;
  Mat I_alpha;
  Mat b;
  Mat d;
  MatGroup A_alpha;
  bool case_star = false;
  /// G(alpha, b) = <A_alpha, d b> with scalars adjoined.
  MatGroup group;
};

PrimitiveData make_G_alpha_b(unsigned q, const Field& f, const FieldElem& alpha, const std::vector<FieldElem>& b);

/// Generator of the cyclic group Delta_alpha^x (finite fields only), as
/// coefficients in powers of I_alpha; the least such coefficient vector by code.
std::vector<FieldElem> delta_unit_generator(unsigned q, const FieldElem& alpha);

/// Defining polynomial of the Singer-type abelian representative: over a finite
/// field the least primitive polynomial of degree q, over Q the binomial X^q - 2.
Poly singer_polynomial(unsigned q, const Field& f);
Mat companion_matrix(const Poly& f);
/// <companion(singer_polynomial)> with scalars adjoined.
MatGroup make_singer(unsigned q, const Field& f);

/// Order of the permutation group generated by the patterns of monomial matrices.
unsigned permutation_image_order(const std::vector<Mat>& monomials);

}  // namespace locnil
