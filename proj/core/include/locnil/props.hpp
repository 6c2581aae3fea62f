#pragma once

#include <optional>
#include <string>
#include <vector>

#include "locnil/construct.hpp"
#include "locnil/group.hpp"
#include "locnil/linalg.hpp"

namespace locnil {

/// Every line of F^n (finite F), each given by its vector with first nonzero entry 1.
std::vector<Vec> all_lines(const Field& f, unsigned n);

struct IrreducibilityReport {
  bool irreducible = false;
  /// Basis of a proper nonzero invariant subspace when reducible.
  std::vector<Vec> invariant_subspace;
  std::string method;
};

/// Decides irreducibility over F.
///
/// A full enveloping algebra settles irreducibility at once. Otherwise finite
/// fields spin every line (complete). Over Q the test looks for an element with
/// irreducible characteristic polynomial, then for common eigenvectors of the
/// generators and of their transposes, which is complete for q <= 3.
IrreducibilityReport irreducibility(const MatGroup& g);
bool is_irreducible(const MatGroup& g);

/// Dimension of the F-span of the group (the enveloping algebra).
unsigned enveloping_dim(const MatGroup& g);
bool is_absolutely_irreducible(const MatGroup& g);

struct PrimitivityReport {
  bool primitive = false;
  /// q independent lines permuted by the group, when imprimitive.
  std::vector<Vec> block_lines;
  std::string method;
};

/// For prime degree an irreducible group is imprimitive iff it permutes q
/// independent lines; such a system is a single orbit on lines. Finite fields
/// examine all line orbits. Over Q candidate systems are the eigenline sets
/// of elements of the (finite) projective image; complete for q = 2.
PrimitivityReport primitivity(const MatGroup& g);
bool is_primitive(const MatGroup& g);

struct ModuleDecomposition {
  std::vector<Vec> invariant_subspace;  // empty: none
  std::vector<Vec> block_system;        // empty: none
  unsigned enveloping_dim = 0;
};
ModuleDecomposition decompose(const MatGroup& g);

/// Subgroup of F^x. Finite fields: <g^step> for the fixed primitive root g.
/// Over Q the subgroup always contains (Q^x)^q and is kept as generators of
/// its image in Q^x/(Q^x)^q.
class DetGroup {
 public:
  static DetGroup generated(const Field& f, unsigned q, const std::vector<FieldElem>& gens, bool with_qth_powers);

  const Field& field() const { return *field_; }
  bool contains(const FieldElem& x) const;
  Cardinal order() const;
  /// Index in F^x (finite fields).
  std::uint64_t step() const { return step_; }
  bool operator==(const DetGroup& o) const;
  std::string to_string() const;
  /// Canonical representative of the coset x Ddet: primitive_root^(log x mod step)
  /// over finite fields, the least rational class representative over Q.
  FieldElem coset_representative(const FieldElem& x) const;

 private:
  const Field* field_ = nullptr;
  unsigned q_ = 2;
  std::uint64_t step_ = 0;
  std::vector<PowerClass> classes_;
};

/// Ddet(G): the determinants of G, generated by those of the generators (and
/// (F^x)^q when the scalars are adjoined).
DetGroup det_group(const MatGroup& g);

/// G(alpha, b) is primitive: always in case (*), otherwise iff
/// det(b) lies outside <(-1)^{q-1} alpha, (F^x)^q>.
bool primitivity_criterion(unsigned q, const FieldElem& alpha, const std::vector<FieldElem>& b);

struct KonyukhSeries {
  bool applicable = false;
  std::string reason;
  std::size_t k_order = 0;
  bool k_abelian = false;
  bool k_q_group = false;
  unsigned sigma_dim = 0;
  bool sigma_is_field = false;
  std::uint64_t galois_order = 0;  // |G : C_G(K)|
  bool galois_matches_degree = false;
  bool galois_divides_q = false;
  bool hh_scalar = false;

  bool passed() const {
    return applicable && k_abelian && k_q_group && sigma_is_field && galois_matches_degree && galois_divides_q &&
           hh_scalar;
  }
};

/// Checks, for a primitive absolutely irreducible nilpotent group of prime
/// degree q over a finite field of characteristic != q: K = [G,G] is an
/// abelian q-group, its span is a field Sigma, |G : C_G(K)| = |Sigma : F|
/// divides q, and [C_G(K), C_G(K)] is scalar.
KonyukhSeries konyukh_check(const MatGroup& g);

struct Syl2Structure {
  std::string syl2_case;  // "i" or "ii"
  unsigned m = 0;         // |Syl_2(E^x)| = 2^m
  std::uint64_t predicted_order = 0;
  std::uint64_t enumerated_order = 0;
  bool cyclic = false;
  std::string generator;
  std::string note;
};

/// Structure of Syl_2(E^x / F^x) for E = F(eps), eps^2 = -1, eps not in F.
Syl2Structure syl2_quotient_structure(const Field& f);

struct SylqQuotient {
  Mat generator;  // I_alpha
  std::uint64_t generator_order = 0;
  std::uint64_t sylow_order = 0;
  bool enumerated = false;
  std::string note;
};

/// Syl_q(Delta_alpha^x / F^x) is generated by the class of I_alpha; over finite
/// fields the Sylow subgroup is also counted by enumerating Delta_alpha^x.
SylqQuotient sylq_quotient_generator(unsigned q, const FieldElem& alpha);

/// An irreducible abelian normal subgroup (largest found), if any.
std::optional<MatGroup> irreducible_abelian_normal_subgroup(const MatGroup& g);

}  // namespace locnil
