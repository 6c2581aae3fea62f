#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "locnil/construct.hpp"
#include "locnil/group.hpp"

namespace locnil {

enum class ClassTag { MonomialH, PrimitiveG, AbelianSinger };
std::string tag_name(ClassTag t);

/// Checks run on an emitted representative; unset fields were not computed.
struct VerifiedProperties {
  std::optional<bool> irreducible;
  std::optional<bool> absolutely_irreducible;
  std::optional<bool> primitive;
  std::optional<bool> nilpotent;
  std::optional<unsigned> nilpotency_class;
  Cardinal order;
  std::optional<std::uint64_t> projective_order;
  std::optional<bool> maximal;
  /// Abelian classes: G equals the unit group of its centralizer algebra.
  std::optional<bool> maximal_abelian;
  std::string maximality_note;
};

struct ClassRep {
  ClassTag tag = ClassTag::MonomialH;
  unsigned q = 0;
  const Field* field = nullptr;
  std::optional<FieldElem> alpha;
  std::vector<FieldElem> b;  // coefficients of b in powers of I_alpha
  std::optional<Poly> polynomial;
  /// Conjugacy invariants, in a fixed order.
  std::vector<std::pair<std::string, std::string>> certificate;
  std::vector<std::string> notes;
  MatGroup group;
  VerifiedProperties verified;
};

struct FamilyCount {
  std::string family;
  Cardinal count;
  /// For infinite counts: the infinite quotient responsible.
  std::string reason;
};

struct ClassCount {
  Cardinal total;
  std::vector<FamilyCount> breakdown;
};

struct ClassifyOptions {
  /// Cap on emitted representatives per infinite family.
  std::size_t limit = 25;
  bool verify = true;
  /// Run the adjunction oracle when |GL(q, F)| is at most this.
  std::uint64_t maximality_ambient_cap = 100000;
  unsigned threads = 1;
};

struct Classification {
  unsigned q = 0;
  const Field* field = nullptr;
  std::vector<ClassRep> reps;
  ClassCount count;
  /// Candidates dropped, each with the reason.
  std::vector<std::string> suppressed;
  std::vector<std::string> notes;
};

/// Representatives of the conjugacy classes of irreducible maximal locally
/// nilpotent subgroups of GL(q, F): H_1, the H_alpha family, the primitive
/// G(alpha, b) family and the irreducible maximal abelian (Singer-type) groups.
/// Infinite families are streamed up to options.limit entries each.
Classification classify(unsigned q, const Field& f, const ClassifyOptions& options = {});

ClassCount count_classes(unsigned q, const Field& f);

/// H_alpha1 and H_alpha2 are conjugate: both alphas lie in S = Syl_q(F^x)(F^x)^q,
/// or both lie outside and generate the same subgroup of F^x / S.
bool monomial_conjugate(unsigned q, const FieldElem& alpha1, const FieldElem& alpha2);

struct DiagConjugacy {
  bool conjugate = false;
  /// Diagonal x with x (I a) x^-1 = I b, where I = I_1.
  std::optional<Mat> conjugator;
};
/// Conjugacy of I a and I b for diagonal a, b: happens iff det a = det b, and
/// then a diagonal conjugator exists.
DiagConjugacy ia_conjugate(const Mat& a, const Mat& b);

/// d b1 and d b2 (b_i in F[I_alpha]) are conjugate iff det b1 = det b2.
bool db_conjugate(unsigned q, const FieldElem& alpha, const std::vector<FieldElem>& b1,
                  const std::vector<FieldElem>& b2);

enum class Decision { conjugate, not_conjugate, undecided };
std::string decision_name(Decision d);

struct PrimitiveConjugacy {
  Decision decision = Decision::undecided;
  std::string method;
  std::optional<Mat> conjugator;
};

/// Conjugacy of primitive G(alpha, b1), G(alpha, b2). Outside case (*) the
/// answer is Ddet(G1) = Ddet(G2) and det b1 / det b2 in Ddet(A_alpha). Case (*)
/// is settled by conjugator search over finite fields and left undecided over Q.
PrimitiveConjugacy primitive_conjugate(unsigned q, const FieldElem& alpha, const std::vector<FieldElem>& b1,
                                       const std::vector<FieldElem>& b2);

/// Both readings of the class formula log_2 |Syl_2(Delta^x) F^x 1_2| for
/// G(-1, b) over a finite field with |F| = 3 mod 4: the order of the product
/// subgroup, and the order of the Sylow 2-subgroup of the product.
struct ClassFormulaReadings {
  std::uint64_t product_order = 0;
  std::uint64_t sylow_of_product_order = 0;
  std::string product_reading;  // "log2(48)" or an integer
  std::string sylow_reading;
};
ClassFormulaReadings g_class_formula(const Field& f);

/// 1 + (q - 1) log_q |Syl_q(F^x)| for finite F.
unsigned h_class_formula(unsigned q, const Field& f);

/// Coefficients of an element of F[I_alpha] in powers of I_alpha (read from row 0).
std::vector<FieldElem> delta_coefficients(const Mat& x);

}  // namespace locnil
