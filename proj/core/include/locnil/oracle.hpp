#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "locnil/group.hpp"

namespace locnil {

struct OracleCheck {
  std::string name;
  bool passed = false;
  std::string verdict;
  /// Concrete evidence for the verdict (a matrix, a conjugator, a missed class).
  std::string witness;
};

struct OracleReport {
  std::string target;
  std::string ambient;
  std::vector<OracleCheck> checks;

  bool passed() const;
};

/// "GL(q, F)" label.
std::string ambient_name(unsigned q, const Field& f);
/// |GL(q, F)| for finite F; nullopt when it overflows 64 bits.
std::optional<std::uint64_t> gl_order(unsigned q, const Field& f);

struct MaximalityOptions {
  /// Use coprime-order commutation certificates before any closure.
  bool certificates = true;
  /// Closure budget as a multiple of |G / F^x|, before falling back.
  std::size_t budget_factor = 4;
  unsigned threads = 1;
};

struct MaximalityResult {
  bool maximal = false;
  /// Least (in enumeration order) ambient element whose adjunction stays nilpotent.
  std::optional<Mat> witness;
  std::uint64_t overgroup_projective_order = 0;
  std::uint64_t candidates = 0;          // projective classes outside G examined
  std::uint64_t certified_by_parts = 0;  // rejected by a coprime-order commutator pair
  std::uint64_t closures = 0;            // candidates that needed a closure
  std::uint64_t budget_overruns = 0;     // closures that exceeded the first budget
};

/// Adjoins every element of GL(q, F) outside G (one per projective class) and
/// tests nilpotence of the result. G must be nilpotent and finite modulo scalars.
///
/// Since scalars are central, <G, g, F^x> is nilpotent iff its image in PGL is,
/// so all work happens modulo scalars. A candidate is rejected outright when a
/// prime-power part of it and an element of G of coprime prime-power order fail
/// to commute. Otherwise the overgroup is enumerated under a budget; an overrun
/// is settled by a coprime noncommuting pair inside the partial closure or, if
/// none is found, by the full closure.
MaximalityResult maximality_check(const MatGroup& g, const MaximalityOptions& opt = {});

/// Matrix with index `index` in the enumeration of projective classes of
/// q x q matrices (first nonzero entry, row-major, equal to 1). May be singular.
Mat projective_candidate(const Field& f, unsigned q, std::uint64_t index);
std::uint64_t projective_candidate_count(const Field& f, unsigned q);

struct SubgroupClass {
  /// Elements of a representative (actual matrices).
  std::vector<Mat> elements;
  std::size_t order = 0;
  std::size_t class_size = 0;
  std::optional<unsigned> nilpotency_class;
};

/// Conjugacy classes of irreducible maximal nilpotent subgroups of GL(q, F),
/// found from the full subgroup lattice. Requires |GL(q, F)| <= 512.
std::vector<SubgroupClass> exhaustive_classification(unsigned q, const Field& f);

enum class ConjugacyMode {
  equal,  // t G1 t^-1 = G2
  into,   // t G1 t^-1 <= G2
};

/// Some t in GL(q, F) with t G1 t^-1 = G2 (or <= G2), comparing the groups
/// modulo scalars when both have scalars adjoined. Finite fields only.
///
/// Images of the nonscalar generators of G1 are tried among the elements of
/// G2 (times scalars) with matching characteristic polynomials; each choice
/// cuts down the space of solutions of t x = y t until an invertible t is found.
std::optional<Mat> conjugator_search(const MatGroup& g1, const MatGroup& g2, ConjugacyMode mode = ConjugacyMode::equal);

/// Some t in GL(n, F) with t a t^-1 = b.
std::optional<Mat> element_conjugator(const Mat& a, const Mat& b);

/// An invertible matrix in the span of `basis` (each a flattened n x n matrix),
/// searched deterministically. Finite fields use random combinations then full
/// enumeration when small; over Q small integer combinations are tried.
std::optional<Mat> invertible_in_span(const Field& f, unsigned n, const std::vector<std::vector<FieldElem>>& basis);

}  // namespace locnil
