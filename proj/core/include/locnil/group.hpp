#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "locnil/matrix.hpp"

namespace locnil {

inline constexpr std::size_t kDefaultClosureCap = std::size_t{1} << 22;

/// Finite or infinite cardinality.
struct Cardinal {
  bool infinite = false;
  std::uint64_t value = 0;

  static Cardinal finite(std::uint64_t v) { return {false, v}; }
  static Cardinal unbounded() { return {true, 0}; }
  std::string to_string() const { return infinite ? "infinite" : std::to_string(value); }
  bool operator==(const Cardinal&) const = default;
};

/// Set of matrices, or of projective classes when `projective` is set (each
/// stored by its canonical representative). Keeps insertion order.
class ElementSet {
 public:
  explicit ElementSet(bool projective) : projective_(projective) {}

  bool projective() const { return projective_; }
  std::size_t size() const { return elems_.size(); }
  const std::vector<Mat>& elements() const { return elems_; }
  const Mat& operator[](std::size_t i) const { return elems_[i]; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  bool contains(const Mat& m) const { return index_of(m).has_value(); }
  std::optional<std::size_t> index_of(const Mat& m) const;
  /// Inserts (the canonical form of) m; returns true if it was new.
  bool insert(const Mat& m);

 private:
  bool projective_;
  std::vector<Mat> elems_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// BFS closure of the generators under right multiplication.
/// Throws ClosureBudgetExceeded once more than `cap` elements are found.
ElementSet enumerate_closure(const Field& f, unsigned n, const std::vector<Mat>& gens, bool projective,
                             std::size_t cap = kDefaultClosureCap);

/// Closure of <old_gens, new_gens> starting from `closed` = <old_gens>.
ElementSet extend_closure(const ElementSet& closed, const std::vector<Mat>& old_gens,
                          const std::vector<Mat>& new_gens, std::size_t cap = kDefaultClosureCap);

/// As extend_closure, but returns nullopt instead of throwing when the cap is hit;
/// `partial` (if given) receives the elements found so far.
std::optional<ElementSet> try_extend_closure(const ElementSet& closed, const std::vector<Mat>& old_gens,
                                             const std::vector<Mat>& new_gens, std::size_t cap,
                                             ElementSet* partial = nullptr);

/// Finitely generated subgroup of GL(n, F), optionally with the scalars F^x 1_n adjoined.
///
/// Closures are computed lazily and cached; copies share the cache.
class MatGroup {
 public:
  MatGroup() = default;
  MatGroup(const Field& f, unsigned n, std::vector<Mat> gens, bool scalars_adjoined);
  /// Group whose element set (projective when scalars are adjoined) is `elems`;
  /// a generating set is extracted greedily.
  static MatGroup from_elements(const Field& f, unsigned n, const ElementSet& elems, bool scalars_adjoined);

  const Field& field() const { return *field_; }
  unsigned n() const { return n_; }
  const std::vector<Mat>& generators() const { return gens_; }
  std::vector<Mat> nonscalar_generators() const;
  bool scalars_adjoined() const { return scalars_; }

  /// Elements modulo scalars when scalars are adjoined, otherwise the elements themselves.
  const ElementSet& closure(std::size_t cap = kDefaultClosureCap) const;
  /// Image of the group in PGL(n, F).
  const ElementSet& projective_closure(std::size_t cap = kDefaultClosureCap) const;
  /// All elements (with the scalars multiplied in when adjoined; finite fields only then).
  const ElementSet& elements(std::size_t cap = kDefaultClosureCap) const;

  Cardinal order() const;
  std::uint64_t projective_order() const { return projective_closure().size(); }
  bool contains(const Mat& m) const;
  MatGroup with_generator(const Mat& g) const;
  std::string to_string() const;

 private:
  struct Cache {
    std::mutex mutex;
    std::optional<ElementSet> projective;
    std::optional<ElementSet> full;
  };

  const Field* field_ = nullptr;
  unsigned n_ = 0;
  std::vector<Mat> gens_;
  bool scalars_ = false;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Smallest subgroup containing `seeds` and closed under conjugation by `conj_gens`.
ElementSet normal_closure(const Field& f, unsigned n, const std::vector<Mat>& seeds,
                          const std::vector<Mat>& conj_gens, bool projective, std::size_t cap = kDefaultClosureCap);

/// [G, G] as a group of actual matrices.
MatGroup derived_subgroup(const MatGroup& g);
MatGroup center(const MatGroup& g);
/// Elements of G commuting with every matrix in s.
MatGroup centralizer(const MatGroup& g, const std::vector<Mat>& s);

struct CentralSeries {
  /// |gamma_2|, |gamma_3|, ... as actual matrix groups
  std::vector<std::size_t> sizes;
  /// nullopt when the series stabilizes above the identity
  std::optional<unsigned> nilpotency_class;
};

/// Lower central series of the actual group; scalars are central and drop out of commutators.
CentralSeries lower_central_series(const MatGroup& g, std::size_t cap = kDefaultClosureCap);
std::optional<unsigned> nilpotency_class(const MatGroup& g, std::size_t cap = kDefaultClosureCap);
/// Class measured by the upper central series on the enumerated group (finite fields).
std::optional<unsigned> upper_central_class(const MatGroup& g);

/// Multiplicative order; throws ClosureBudgetExceeded past `cap`.
std::uint64_t element_order(const Mat& m, std::uint64_t cap = std::uint64_t{1} << 26);
/// Order modulo scalars.
std::uint64_t projective_order(const Mat& m, std::uint64_t cap = std::uint64_t{1} << 26);
bool commute_projectively(const Mat& a, const Mat& b);

struct PrimePart {
  std::uint64_t prime;
  Mat part;
};
/// Prime-power-order components of m (order taken modulo scalars when `projective`).
/// Only nontrivial components are returned.
std::vector<PrimePart> prime_parts(const Mat& m, bool projective);

struct NilpotenceVerdict {
  bool nilpotent = true;
  /// Noncommuting elements of coprime prime-power orders (when not nilpotent).
  std::optional<std::pair<Mat, Mat>> witness;
};
/// Nilpotence of a finite group given by its element set: a finite group is
/// nilpotent iff it has exactly |G|_r elements of r-power order for every prime r.
NilpotenceVerdict finite_nilpotence(const ElementSet& elems);

struct JordanPair {
  Mat g_d;
  Mat g_u;
};
/// Multiplicative Jordan decomposition of an element of finite order over a finite field.
JordanPair jordan_decompose(const Mat& g);
bool is_unipotent(const Mat& m);

struct SplitReport {
  bool applicable = false;
  std::string reason;
  std::size_t order = 0;
  std::size_t unipotent_parts = 0;
  std::size_t semisimple_parts = 0;
  bool unipotent_is_subgroup = false;
  bool semisimple_is_subgroup = false;
  bool unipotent_normal = false;
  bool semisimple_normal = false;
  bool trivial_intersection = false;
  bool parts_commute = false;
  bool direct_product = false;

  bool passed() const {
    return !applicable || (unipotent_is_subgroup && semisimple_is_subgroup && unipotent_normal && semisimple_normal &&
                           trivial_intersection && parts_commute && direct_product);
  }
};
/// Checks G = G_u x G_d for a finite nilpotent group over a finite field.
SplitReport splittable_check(const MatGroup& g);

}  // namespace locnil
