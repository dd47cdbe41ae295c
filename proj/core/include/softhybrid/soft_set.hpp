#pragma once

#include <map>
#include <string>
#include <utility>

#include "softhybrid/space.hpp"

namespace softhybrid {

// Comparison tolerance for grades and derived sums. Input data carries one
// or two decimals, so anything below this is floating-point noise.
inline constexpr double kTol = 1e-9;

// Sparse fuzzy mapping: only strictly positive grades are stored, an absent
// key reads as grade 0. Keys are indices into a Universe/ParameterSpace, so
// iteration order is the canonical declaration order.
using GradeMap = std::map<Index, double>;

// Per-parameter fuzzy value sets, rows keyed by parameter index. Empty rows
// are never stored.
using ValueMap = std::map<Index, GradeMap>;

double grade_at(const GradeMap& m, Index i);

// Validates a raw grade: rejects NaN/infinity and values outside [0,1] by
// more than kTol, clamps values inside the tolerance band. `where` names the
// coordinate in error messages.
double checked_grade(double value, const std::string& where);

enum class Variant { soft, fuzzy_soft, fp_soft, fpfs };

const char* to_string(Variant v);
Variant variant_from_string(std::string_view name);

// soft pins both coordinates to grade 1, fuzzy-soft only the parameters,
// fp-soft only the values, fpfs neither.
bool variant_constrains_params(Variant v);
bool variant_constrains_values(Variant v);

// Least-constrained of the two: soft < {fuzzy-soft, fp-soft} < fpfs.
Variant variant_join(Variant a, Variant b);

// Nonnegative real pair (parameter-side count, value-side count).
struct CardinalPair {
  double a = 0.0;
  double b = 0.0;
};

CardinalPair pair_add(CardinalPair p, CardinalPair q);
// Componentwise partial order; incomparable pairs are <= in neither direction.
bool pair_leq(CardinalPair p, CardinalPair q);
bool pair_eq(CardinalPair p, CardinalPair q);

struct unchecked_t {
  explicit unchecked_t() = default;
};
inline constexpr unchecked_t unchecked{};

// A variant-tagged pair of a fuzzy parameter set and an approximate value
// function over a shared universe and parameter space. Immutable after
// construction; all operations below are pure.
class SoftHybridSet {
 public:
  // Validating constructor over index maps: grades checked and normalized
  // (zeros dropped), variant constraints and the support condition enforced.
  static SoftHybridSet make(Variant variant, GradeMap params, ValueMap values,
                            UniversePtr universe, PSpacePtr pspace);

  // Trusts already-normalized data. Operation results use this path; unlike
  // make(), it does not require the support condition, which complement
  // results legitimately escape.
  SoftHybridSet(unchecked_t, Variant variant, GradeMap params, ValueMap values,
                UniversePtr universe, PSpacePtr pspace);

  Variant variant() const noexcept { return variant_; }
  const GradeMap& param_grades() const noexcept { return params_; }
  const ValueMap& value_grades() const noexcept { return values_; }

  double param_grade(Index e) const { return grade_at(params_, e); }
  double value_grade(Index e, Index x) const;
  const GradeMap* row(Index e) const;

  const Universe& universe() const noexcept { return *universe_; }
  const ParameterSpace& pspace() const noexcept { return *pspace_; }
  UniversePtr universe_ptr() const noexcept { return universe_; }
  PSpacePtr pspace_ptr() const noexcept { return pspace_; }

  std::size_t param_count() const noexcept { return pspace_->size(); }
  std::size_t item_count() const noexcept { return universe_->size(); }

  bool is_null() const noexcept { return params_.empty() && values_.empty(); }
  bool same_universe(const SoftHybridSet& other) const;
  bool same_spaces(const SoftHybridSet& other) const;

  // Exact structural equality (variant, stored grades, spaces by content).
  friend bool operator==(const SoftHybridSet& a, const SoftHybridSet& b);

 private:
  Variant variant_;
  GradeMap params_;
  ValueMap values_;
  UniversePtr universe_;
  PSpacePtr pspace_;
};

// Label-based constructor: resolves item/parameter labels against the given
// spaces, then validates like SoftHybridSet::make.
SoftHybridSet make_set(
    Variant variant, const std::map<std::string, double>& params,
    const std::map<std::string, std::map<std::string, double>>& values,
    UniversePtr universe, PSpacePtr pspace);

// Full grid at grade 1 on both coordinates.
SoftHybridSet absolute(UniversePtr universe, PSpacePtr pspace,
                       Variant variant = Variant::fpfs);
// Empty support on both coordinates.
SoftHybridSet null_set(UniversePtr universe, PSpacePtr pspace,
                       Variant variant = Variant::fpfs);

// Grid complement: parameter grade 1-mu at every e in E, value grade 1-f at
// every (e,x) in E x U. The two coordinates are complemented independently,
// so the result can carry value rows at parameters of grade 0.
SoftHybridSet complement(const SoftHybridSet& s);

// Pointwise max / min on both coordinates over the shared grid.
SoftHybridSet union_of(const SoftHybridSet& s, const SoftHybridSet& t);
SoftHybridSet intersection_of(const SoftHybridSet& s, const SoftHybridSet& t);

// Products over the parameter supports: the result lives on a fresh
// parameter space with composite labels "(e,t)", ordered lexicographically
// in the source orders of e and t.
SoftHybridSet and_product(const SoftHybridSet& s, const SoftHybridSet& t);
SoftHybridSet or_product(const SoftHybridSet& s, const SoftHybridSet& t);

// Parameter reductions onto the same product space: reduce_left copies
// (mu_A(e), f_A(e)) to every (e,t), reduce_right copies (mu_B(t), g_B(t)).
SoftHybridSet reduce_left(const SoftHybridSet& s, const SoftHybridSet& t);
SoftHybridSet reduce_right(const SoftHybridSet& s, const SoftHybridSet& t);

// Pointwise <= over the full grid on both coordinates, tolerance kTol.
bool is_subset(const SoftHybridSet& s, const SoftHybridSet& t);
// Mutual inclusion; ignores the variant tag.
bool equals(const SoftHybridSet& s, const SoftHybridSet& t);

}  // namespace softhybrid
