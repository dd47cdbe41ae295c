#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "softhybrid/measures.hpp"
#include "softhybrid/soft_set.hpp"

namespace softhybrid::oracle {

// Dense mirror of a SoftHybridSet: a length-m parameter row and a row-major
// m x n value grid, zeros materialized. Deliberately naive; used to
// cross-check the sparse implementation and to search for counterexamples.
struct DenseSet {
  Variant variant = Variant::fpfs;
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<double> param_row;   // size m
  std::vector<double> value_grid;  // size m*n, row-major

  double cell(Index e, Index x) const { return value_grid[e * n + x]; }
  double& cell(Index e, Index x) { return value_grid[e * n + x]; }
};

DenseSet densify(const SoftHybridSet& s);
// Inverse of densify; throws DimensionMismatch when the grid does not fit
// the given spaces.
SoftHybridSet sparsify(const DenseSet& d, UniversePtr universe, PSpacePtr pspace);

// Dense re-implementations of the set algebra, explicit loops over full
// grids. Results agree with the sparse operations within kTol.
SoftHybridSet complement(const SoftHybridSet& s);
SoftHybridSet union_of(const SoftHybridSet& s, const SoftHybridSet& t);
SoftHybridSet intersection_of(const SoftHybridSet& s, const SoftHybridSet& t);
SoftHybridSet and_product(const SoftHybridSet& s, const SoftHybridSet& t);
SoftHybridSet or_product(const SoftHybridSet& s, const SoftHybridSet& t);
SoftHybridSet reduce_left(const SoftHybridSet& s, const SoftHybridSet& t);
SoftHybridSet reduce_right(const SoftHybridSet& s, const SoftHybridSet& t);
bool is_subset(const SoftHybridSet& s, const SoftHybridSet& t);
bool equals(const SoftHybridSet& s, const SoftHybridSet& t);

enum class MeasureKind { card, entropy, sim, sub, depth };

MeasureKind measure_kind_from_string(std::string_view name);

// Direct transcription of the measure formulas over dense grids. card,
// entropy and depth take one set; sim and sub take two. Returns the pair
// (parameter side, value side).
std::pair<double, double> measure(MeasureKind kind,
                                  const std::vector<SoftHybridSet>& sets,
                                  EvaluationDomain domain = EvaluationDomain::support);

// Deterministic generator. Grades are drawn from the lattice {1/r, ..., 1}
// with r = grade_resolution; each cell is kept with probability `density`.
// Value cells appear only under kept parameters, so the result always
// satisfies the support condition.
SoftHybridSet random_set(std::uint64_t seed, Variant variant, std::size_t m,
                         std::size_t n, double density, int grade_resolution);

// Outcome of checking one registered identity on concrete sets. A failed
// identity is data, not an error.
struct IdentityReport {
  std::string identity;
  std::string inputs;
  std::vector<double> left;
  std::vector<double> right;
  double residual = 0.0;
  bool holds = false;
};

struct IdentityInfo {
  std::string name;
  int arity = 1;
  // The check is only meaningful over the grid domain; the domain argument
  // is ignored for these.
  bool grid_only = false;
  // Restates a claim that is false in general; callers usually report it
  // informationally instead of treating a failure as an error.
  bool known_false = false;
};

const std::vector<IdentityInfo>& registered_identities();

IdentityReport check_identity(const std::string& name,
                              const std::vector<SoftHybridSet>& sets,
                              EvaluationDomain domain = EvaluationDomain::support);

struct RatioCounterexample {
  SoftHybridSet a;
  SoftHybridSet b;
  double residual = 0.0;
};

// Bounded enumeration over parameter-side sets (empty value functions),
// m and n up to the given limits, grades on the {0, 1/r, ..., 1} lattice in
// lexicographic order. Returns the first pair on which the ratio-level
// entropy modularity claim fails in the grid domain.
std::optional<RatioCounterexample> find_entropy_ratio_counterexample(
    std::size_t max_m = 3, std::size_t max_n = 3, int grade_resolution = 10);

}  // namespace softhybrid::oracle
