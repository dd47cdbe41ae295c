#pragma once

#include <map>
#include <string>
#include <vector>

#include "softhybrid/soft_set.hpp"

namespace softhybrid {

// Pair in [0,1]^2: parameter-side measure first, value-side second.
struct MeasurePair {
  double p = 0.0;
  double v = 0.0;
};

bool measure_eq(MeasurePair a, MeasurePair b);

// Where entropy sums range. `support` follows the worked tables: the set's
// stored parameters and (e,x) pairs. `grid` follows the proofs: all of E on
// the parameter side and all of E x U on the value side, absent grades
// contributing min 0 / max 1.
enum class EvaluationDomain { support, grid };

// Sum of stored grades.
template <class K>
double sigma_count(const std::map<K, double>& m) {
  double sum = 0.0;
  for (const auto& [k, g] : m) sum += g;
  return sum;
}

// Scalar min-sum / max-sum against the complement, over the stored entries.
// 0/0 reads as 0 (a crisp or empty mapping is not fuzzy at all).
template <class K>
double fuzzy_entropy(const std::map<K, double>& m) {
  double num = 0.0, den = 0.0;
  for (const auto& [k, g] : m) {
    num += std::min(g, 1.0 - g);
    den += std::max(g, 1.0 - g);
  }
  return den == 0.0 ? 0.0 : num / den;
}

// Scalar min-sum / max-sum over the union of supports. 0/0 reads as 1 (two
// empty mappings are equal).
template <class K>
double fuzzy_similarity(const std::map<K, double>& a,
                        const std::map<K, double>& b) {
  double num = 0.0, den = 0.0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    double ga = 0.0, gb = 0.0;
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      ga = (ia++)->second;
    } else if (ia == a.end() || ib->first < ia->first) {
      gb = (ib++)->second;
    } else {
      ga = (ia++)->second;
      gb = (ib++)->second;
    }
    num += std::min(ga, gb);
    den += std::max(ga, gb);
  }
  return den == 0.0 ? 1.0 : num / den;
}

// Scalar min-sum / sigma-count of the first argument. 0/0 reads as 1 (an
// empty mapping is contained in anything).
template <class K>
double fuzzy_subsethood(const std::map<K, double>& a,
                        const std::map<K, double>& b) {
  double num = 0.0, den = 0.0;
  for (const auto& [k, ga] : a) {
    auto it = b.find(k);
    num += std::min(ga, it == b.end() ? 0.0 : it->second);
    den += ga;
  }
  return den == 0.0 ? 1.0 : num / den;
}

// (sum of parameter grades, sum of all value grades), over the stored data.
CardinalPair cardinality(const SoftHybridSet& s);

// The four sums behind the entropy ratios, exposed so that identities over
// numerators and denominators can be checked directly.
struct EntropyTerms {
  double p_num = 0.0;
  double p_den = 0.0;
  double v_num = 0.0;
  double v_den = 0.0;
};

EntropyTerms entropy_terms(const SoftHybridSet& s, EvaluationDomain domain);

// Min-sum/max-sum of each coordinate against its own complement; 0/0 := 0.
MeasurePair entropy(const SoftHybridSet& s,
                    EvaluationDomain domain = EvaluationDomain::support);

// Min-sum/max-sum between the two sets, per coordinate, over the union of
// supports; 0/0 := 1 per component.
MeasurePair similarity(const SoftHybridSet& s, const SoftHybridSet& t);

// Min-sum divided by the first argument's sigma count, per coordinate;
// 0/0 := 1 per component.
MeasurePair subsethood(const SoftHybridSet& s, const SoftHybridSet& t);

// (m, m*n) minus the cardinality pair; distance from the absolute set.
CardinalPair depth(const SoftHybridSet& s);

// ||(a,b)|| = (|a|+|b|)/2.
double depth_norm(CardinalPair p);

struct RankedSet {
  std::string name;
  CardinalPair depth{};
  double norm = 0.0;
  int rank = 0;       // 1 = best representative
  int tie_group = 0;  // equal norms (within kTol) share a group
};

// Ascending sort by depth norm. Ties within kTol keep input order and share
// a tie group.
std::vector<RankedSet> rank_representatives(
    const std::vector<std::pair<std::string, SoftHybridSet>>& sets);

}  // namespace softhybrid
