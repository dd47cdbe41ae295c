#include "softhybrid/measures.hpp"

#include <algorithm>
#include <cmath>

#include "softhybrid/error.hpp"

namespace softhybrid {

namespace {

void require_shared_spaces(const SoftHybridSet& s, const SoftHybridSet& t) {
  if (!s.same_spaces(t)) {
    throw Error(ErrorKind::MixedSpaces,
                "operands live over different universes or parameter spaces");
  }
}

struct RatioSums {
  double num = 0.0;
  double den = 0.0;
};

// Accumulates min/max sums of two sparse mappings over the union of keys.
RatioSums min_max_sums(const GradeMap& a, const GradeMap& b) {
  RatioSums r;
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
    r.num += std::min(ga, gb);
    r.den += std::max(ga, gb);
  }
  return r;
}

double ratio_or(double num, double den, double when_empty) {
  return den == 0.0 ? when_empty : num / den;
}

}  // namespace

bool measure_eq(MeasurePair a, MeasurePair b) {
  return std::abs(a.p - b.p) <= kTol && std::abs(a.v - b.v) <= kTol;
}

CardinalPair cardinality(const SoftHybridSet& s) {
  CardinalPair c;
  c.a = sigma_count(s.param_grades());
  for (const auto& [e, row] : s.value_grades()) c.b += sigma_count(row);
  return c;
}

EntropyTerms entropy_terms(const SoftHybridSet& s, EvaluationDomain domain) {
  EntropyTerms t;
  std::size_t stored_pairs = 0;
  for (const auto& [e, g] : s.param_grades()) {
    t.p_num += std::min(g, 1.0 - g);
    t.p_den += std::max(g, 1.0 - g);
  }
  for (const auto& [e, row] : s.value_grades()) {
    for (const auto& [x, g] : row) {
      t.v_num += std::min(g, 1.0 - g);
      t.v_den += std::max(g, 1.0 - g);
    }
    stored_pairs += row.size();
  }
  if (domain == EvaluationDomain::grid) {
    // Absent grades contribute min(0,1)=0 to numerators and max(0,1)=1 to
    // denominators, one per uncovered grid point.
    t.p_den += double(s.param_count() - s.param_grades().size());
    t.v_den += double(s.param_count() * s.item_count() - stored_pairs);
  }
  return t;
}

MeasurePair entropy(const SoftHybridSet& s, EvaluationDomain domain) {
  EntropyTerms t = entropy_terms(s, domain);
  return {ratio_or(t.p_num, t.p_den, 0.0), ratio_or(t.v_num, t.v_den, 0.0)};
}

MeasurePair similarity(const SoftHybridSet& s, const SoftHybridSet& t) {
  require_shared_spaces(s, t);
  RatioSums param = min_max_sums(s.param_grades(), t.param_grades());
  RatioSums value;
  auto is = s.value_grades().begin();
  auto it = t.value_grades().begin();
  const GradeMap empty;
  while (is != s.value_grades().end() || it != t.value_grades().end()) {
    const GradeMap* rs = &empty;
    const GradeMap* rt = &empty;
    if (it == t.value_grades().end() ||
        (is != s.value_grades().end() && is->first < it->first)) {
      rs = &(is++)->second;
    } else if (is == s.value_grades().end() || it->first < is->first) {
      rt = &(it++)->second;
    } else {
      rs = &(is++)->second;
      rt = &(it++)->second;
    }
    RatioSums row = min_max_sums(*rs, *rt);
    value.num += row.num;
    value.den += row.den;
  }
  return {ratio_or(param.num, param.den, 1.0),
          ratio_or(value.num, value.den, 1.0)};
}

MeasurePair subsethood(const SoftHybridSet& s, const SoftHybridSet& t) {
  require_shared_spaces(s, t);
  double p_num = 0.0, p_den = 0.0;
  for (const auto& [e, g] : s.param_grades()) {
    p_num += std::min(g, t.param_grade(e));
    p_den += g;
  }
  double v_num = 0.0, v_den = 0.0;
  for (const auto& [e, row] : s.value_grades()) {
    for (const auto& [x, g] : row) {
      v_num += std::min(g, t.value_grade(e, x));
      v_den += g;
    }
  }
  return {ratio_or(p_num, p_den, 1.0), ratio_or(v_num, v_den, 1.0)};
}

CardinalPair depth(const SoftHybridSet& s) {
  CardinalPair c = cardinality(s);
  double m = double(s.param_count());
  double mn = m * double(s.item_count());
  return {std::max(0.0, m - c.a), std::max(0.0, mn - c.b)};
}

double depth_norm(CardinalPair p) {
  return (std::abs(p.a) + std::abs(p.b)) / 2.0;
}

std::vector<RankedSet> rank_representatives(
    const std::vector<std::pair<std::string, SoftHybridSet>>& sets) {
  if (sets.empty()) {
    throw Error(ErrorKind::EmptyInput, "no sets to rank");
  }
  for (std::size_t i = 1; i < sets.size(); ++i) {
    require_shared_spaces(sets[0].second, sets[i].second);
  }

  struct Entry {
    std::size_t input_pos;
    RankedSet ranked;
  };
  std::vector<Entry> entries;
  entries.reserve(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    CardinalPair d = depth(sets[i].second);
    entries.push_back({i, {sets[i].first, d, depth_norm(d), 0, 0}});
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) {
                     return a.ranked.norm < b.ranked.norm;
                   });

  // Group near-equal norms, then restore input order inside each group so
  // that ties are deterministic regardless of float ordering noise.
  std::size_t group_begin = 0;
  int group_id = 0;
  for (std::size_t i = 0; i <= entries.size(); ++i) {
    bool close = i < entries.size() &&
                 entries[i].ranked.norm <= entries[group_begin].ranked.norm + kTol;
    if (i == entries.size() || !close) {
      std::stable_sort(entries.begin() + group_begin, entries.begin() + i,
                       [](const Entry& a, const Entry& b) {
                         return a.input_pos < b.input_pos;
                       });
      ++group_id;
      for (std::size_t j = group_begin; j < i; ++j) {
        entries[j].ranked.tie_group = group_id;
      }
      group_begin = i;
    }
  }

  std::vector<RankedSet> out;
  out.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    entries[i].ranked.rank = int(i) + 1;
    out.push_back(std::move(entries[i].ranked));
  }
  return out;
}

}  // namespace softhybrid
