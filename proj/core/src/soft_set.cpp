#include "softhybrid/soft_set.hpp"

#include <algorithm>
#include <cmath>

#include "softhybrid/error.hpp"

namespace softhybrid {

double grade_at(const GradeMap& m, Index i) {
  auto it = m.find(i);
  return it == m.end() ? 0.0 : it->second;
}

double checked_grade(double value, const std::string& where) {
  if (!std::isfinite(value)) {
    throw Error(ErrorKind::GradeOutOfRange, "non-finite grade at " + where);
  }
  if (value < -kTol || value > 1.0 + kTol) {
    throw Error(ErrorKind::GradeOutOfRange,
                "grade " + std::to_string(value) + " outside [0,1] at " + where);
  }
  return std::clamp(value, 0.0, 1.0);
}

const char* to_string(Variant v) {
  switch (v) {
    case Variant::soft: return "soft";
    case Variant::fuzzy_soft: return "fuzzy-soft";
    case Variant::fp_soft: return "fp-soft";
    case Variant::fpfs: return "fpfs";
  }
  return "fpfs";
}

Variant variant_from_string(std::string_view name) {
  if (name == "soft") return Variant::soft;
  if (name == "fuzzy-soft") return Variant::fuzzy_soft;
  if (name == "fp-soft") return Variant::fp_soft;
  if (name == "fpfs") return Variant::fpfs;
  throw Error(ErrorKind::SchemaError, "unknown variant '" + std::string(name) + "'");
}

bool variant_constrains_params(Variant v) {
  return v == Variant::soft || v == Variant::fuzzy_soft;
}

bool variant_constrains_values(Variant v) {
  return v == Variant::soft || v == Variant::fp_soft;
}

namespace {

bool is_one(double g) { return std::abs(g - 1.0) <= kTol; }

}  // namespace

Variant variant_join(Variant a, Variant b) {
  bool params = variant_constrains_params(a) && variant_constrains_params(b);
  bool values = variant_constrains_values(a) && variant_constrains_values(b);
  if (params && values) return Variant::soft;
  if (params) return Variant::fuzzy_soft;
  if (values) return Variant::fp_soft;
  return Variant::fpfs;
}

CardinalPair pair_add(CardinalPair p, CardinalPair q) {
  return {p.a + q.a, p.b + q.b};
}

bool pair_leq(CardinalPair p, CardinalPair q) {
  return p.a <= q.a + kTol && p.b <= q.b + kTol;
}

bool pair_eq(CardinalPair p, CardinalPair q) {
  return std::abs(p.a - q.a) <= kTol && std::abs(p.b - q.b) <= kTol;
}

SoftHybridSet::SoftHybridSet(unchecked_t, Variant variant, GradeMap params,
                             ValueMap values, UniversePtr universe,
                             PSpacePtr pspace)
    : variant_(variant),
      params_(std::move(params)),
      values_(std::move(values)),
      universe_(std::move(universe)),
      pspace_(std::move(pspace)) {}

SoftHybridSet SoftHybridSet::make(Variant variant, GradeMap params,
                                  ValueMap values, UniversePtr universe,
                                  PSpacePtr pspace) {
  const std::size_t m = pspace->size();
  const std::size_t n = universe->size();

  GradeMap norm_params;
  for (const auto& [e, g] : params) {
    if (e >= m) {
      throw Error(ErrorKind::UnknownLabel,
                  "parameter index " + std::to_string(e) + " out of range");
    }
    double v = checked_grade(g, "parameter " + pspace->param(e));
    if (v > 0.0) norm_params.emplace(e, v);
  }

  ValueMap norm_values;
  for (const auto& [e, row] : values) {
    if (e >= m) {
      throw Error(ErrorKind::UnknownLabel,
                  "parameter index " + std::to_string(e) + " out of range");
    }
    GradeMap norm_row;
    for (const auto& [x, g] : row) {
      if (x >= n) {
        throw Error(ErrorKind::UnknownLabel,
                    "item index " + std::to_string(x) + " out of range");
      }
      double v = checked_grade(
          g, "(" + pspace->param(e) + ", " + universe->item(x) + ")");
      if (v > 0.0) norm_row.emplace(x, v);
    }
    if (!norm_row.empty()) norm_values.emplace(e, std::move(norm_row));
  }

  if (variant_constrains_params(variant)) {
    for (const auto& [e, g] : norm_params) {
      if (!is_one(g)) {
        throw Error(ErrorKind::VariantViolation,
                    std::string("variant '") + to_string(variant) +
                        "' requires parameter grade 1 at " + pspace->param(e) +
                        ", got " + std::to_string(g));
      }
    }
  }
  if (variant_constrains_values(variant)) {
    for (const auto& [e, row] : norm_values) {
      for (const auto& [x, g] : row) {
        if (!is_one(g)) {
          throw Error(ErrorKind::VariantViolation,
                      std::string("variant '") + to_string(variant) +
                          "' requires value grade 1 at (" + pspace->param(e) +
                          ", " + universe->item(x) + "), got " +
                          std::to_string(g));
        }
      }
    }
  }

  // Support condition: a nonempty value set needs a positive parameter grade.
  for (const auto& [e, row] : norm_values) {
    if (grade_at(norm_params, e) <= 0.0) {
      throw Error(ErrorKind::SupportViolation,
                  "value set present at parameter " + pspace->param(e) +
                      " whose grade is 0");
    }
  }

  return SoftHybridSet(unchecked, variant, std::move(norm_params),
                       std::move(norm_values), std::move(universe),
                       std::move(pspace));
}

double SoftHybridSet::value_grade(Index e, Index x) const {
  auto it = values_.find(e);
  if (it == values_.end()) return 0.0;
  return grade_at(it->second, x);
}

const GradeMap* SoftHybridSet::row(Index e) const {
  auto it = values_.find(e);
  return it == values_.end() ? nullptr : &it->second;
}

bool SoftHybridSet::same_universe(const SoftHybridSet& other) const {
  return universe_ == other.universe_ || *universe_ == *other.universe_;
}

bool SoftHybridSet::same_spaces(const SoftHybridSet& other) const {
  return same_universe(other) &&
         (pspace_ == other.pspace_ || *pspace_ == *other.pspace_);
}

bool operator==(const SoftHybridSet& a, const SoftHybridSet& b) {
  return a.variant_ == b.variant_ && a.same_spaces(b) &&
         a.params_ == b.params_ && a.values_ == b.values_;
}

SoftHybridSet make_set(
    Variant variant, const std::map<std::string, double>& params,
    const std::map<std::string, std::map<std::string, double>>& values,
    UniversePtr universe, PSpacePtr pspace) {
  GradeMap p;
  for (const auto& [label, g] : params) {
    auto e = pspace->find(label);
    if (!e) throw Error(ErrorKind::UnknownLabel, "parameter '" + label + "'");
    p[*e] = g;
  }
  ValueMap v;
  for (const auto& [plabel, row] : values) {
    auto e = pspace->find(plabel);
    if (!e) throw Error(ErrorKind::UnknownLabel, "parameter '" + plabel + "'");
    GradeMap r;
    for (const auto& [xlabel, g] : row) {
      auto x = universe->find(xlabel);
      if (!x) throw Error(ErrorKind::UnknownLabel, "item '" + xlabel + "'");
      r[*x] = g;
    }
    v[*e] = std::move(r);
  }
  return SoftHybridSet::make(variant, std::move(p), std::move(v),
                             std::move(universe), std::move(pspace));
}

SoftHybridSet absolute(UniversePtr universe, PSpacePtr pspace, Variant variant) {
  GradeMap params;
  ValueMap values;
  for (Index e = 0; e < pspace->size(); ++e) {
    params.emplace(e, 1.0);
    GradeMap row;
    for (Index x = 0; x < universe->size(); ++x) row.emplace(x, 1.0);
    if (!row.empty()) values.emplace(e, std::move(row));
  }
  return SoftHybridSet(unchecked, variant, std::move(params), std::move(values),
                       std::move(universe), std::move(pspace));
}

SoftHybridSet null_set(UniversePtr universe, PSpacePtr pspace, Variant variant) {
  return SoftHybridSet(unchecked, variant, {}, {}, std::move(universe),
                       std::move(pspace));
}

SoftHybridSet complement(const SoftHybridSet& s) {
  GradeMap params;
  for (Index e = 0; e < s.param_count(); ++e) {
    double g = 1.0 - s.param_grade(e);
    if (g > 0.0) params.emplace(e, g);
  }
  ValueMap values;
  for (Index e = 0; e < s.param_count(); ++e) {
    GradeMap row;
    for (Index x = 0; x < s.item_count(); ++x) {
      double g = 1.0 - s.value_grade(e, x);
      if (g > 0.0) row.emplace(x, g);
    }
    if (!row.empty()) values.emplace(e, std::move(row));
  }
  return SoftHybridSet(unchecked, s.variant(), std::move(params),
                       std::move(values), s.universe_ptr(), s.pspace_ptr());
}

namespace {

void require_shared_spaces(const SoftHybridSet& s, const SoftHybridSet& t) {
  if (!s.same_spaces(t)) {
    throw Error(ErrorKind::MixedSpaces,
                "operands live over different universes or parameter spaces");
  }
}

GradeMap pointwise(const GradeMap& a, const GradeMap& b, bool take_max) {
  GradeMap out;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    Index key;
    double ga = 0.0, gb = 0.0;
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      key = ia->first;
      ga = ia->second;
      ++ia;
    } else if (ia == a.end() || ib->first < ia->first) {
      key = ib->first;
      gb = ib->second;
      ++ib;
    } else {
      key = ia->first;
      ga = ia->second;
      gb = ib->second;
      ++ia;
      ++ib;
    }
    double g = take_max ? std::max(ga, gb) : std::min(ga, gb);
    if (g > 0.0) out.emplace(key, g);
  }
  return out;
}

SoftHybridSet combine(const SoftHybridSet& s, const SoftHybridSet& t,
                      bool take_max) {
  require_shared_spaces(s, t);
  GradeMap params = pointwise(s.param_grades(), t.param_grades(), take_max);
  ValueMap values;
  auto is = s.value_grades().begin();
  auto it = t.value_grades().begin();
  const GradeMap empty;
  while (is != s.value_grades().end() || it != t.value_grades().end()) {
    Index e;
    const GradeMap* rs = &empty;
    const GradeMap* rt = &empty;
    if (it == t.value_grades().end() ||
        (is != s.value_grades().end() && is->first < it->first)) {
      e = is->first;
      rs = &is->second;
      ++is;
    } else if (is == s.value_grades().end() || it->first < is->first) {
      e = it->first;
      rt = &it->second;
      ++it;
    } else {
      e = is->first;
      rs = &is->second;
      rt = &it->second;
      ++is;
      ++it;
    }
    GradeMap row = pointwise(*rs, *rt, take_max);
    if (!row.empty()) values.emplace(e, std::move(row));
  }
  return SoftHybridSet(unchecked, variant_join(s.variant(), t.variant()),
                       std::move(params), std::move(values), s.universe_ptr(),
                       s.pspace_ptr());
}

std::vector<Index> support(const GradeMap& m) {
  std::vector<Index> keys;
  keys.reserve(m.size());
  for (const auto& [k, g] : m) keys.push_back(k);
  return keys;
}

// Fresh space of composite labels "(e,t)" over the two parameter supports,
// lexicographic in the source orders.
PSpacePtr product_space(const SoftHybridSet& s, const SoftHybridSet& t) {
  std::vector<std::string> labels;
  for (Index e : support(s.param_grades())) {
    for (Index u : support(t.param_grades())) {
      labels.push_back("(" + s.pspace().param(e) + "," + t.pspace().param(u) + ")");
    }
  }
  return std::make_shared<const ParameterSpace>(std::move(labels));
}

enum class ProductKind { and_min, or_max, left, right };

SoftHybridSet product(const SoftHybridSet& s, const SoftHybridSet& t,
                      ProductKind kind) {
  if (!s.same_universe(t)) {
    throw Error(ErrorKind::MixedSpaces, "operands live over different universes");
  }
  PSpacePtr pspace = product_space(s, t);
  const std::vector<Index> se = support(s.param_grades());
  const std::vector<Index> te = support(t.param_grades());
  const GradeMap empty;

  GradeMap params;
  ValueMap values;
  Index out = 0;
  for (Index e : se) {
    const GradeMap* rs = s.row(e) ? s.row(e) : &empty;
    for (Index u : te) {
      const GradeMap* rt = t.row(u) ? t.row(u) : &empty;
      double ps = s.param_grade(e);
      double pt = t.param_grade(u);
      double pg = 0.0;
      GradeMap row;
      switch (kind) {
        case ProductKind::and_min:
          pg = std::min(ps, pt);
          row = pointwise(*rs, *rt, false);
          break;
        case ProductKind::or_max:
          pg = std::max(ps, pt);
          row = pointwise(*rs, *rt, true);
          break;
        case ProductKind::left:
          pg = ps;
          row = *rs;
          break;
        case ProductKind::right:
          pg = pt;
          row = *rt;
          break;
      }
      if (pg > 0.0) params.emplace(out, pg);
      if (!row.empty()) values.emplace(out, std::move(row));
      ++out;
    }
  }
  return SoftHybridSet(unchecked, variant_join(s.variant(), t.variant()),
                       std::move(params), std::move(values), s.universe_ptr(),
                       std::move(pspace));
}

bool grid_leq(const GradeMap& a, const GradeMap& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end()) {
    while (ib != b.end() && ib->first < ia->first) ++ib;
    double gb = (ib != b.end() && ib->first == ia->first) ? ib->second : 0.0;
    if (ia->second > gb + kTol) return false;
    ++ia;
  }
  return true;
}

}  // namespace

SoftHybridSet union_of(const SoftHybridSet& s, const SoftHybridSet& t) {
  return combine(s, t, true);
}

SoftHybridSet intersection_of(const SoftHybridSet& s, const SoftHybridSet& t) {
  return combine(s, t, false);
}

SoftHybridSet and_product(const SoftHybridSet& s, const SoftHybridSet& t) {
  return product(s, t, ProductKind::and_min);
}

SoftHybridSet or_product(const SoftHybridSet& s, const SoftHybridSet& t) {
  return product(s, t, ProductKind::or_max);
}

SoftHybridSet reduce_left(const SoftHybridSet& s, const SoftHybridSet& t) {
  return product(s, t, ProductKind::left);
}

SoftHybridSet reduce_right(const SoftHybridSet& s, const SoftHybridSet& t) {
  return product(s, t, ProductKind::right);
}

bool is_subset(const SoftHybridSet& s, const SoftHybridSet& t) {
  require_shared_spaces(s, t);
  if (!grid_leq(s.param_grades(), t.param_grades())) return false;
  for (const auto& [e, row] : s.value_grades()) {
    const GradeMap* rt = t.row(e);
    static const GradeMap empty;
    if (!grid_leq(row, rt ? *rt : empty)) return false;
  }
  return true;
}

bool equals(const SoftHybridSet& s, const SoftHybridSet& t) {
  return is_subset(s, t) && is_subset(t, s);
}

}  // namespace softhybrid
