#include "softhybrid/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "softhybrid/error.hpp"

namespace softhybrid::oracle {

namespace {

// Portable deterministic generator (splitmix64); std::mt19937 distributions
// are implementation-defined, this is not.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double uniform() { return double(next() >> 11) * 0x1.0p-53; }

  std::uint32_t below(std::uint32_t k) {
    return std::uint32_t(next() % std::uint64_t(k));
  }
};

void require_shared_spaces(const SoftHybridSet& s, const SoftHybridSet& t) {
  if (!s.same_spaces(t)) {
    throw Error(ErrorKind::MixedSpaces,
                "operands live over different universes or parameter spaces");
  }
}

void require_shared_universe(const SoftHybridSet& s, const SoftHybridSet& t) {
  if (!s.same_universe(t)) {
    throw Error(ErrorKind::MixedSpaces, "operands live over different universes");
  }
}

DenseSet dense_complement(const DenseSet& d) {
  DenseSet out = d;
  for (Index e = 0; e < d.m; ++e) out.param_row[e] = 1.0 - d.param_row[e];
  for (Index e = 0; e < d.m; ++e) {
    for (Index x = 0; x < d.n; ++x) out.cell(e, x) = 1.0 - d.cell(e, x);
  }
  return out;
}

std::vector<Index> dense_support(const DenseSet& d) {
  std::vector<Index> keys;
  for (Index e = 0; e < d.m; ++e) {
    if (d.param_row[e] > 0.0) keys.push_back(e);
  }
  return keys;
}

PSpacePtr dense_product_space(const SoftHybridSet& s, const SoftHybridSet& t,
                              const std::vector<Index>& se,
                              const std::vector<Index>& te) {
  std::vector<std::string> labels;
  for (Index e : se) {
    for (Index u : te) {
      labels.push_back("(" + s.pspace().param(e) + "," + t.pspace().param(u) + ")");
    }
  }
  return std::make_shared<const ParameterSpace>(std::move(labels));
}

enum class ProductKind { and_min, or_max, left, right };

SoftHybridSet dense_product(const SoftHybridSet& s, const SoftHybridSet& t,
                            ProductKind kind) {
  require_shared_universe(s, t);
  DenseSet ds = densify(s);
  DenseSet dt = densify(t);
  std::vector<Index> se = dense_support(ds);
  std::vector<Index> te = dense_support(dt);
  PSpacePtr pspace = dense_product_space(s, t, se, te);

  DenseSet out;
  out.variant = variant_join(s.variant(), t.variant());
  out.m = se.size() * te.size();
  out.n = ds.n;
  out.param_row.assign(out.m, 0.0);
  out.value_grid.assign(out.m * out.n, 0.0);

  Index row = 0;
  for (Index e : se) {
    for (Index u : te) {
      switch (kind) {
        case ProductKind::and_min:
          out.param_row[row] = std::min(ds.param_row[e], dt.param_row[u]);
          for (Index x = 0; x < out.n; ++x) {
            out.cell(row, x) = std::min(ds.cell(e, x), dt.cell(u, x));
          }
          break;
        case ProductKind::or_max:
          out.param_row[row] = std::max(ds.param_row[e], dt.param_row[u]);
          for (Index x = 0; x < out.n; ++x) {
            out.cell(row, x) = std::max(ds.cell(e, x), dt.cell(u, x));
          }
          break;
        case ProductKind::left:
          out.param_row[row] = ds.param_row[e];
          for (Index x = 0; x < out.n; ++x) out.cell(row, x) = ds.cell(e, x);
          break;
        case ProductKind::right:
          out.param_row[row] = dt.param_row[u];
          for (Index x = 0; x < out.n; ++x) out.cell(row, x) = dt.cell(u, x);
          break;
      }
      ++row;
    }
  }
  return sparsify(out, s.universe_ptr(), pspace);
}

std::pair<double, double> dense_cardinality(const DenseSet& d) {
  double a = 0.0, b = 0.0;
  for (Index e = 0; e < d.m; ++e) a += d.param_row[e];
  for (Index e = 0; e < d.m; ++e) {
    for (Index x = 0; x < d.n; ++x) b += d.cell(e, x);
  }
  return {a, b};
}

std::pair<double, double> dense_entropy(const DenseSet& d, EvaluationDomain dom) {
  double pn = 0.0, pd = 0.0, vn = 0.0, vd = 0.0;
  for (Index e = 0; e < d.m; ++e) {
    double g = d.param_row[e];
    if (dom == EvaluationDomain::support && g <= 0.0) continue;
    pn += std::min(g, 1.0 - g);
    pd += std::max(g, 1.0 - g);
  }
  for (Index e = 0; e < d.m; ++e) {
    for (Index x = 0; x < d.n; ++x) {
      double g = d.cell(e, x);
      if (dom == EvaluationDomain::support && g <= 0.0) continue;
      vn += std::min(g, 1.0 - g);
      vd += std::max(g, 1.0 - g);
    }
  }
  return {pd == 0.0 ? 0.0 : pn / pd, vd == 0.0 ? 0.0 : vn / vd};
}

std::pair<double, double> dense_similarity(const DenseSet& a, const DenseSet& b) {
  double pn = 0.0, pd = 0.0, vn = 0.0, vd = 0.0;
  for (Index e = 0; e < a.m; ++e) {
    pn += std::min(a.param_row[e], b.param_row[e]);
    pd += std::max(a.param_row[e], b.param_row[e]);
  }
  for (Index e = 0; e < a.m; ++e) {
    for (Index x = 0; x < a.n; ++x) {
      vn += std::min(a.cell(e, x), b.cell(e, x));
      vd += std::max(a.cell(e, x), b.cell(e, x));
    }
  }
  return {pd == 0.0 ? 1.0 : pn / pd, vd == 0.0 ? 1.0 : vn / vd};
}

std::pair<double, double> dense_subsethood(const DenseSet& a, const DenseSet& b) {
  double pn = 0.0, pd = 0.0, vn = 0.0, vd = 0.0;
  for (Index e = 0; e < a.m; ++e) {
    pn += std::min(a.param_row[e], b.param_row[e]);
    pd += a.param_row[e];
  }
  for (Index e = 0; e < a.m; ++e) {
    for (Index x = 0; x < a.n; ++x) {
      vn += std::min(a.cell(e, x), b.cell(e, x));
      vd += a.cell(e, x);
    }
  }
  return {pd == 0.0 ? 1.0 : pn / pd, vd == 0.0 ? 1.0 : vn / vd};
}

}  // namespace

DenseSet densify(const SoftHybridSet& s) {
  DenseSet d;
  d.variant = s.variant();
  d.m = s.param_count();
  d.n = s.item_count();
  d.param_row.assign(d.m, 0.0);
  d.value_grid.assign(d.m * d.n, 0.0);
  for (const auto& [e, g] : s.param_grades()) d.param_row[e] = g;
  for (const auto& [e, row] : s.value_grades()) {
    for (const auto& [x, g] : row) d.cell(e, x) = g;
  }
  return d;
}

SoftHybridSet sparsify(const DenseSet& d, UniversePtr universe, PSpacePtr pspace) {
  if (d.m != pspace->size() || d.n != universe->size() ||
      d.param_row.size() != d.m || d.value_grid.size() != d.m * d.n) {
    throw Error(ErrorKind::DimensionMismatch,
                "dense set does not fit the given universe/parameter space");
  }
  GradeMap params;
  for (Index e = 0; e < d.m; ++e) {
    if (d.param_row[e] > 0.0) params.emplace(e, d.param_row[e]);
  }
  ValueMap values;
  for (Index e = 0; e < d.m; ++e) {
    GradeMap row;
    for (Index x = 0; x < d.n; ++x) {
      if (d.cell(e, x) > 0.0) row.emplace(x, d.cell(e, x));
    }
    if (!row.empty()) values.emplace(e, std::move(row));
  }
  return SoftHybridSet(unchecked, d.variant, std::move(params), std::move(values),
                       std::move(universe), std::move(pspace));
}

SoftHybridSet complement(const SoftHybridSet& s) {
  return sparsify(dense_complement(densify(s)), s.universe_ptr(), s.pspace_ptr());
}

SoftHybridSet union_of(const SoftHybridSet& s, const SoftHybridSet& t) {
  require_shared_spaces(s, t);
  DenseSet a = densify(s);
  DenseSet b = densify(t);
  DenseSet out = a;
  out.variant = variant_join(s.variant(), t.variant());
  for (Index e = 0; e < a.m; ++e) {
    out.param_row[e] = std::max(a.param_row[e], b.param_row[e]);
  }
  for (Index e = 0; e < a.m; ++e) {
    for (Index x = 0; x < a.n; ++x) {
      out.cell(e, x) = std::max(a.cell(e, x), b.cell(e, x));
    }
  }
  return sparsify(out, s.universe_ptr(), s.pspace_ptr());
}

SoftHybridSet intersection_of(const SoftHybridSet& s, const SoftHybridSet& t) {
  require_shared_spaces(s, t);
  DenseSet a = densify(s);
  DenseSet b = densify(t);
  DenseSet out = a;
  out.variant = variant_join(s.variant(), t.variant());
  for (Index e = 0; e < a.m; ++e) {
    out.param_row[e] = std::min(a.param_row[e], b.param_row[e]);
  }
  for (Index e = 0; e < a.m; ++e) {
    for (Index x = 0; x < a.n; ++x) {
      out.cell(e, x) = std::min(a.cell(e, x), b.cell(e, x));
    }
  }
  return sparsify(out, s.universe_ptr(), s.pspace_ptr());
}

SoftHybridSet and_product(const SoftHybridSet& s, const SoftHybridSet& t) {
  return dense_product(s, t, ProductKind::and_min);
}

SoftHybridSet or_product(const SoftHybridSet& s, const SoftHybridSet& t) {
  return dense_product(s, t, ProductKind::or_max);
}

SoftHybridSet reduce_left(const SoftHybridSet& s, const SoftHybridSet& t) {
  return dense_product(s, t, ProductKind::left);
}

SoftHybridSet reduce_right(const SoftHybridSet& s, const SoftHybridSet& t) {
  return dense_product(s, t, ProductKind::right);
}

bool is_subset(const SoftHybridSet& s, const SoftHybridSet& t) {
  require_shared_spaces(s, t);
  DenseSet a = densify(s);
  DenseSet b = densify(t);
  for (Index e = 0; e < a.m; ++e) {
    if (a.param_row[e] > b.param_row[e] + kTol) return false;
  }
  for (Index e = 0; e < a.m; ++e) {
    for (Index x = 0; x < a.n; ++x) {
      if (a.cell(e, x) > b.cell(e, x) + kTol) return false;
    }
  }
  return true;
}

bool equals(const SoftHybridSet& s, const SoftHybridSet& t) {
  return oracle::is_subset(s, t) && oracle::is_subset(t, s);
}

MeasureKind measure_kind_from_string(std::string_view name) {
  if (name == "card") return MeasureKind::card;
  if (name == "entropy") return MeasureKind::entropy;
  if (name == "sim") return MeasureKind::sim;
  if (name == "sub") return MeasureKind::sub;
  if (name == "depth") return MeasureKind::depth;
  throw std::invalid_argument("unknown measure kind '" + std::string(name) + "'");
}

std::pair<double, double> measure(MeasureKind kind,
                                  const std::vector<SoftHybridSet>& sets,
                                  EvaluationDomain domain) {
  auto unary = [&]() -> const SoftHybridSet& {
    if (sets.size() != 1) throw std::invalid_argument("measure takes one set");
    return sets[0];
  };
  auto binary = [&]() {
    if (sets.size() != 2) throw std::invalid_argument("measure takes two sets");
    require_shared_spaces(sets[0], sets[1]);
  };
  switch (kind) {
    case MeasureKind::card:
      return dense_cardinality(densify(unary()));
    case MeasureKind::entropy:
      return dense_entropy(densify(unary()), domain);
    case MeasureKind::sim:
      binary();
      return dense_similarity(densify(sets[0]), densify(sets[1]));
    case MeasureKind::sub:
      binary();
      return dense_subsethood(densify(sets[0]), densify(sets[1]));
    case MeasureKind::depth: {
      const SoftHybridSet& s = unary();
      auto [a, b] = dense_cardinality(densify(s));
      double m = double(s.param_count());
      double mn = m * double(s.item_count());
      return {std::max(0.0, m - a), std::max(0.0, mn - b)};
    }
  }
  throw std::invalid_argument("unknown measure kind");
}

SoftHybridSet random_set(std::uint64_t seed, Variant variant, std::size_t m,
                         std::size_t n, double density, int grade_resolution) {
  SplitMix64 rng(seed);
  std::vector<std::string> params, items;
  for (std::size_t e = 0; e < m; ++e) params.push_back("e" + std::to_string(e + 1));
  for (std::size_t x = 0; x < n; ++x) items.push_back("x" + std::to_string(x + 1));
  auto universe = std::make_shared<const Universe>(std::move(items));
  auto pspace = std::make_shared<const ParameterSpace>(std::move(params));

  const double r = double(grade_resolution);
  auto lattice = [&]() { return double(1 + rng.below(std::uint32_t(grade_resolution))) / r; };

  GradeMap pg;
  ValueMap vg;
  for (Index e = 0; e < m; ++e) {
    if (rng.uniform() >= density) continue;
    pg.emplace(e, variant_constrains_params(variant) ? 1.0 : lattice());
    GradeMap row;
    for (Index x = 0; x < n; ++x) {
      if (rng.uniform() >= density) continue;
      row.emplace(x, variant_constrains_values(variant) ? 1.0 : lattice());
    }
    if (!row.empty()) vg.emplace(e, std::move(row));
  }
  return SoftHybridSet::make(variant, std::move(pg), std::move(vg),
                             std::move(universe), std::move(pspace));
}

namespace {

std::string describe(const std::vector<SoftHybridSet>& sets) {
  std::ostringstream os;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i) os << "; ";
    CardinalPair c = cardinality(sets[i]);
    os << to_string(sets[i].variant()) << " m=" << sets[i].param_count()
       << " n=" << sets[i].item_count() << " card=(" << c.a << "," << c.b << ")";
  }
  return os.str();
}

IdentityReport make_report(std::string name, const std::vector<SoftHybridSet>& sets,
                           std::vector<double> left, std::vector<double> right,
                           std::string note = {}) {
  IdentityReport r;
  r.identity = std::move(name);
  r.inputs = describe(sets);
  if (!note.empty()) r.inputs += " [" + note + "]";
  r.left = std::move(left);
  r.right = std::move(right);
  for (std::size_t i = 0; i < r.left.size(); ++i) {
    r.residual = std::max(r.residual, std::abs(r.left[i] - r.right[i]));
  }
  r.holds = r.residual <= kTol;
  return r;
}

double max_grade_diff(const SoftHybridSet& a, const SoftHybridSet& b) {
  double diff = 0.0;
  for (Index e = 0; e < a.param_count(); ++e) {
    diff = std::max(diff, std::abs(a.param_grade(e) - b.param_grade(e)));
    for (Index x = 0; x < a.item_count(); ++x) {
      diff = std::max(diff, std::abs(a.value_grade(e, x) - b.value_grade(e, x)));
    }
  }
  return diff;
}

std::vector<double> card_sum(const SoftHybridSet& a, const SoftHybridSet& b) {
  CardinalPair p = pair_add(cardinality(a), cardinality(b));
  return {p.a, p.b};
}

using Eval = IdentityReport (*)(const std::string&, const std::vector<SoftHybridSet>&,
                                EvaluationDomain);

struct IdentityEntry {
  IdentityInfo info;
  Eval eval;
};

IdentityReport eval_card_modularity(const std::string& name,
                                    const std::vector<SoftHybridSet>& in,
                                    EvaluationDomain) {
  return make_report(name, in,
                     card_sum(softhybrid::union_of(in[0], in[1]),
                              softhybrid::intersection_of(in[0], in[1])),
                     card_sum(in[0], in[1]));
}

IdentityReport eval_card_modularity_c(const std::string& name,
                                      const std::vector<SoftHybridSet>& in,
                                      EvaluationDomain) {
  SoftHybridSet sc = softhybrid::complement(in[0]);
  SoftHybridSet tc = softhybrid::complement(in[1]);
  return make_report(name, in,
                     card_sum(softhybrid::union_of(sc, tc),
                              softhybrid::intersection_of(sc, tc)),
                     card_sum(sc, tc));
}

IdentityReport eval_product_modularity(const std::string& name,
                                       const std::vector<SoftHybridSet>& in,
                                       EvaluationDomain) {
  return make_report(name, in,
                     card_sum(softhybrid::or_product(in[0], in[1]),
                              softhybrid::and_product(in[0], in[1])),
                     card_sum(softhybrid::reduce_left(in[0], in[1]),
                              softhybrid::reduce_right(in[0], in[1])));
}

IdentityReport eval_product_modularity_c(const std::string& name,
                                         const std::vector<SoftHybridSet>& in,
                                         EvaluationDomain) {
  return make_report(
      name, in,
      card_sum(softhybrid::complement(softhybrid::or_product(in[0], in[1])),
               softhybrid::complement(softhybrid::and_product(in[0], in[1]))),
      card_sum(softhybrid::complement(softhybrid::reduce_left(in[0], in[1])),
               softhybrid::complement(softhybrid::reduce_right(in[0], in[1]))));
}

IdentityReport monotonicity_report(const std::string& name,
                                   const std::vector<SoftHybridSet>& in,
                                   const SoftHybridSet& s, const SoftHybridSet& t) {
  if (!softhybrid::is_subset(s, t)) {
    return make_report(name, in, {0.0}, {0.0}, "not nested; vacuous");
  }
  CardinalPair cs = cardinality(s);
  CardinalPair ct = cardinality(t);
  IdentityReport r;
  r.identity = name;
  r.inputs = describe(in);
  r.left = {cs.a, cs.b};
  r.right = {ct.a, ct.b};
  r.residual = std::max(std::max(0.0, cs.a - ct.a), std::max(0.0, cs.b - ct.b));
  r.holds = r.residual <= kTol;
  return r;
}

IdentityReport eval_card_monotonicity(const std::string& name,
                                      const std::vector<SoftHybridSet>& in,
                                      EvaluationDomain) {
  return monotonicity_report(name, in, in[0], in[1]);
}

IdentityReport eval_card_monotonicity_c(const std::string& name,
                                        const std::vector<SoftHybridSet>& in,
                                        EvaluationDomain) {
  return monotonicity_report(name, in, softhybrid::complement(in[0]),
                             softhybrid::complement(in[1]));
}

IdentityReport eval_card_null(const std::string& name,
                              const std::vector<SoftHybridSet>& in,
                              EvaluationDomain) {
  CardinalPair c = cardinality(in[0]);
  bool zero = std::abs(c.a) <= kTol && std::abs(c.b) <= kTol;
  bool null = softhybrid::equals(
      in[0], null_set(in[0].universe_ptr(), in[0].pspace_ptr()));
  IdentityReport r;
  r.identity = name;
  r.inputs = describe(in);
  r.left = {c.a, c.b};
  r.right = {0.0, 0.0};
  r.residual = (zero == null) ? 0.0 : 1.0;
  r.holds = r.residual <= kTol;
  return r;
}

IdentityReport eval_card_bound(const std::string& name,
                               const std::vector<SoftHybridSet>& in,
                               EvaluationDomain) {
  CardinalPair c = cardinality(in[0]);
  double m = double(in[0].param_count());
  double mn = m * double(in[0].item_count());
  IdentityReport r;
  r.identity = name;
  r.inputs = describe(in);
  r.left = {c.a, c.b};
  r.right = {m, mn};
  r.residual = std::max(std::max(0.0, c.a - m), std::max(0.0, c.b - mn));
  r.holds = r.residual <= kTol;
  return r;
}

IdentityReport eval_involution(const std::string& name,
                               const std::vector<SoftHybridSet>& in,
                               EvaluationDomain) {
  SoftHybridSet cc = softhybrid::complement(softhybrid::complement(in[0]));
  IdentityReport r;
  r.identity = name;
  r.inputs = describe(in);
  r.residual = max_grade_diff(cc, in[0]);
  r.holds = r.residual <= kTol;
  return r;
}

IdentityReport eval_entropy_num_modularity(const std::string& name,
                                           const std::vector<SoftHybridSet>& in,
                                           EvaluationDomain dom) {
  EntropyTerms i_t = entropy_terms(softhybrid::intersection_of(in[0], in[1]), dom);
  EntropyTerms u_t = entropy_terms(softhybrid::union_of(in[0], in[1]), dom);
  EntropyTerms s_t = entropy_terms(in[0], dom);
  EntropyTerms t_t = entropy_terms(in[1], dom);
  return make_report(name, in, {i_t.p_num + u_t.p_num, i_t.v_num + u_t.v_num},
                     {s_t.p_num + t_t.p_num, s_t.v_num + t_t.v_num});
}

IdentityReport eval_entropy_den_modularity(const std::string& name,
                                           const std::vector<SoftHybridSet>& in,
                                           EvaluationDomain dom) {
  EntropyTerms i_t = entropy_terms(softhybrid::intersection_of(in[0], in[1]), dom);
  EntropyTerms u_t = entropy_terms(softhybrid::union_of(in[0], in[1]), dom);
  EntropyTerms s_t = entropy_terms(in[0], dom);
  EntropyTerms t_t = entropy_terms(in[1], dom);
  return make_report(name, in, {i_t.p_den + u_t.p_den, i_t.v_den + u_t.v_den},
                     {s_t.p_den + t_t.p_den, s_t.v_den + t_t.v_den});
}

IdentityReport eval_entropy_ratio_modularity(const std::string& name,
                                             const std::vector<SoftHybridSet>& in,
                                             EvaluationDomain dom) {
  MeasurePair ei = entropy(softhybrid::intersection_of(in[0], in[1]), dom);
  MeasurePair eu = entropy(softhybrid::union_of(in[0], in[1]), dom);
  MeasurePair es = entropy(in[0], dom);
  MeasurePair et = entropy(in[1], dom);
  return make_report(name, in, {ei.p + eu.p, ei.v + eu.v},
                     {es.p + et.p, es.v + et.v});
}

IdentityReport eval_entropy_complement(const std::string& name,
                                       const std::vector<SoftHybridSet>& in,
                                       EvaluationDomain) {
  MeasurePair a = entropy(in[0], EvaluationDomain::grid);
  MeasurePair b = entropy(softhybrid::complement(in[0]), EvaluationDomain::grid);
  return make_report(name, in, {a.p, a.v}, {b.p, b.v});
}

IdentityReport eval_ent_equals_sim(const std::string& name,
                                   const std::vector<SoftHybridSet>& in,
                                   EvaluationDomain) {
  SoftHybridSet c = softhybrid::complement(in[0]);
  MeasurePair lhs = entropy(in[0], EvaluationDomain::grid);
  MeasurePair rhs = similarity(softhybrid::union_of(in[0], c),
                               softhybrid::intersection_of(in[0], c));
  return make_report(name, in, {lhs.p, lhs.v}, {rhs.p, rhs.v});
}

IdentityReport eval_sim_equals_sub(const std::string& name,
                                   const std::vector<SoftHybridSet>& in,
                                   EvaluationDomain) {
  MeasurePair lhs = similarity(in[0], in[1]);
  MeasurePair rhs = subsethood(softhybrid::union_of(in[0], in[1]),
                               softhybrid::intersection_of(in[0], in[1]));
  return make_report(name, in, {lhs.p, lhs.v}, {rhs.p, rhs.v});
}

IdentityReport eval_sub_inter_union(const std::string& name,
                                    const std::vector<SoftHybridSet>& in,
                                    EvaluationDomain) {
  MeasurePair lhs = subsethood(softhybrid::intersection_of(in[0], in[1]),
                               softhybrid::union_of(in[0], in[1]));
  return make_report(name, in, {lhs.p, lhs.v}, {1.0, 1.0});
}

const std::vector<IdentityEntry>& registry() {
  static const std::vector<IdentityEntry> entries = {
      {{"cardinality-modularity", 2, false, false}, eval_card_modularity},
      {{"cardinality-modularity-complement", 2, false, false}, eval_card_modularity_c},
      {{"product-modularity", 2, false, false}, eval_product_modularity},
      {{"product-modularity-complement", 2, false, false}, eval_product_modularity_c},
      {{"cardinality-monotonicity", 2, false, false}, eval_card_monotonicity},
      {{"cardinality-monotonicity-complement", 2, false, false}, eval_card_monotonicity_c},
      {{"cardinality-null", 1, false, false}, eval_card_null},
      {{"cardinality-bound", 1, false, false}, eval_card_bound},
      {{"involution", 1, false, false}, eval_involution},
      {{"entropy-num-modularity", 2, false, false}, eval_entropy_num_modularity},
      {{"entropy-den-modularity", 2, false, false}, eval_entropy_den_modularity},
      {{"entropy-ratio-modularity", 2, false, true}, eval_entropy_ratio_modularity},
      {{"entropy-complement", 1, true, false}, eval_entropy_complement},
      {{"ent-equals-sim", 1, true, false}, eval_ent_equals_sim},
      {{"sim-equals-sub", 2, false, false}, eval_sim_equals_sub},
      {{"sub-intersection-union", 2, false, false}, eval_sub_inter_union},
  };
  return entries;
}

}  // namespace

const std::vector<IdentityInfo>& registered_identities() {
  static const std::vector<IdentityInfo> infos = [] {
    std::vector<IdentityInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

IdentityReport check_identity(const std::string& name,
                              const std::vector<SoftHybridSet>& sets,
                              EvaluationDomain domain) {
  for (const auto& entry : registry()) {
    if (entry.info.name != name) continue;
    if (sets.size() != std::size_t(entry.info.arity)) {
      throw Error(ErrorKind::DimensionMismatch,
                  "identity '" + name + "' takes " +
                      std::to_string(entry.info.arity) + " set(s), got " +
                      std::to_string(sets.size()));
    }
    return entry.eval(name, sets, domain);
  }
  throw Error(ErrorKind::UnknownIdentity, "no identity named '" + name + "'");
}

std::optional<RatioCounterexample> find_entropy_ratio_counterexample(
    std::size_t max_m, std::size_t max_n, int grade_resolution) {
  const int r = grade_resolution;
  for (std::size_t m = 1; m <= max_m; ++m) {
    for (std::size_t n = 1; n <= max_n; ++n) {
      std::vector<std::string> params, items;
      for (std::size_t e = 0; e < m; ++e) params.push_back("e" + std::to_string(e + 1));
      for (std::size_t x = 0; x < n; ++x) items.push_back("x" + std::to_string(x + 1));
      auto universe = std::make_shared<const Universe>(std::move(items));
      auto pspace = std::make_shared<const ParameterSpace>(std::move(params));

      auto build = [&](const std::vector<int>& digits) {
        GradeMap g;
        for (Index e = 0; e < m; ++e) {
          if (digits[e] > 0) g.emplace(e, double(digits[e]) / double(r));
        }
        return SoftHybridSet(unchecked, Variant::fp_soft, std::move(g), {},
                             universe, pspace);
      };
      auto advance = [&](std::vector<int>& digits) {
        for (std::size_t i = m; i-- > 0;) {
          if (++digits[i] <= r) return true;
          digits[i] = 0;
        }
        return false;
      };

      std::vector<int> da(m, 0);
      do {
        SoftHybridSet a = build(da);
        std::vector<int> db(m, 0);
        do {
          SoftHybridSet b = build(db);
          IdentityReport rep = check_identity("entropy-ratio-modularity", {a, b},
                                              EvaluationDomain::grid);
          if (!rep.holds) {
            return RatioCounterexample{std::move(a), std::move(b), rep.residual};
          }
        } while (advance(db));
      } while (advance(da));
    }
  }
  return std::nullopt;
}

}  // namespace softhybrid::oracle
