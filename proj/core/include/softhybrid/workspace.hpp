#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "softhybrid/soft_set.hpp"

namespace softhybrid {

// A named collection of sets sharing one universe and parameter space; the
// unit of dataset IO.
class Workspace {
 public:
  Workspace(UniversePtr universe, PSpacePtr pspace)
      : universe_(std::move(universe)), pspace_(std::move(pspace)) {}

  // Rejects duplicate names and sets over foreign spaces.
  void add(std::string name, SoftHybridSet set);

  const UniversePtr& universe() const noexcept { return universe_; }
  const PSpacePtr& pspace() const noexcept { return pspace_; }
  const std::vector<std::pair<std::string, SoftHybridSet>>& sets() const noexcept {
    return sets_;
  }

  const SoftHybridSet* find(std::string_view name) const;
  // Like find, but throws UnknownLabel naming the set.
  const SoftHybridSet& at(std::string_view name) const;

  friend bool operator==(const Workspace& a, const Workspace& b);

 private:
  UniversePtr universe_;
  PSpacePtr pspace_;
  std::vector<std::pair<std::string, SoftHybridSet>> sets_;
};

// Reads the JSON dataset format:
//   { "universe": ["x1", ...], "parameters": ["e1", ...],
//     "sets": [ { "name": "F_A", "variant": "soft"|"fuzzy-soft"|"fp-soft"|"fpfs"|null,
//                 "params": {"e2": 0.2, ...},
//                 "values": {"e2": {"x2": 1.0, ...}, ...} } ] }
// A null variant is inferred as the strictest one the grades satisfy.
// Explicit zero grades are accepted and dropped. An optional top-level
// "format" string is accepted and ignored (reserved).
Workspace parse_workspace(std::string_view text);

// Canonical serialization: keys in declaration order, sets in insertion
// order, grades in their shortest decimal form, 2-space indent, trailing
// newline. Serializing a just-parsed workspace is byte-idempotent.
std::string serialize_workspace(const Workspace& ws);

}  // namespace softhybrid
