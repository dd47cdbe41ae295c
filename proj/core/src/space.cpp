#include "softhybrid/space.hpp"

#include "softhybrid/error.hpp"

namespace softhybrid::detail {

LabelTable::LabelTable(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  index_.reserve(labels_.size());
  for (Index i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) {
      throw Error(ErrorKind::SchemaError, "empty label at position " + std::to_string(i));
    }
    if (!index_.emplace(labels_[i], i).second) {
      throw Error(ErrorKind::SchemaError, "duplicate label '" + labels_[i] + "'");
    }
  }
}

std::optional<Index> LabelTable::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace softhybrid::detail
