#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace softhybrid {

using Index = std::uint32_t;

namespace detail {

// Ordered, duplicate-free label list with index lookup. The declaration
// order is canonical: it fixes serialization and summation order.
class LabelTable {
 public:
  explicit LabelTable(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(Index i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<Index> find(std::string_view label) const;

  friend bool operator==(const LabelTable& a, const LabelTable& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Index> index_;
};

}  // namespace detail

// The ground set of items x1..xn.
class Universe {
 public:
  explicit Universe(std::vector<std::string> items) : table_(std::move(items)) {}

  std::size_t size() const noexcept { return table_.size(); }
  const std::string& item(Index i) const { return table_.label(i); }
  const std::vector<std::string>& items() const noexcept { return table_.labels(); }
  std::optional<Index> find(std::string_view item) const { return table_.find(item); }

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.table_ == b.table_;
  }

 private:
  detail::LabelTable table_;
};

// The parameter set e1..em.
class ParameterSpace {
 public:
  explicit ParameterSpace(std::vector<std::string> params)
      : table_(std::move(params)) {}

  std::size_t size() const noexcept { return table_.size(); }
  const std::string& param(Index i) const { return table_.label(i); }
  const std::vector<std::string>& params() const noexcept { return table_.labels(); }
  std::optional<Index> find(std::string_view param) const { return table_.find(param); }

  friend bool operator==(const ParameterSpace& a, const ParameterSpace& b) {
    return a.table_ == b.table_;
  }

 private:
  detail::LabelTable table_;
};

using UniversePtr = std::shared_ptr<const Universe>;
using PSpacePtr = std::shared_ptr<const ParameterSpace>;

}  // namespace softhybrid
