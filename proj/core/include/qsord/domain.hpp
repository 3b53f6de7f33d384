#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "qsord/bits.hpp"

namespace qsord {

/// Finite set of labeled elements. Iteration order is declaration order, and
/// every algorithm in the library works on the positions of that order.
class Domain {
 public:
  Domain() = default;
  explicit Domain(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  Mask all() const { return full_mask(size()); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Index i) const { return labels_.at(i); }

  std::optional<Index> find(std::string_view label) const;
  /// Throws InvalidInput for an unknown label.
  Index index_of(std::string_view label) const;
  bool contains(std::string_view label) const { return find(label).has_value(); }

  Mask mask_of(std::span<const std::string> labels) const;
  std::vector<std::string> labels_of(Mask m) const;

  /// Sub-domain keeping the elements of `keep` in their original order.
  Domain restricted(Mask keep) const;
  Domain with(std::string label) const;

  friend bool operator==(const Domain& a, const Domain& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Index> index_;
};

/// `a`, `b`, ... for up to 26 elements, `x0`, `x1`, ... beyond that.
std::vector<std::string> default_labels(std::size_t n);

}  // namespace qsord
