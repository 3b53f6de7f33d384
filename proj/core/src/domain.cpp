#include "qsord/domain.hpp"

#include "qsord/error.hpp"

namespace qsord {

Domain::Domain(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > kMaxElements) {
    throw InvalidInput("domain has " + std::to_string(labels_.size()) + " elements, at most " +
                       std::to_string(kMaxElements) + " supported");
  }
  index_.reserve(labels_.size());
  for (Index i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw InvalidInput("empty label");
    if (!index_.emplace(labels_[i], i).second) {
      throw InvalidInput("duplicate label '" + labels_[i] + "'");
    }
  }
}

std::optional<Index> Domain::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Index Domain::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw InvalidInput("unknown label '" + std::string(label) + "'");
}

Mask Domain::mask_of(std::span<const std::string> labels) const {
  Mask m = 0;
  for (const auto& l : labels) m |= bit(index_of(l));
  return m;
}

std::vector<std::string> Domain::labels_of(Mask m) const {
  std::vector<std::string> out;
  for_each_bit(m & all(), [&](Index i) { out.push_back(labels_[i]); });
  return out;
}

Domain Domain::restricted(Mask keep) const { return Domain(labels_of(keep)); }

Domain Domain::with(std::string label) const {
  auto labels = labels_;
  labels.push_back(std::move(label));
  return Domain(std::move(labels));
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i)) : "x" + std::to_string(i));
  }
  return out;
}

}  // namespace qsord
