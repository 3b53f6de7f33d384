#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsord/domain.hpp"
#include "qsord/relation.hpp"

namespace qsord {

using LabelPair = std::pair<std::string, std::string>;

/// A domain with a precedence relation (x before y) and a weak precedence
/// relation (x not after y). Values are immutable once built.
class Structure {
 public:
  Structure() = default;
  /// Both relations must have the domain's size.
  Structure(Domain domain, Relation prec, Relation weak);

  const Domain& domain() const { return domain_; }
  const Relation& prec() const { return prec_; }
  const Relation& weak() const { return weak_; }
  std::size_t size() const { return domain_.size(); }

  /// prec ∪ weak, the graph used by every connectivity argument.
  Relation combined() const { return prec_ | weak_; }

  friend bool operator==(const Structure&, const Structure&) = default;

 private:
  Domain domain_;
  Relation prec_;
  Relation weak_;
};

/// Builds a structure from labels and label pairs. Duplicate pairs collapse.
/// Throws InvalidInput on duplicate labels or pairs naming unknown labels.
Structure make_structure(std::vector<std::string> labels, const std::vector<LabelPair>& prec,
                         const std::vector<LabelPair>& weak);

bool is_relational(const Structure& s);

/// True iff `ext` has the same label set as `base` and contains both of its
/// relations. Label order may differ.
bool extends(const Structure& base, const Structure& ext);

Structure project(const Structure& s, Mask subset);
Structure project(const Structure& s, const std::vector<std::string>& labels);

/// Common labels (in the order of `s`) with pairwise intersected relations.
Structure intersect(const Structure& s, const Structure& t);

Structure add_element(const Structure& s, std::string label);
Structure add_prec(const Structure& s, Index x, Index y);
Structure add_weak(const Structure& s, Index x, Index y);
Structure add_prec(const Structure& s, std::string_view x, std::string_view y);
Structure add_weak(const Structure& s, std::string_view x, std::string_view y);

/// Irreflexive and transitive relation over a domain.
class Poset {
 public:
  Poset() = default;
  /// Throws InvalidInput when `prec` is not a strict partial order.
  Poset(Domain domain, Relation prec);
  static Poset make(std::vector<std::string> labels, const std::vector<LabelPair>& prec);

  const Domain& domain() const { return domain_; }
  const Relation& prec() const { return prec_; }
  std::size_t size() const { return domain_.size(); }

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  Domain domain_;
  Relation prec_;
};

/// Weak precedence of a partial order: y ⊀ x and x ≠ y.
Relation weak_of_order(const Relation& prec);

/// Embeds a partial order as a structure whose unordered pairs are
/// simultaneous.
Structure rho(const Poset& p);

std::vector<LabelPair> label_pairs(const Domain& d, const Relation& r);

}  // namespace qsord
