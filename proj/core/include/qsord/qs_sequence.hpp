#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsord/qs_order.hpp"

namespace qsord {

/// One tree of a QS-sequence: a base set, and either no children (a leaf) or
/// a sequence of at least two child strata.
struct QssStratum {
  Mask base = 0;
  std::vector<QssStratum> children;

  static QssStratum leaf(Mask base) { return {base, {}}; }
  static QssStratum node(Mask base, std::vector<QssStratum> children) {
    return {base, std::move(children)};
  }

  bool is_leaf() const { return children.empty(); }
  /// Union of all base sets in the tree.
  Mask domain() const;

  friend bool operator==(const QssStratum&, const QssStratum&) = default;
};

/// Ordered forest of strata over a labeled domain. Masks index into `domain`.
class QsSeq {
 public:
  QsSeq() = default;
  QsSeq(Domain domain, std::vector<QssStratum> strata)
      : domain_(std::move(domain)), strata_(std::move(strata)) {}

  const Domain& domain() const { return domain_; }
  const std::vector<QssStratum>& strata() const { return strata_; }

  friend bool operator==(const QsSeq&, const QsSeq&) = default;

 private:
  Domain domain_;
  std::vector<QssStratum> strata_;
};

/// Union of all base sets.
Mask domain_of(const QsSeq& q);

/// nullopt when the sequence is well formed, otherwise a description of the
/// first problem found. Besides the formation rules the bases must cover the
/// whole declared domain.
std::optional<std::string> validate(const QsSeq& q);

/// Sequence → order: leaves are antichains, sequences compose, and a node
/// adds its base elements isolated to the order of its children.
/// Throws InvalidInput on an invalid sequence.
QsOrder g_map(const QsSeq& q);

/// Order → sequence, the inverse of g_map. A stratum takes all of its
/// unrelated elements as its base. Throws InvalidInput on the empty order.
QsSeq i_map(const QsOrder& q);

/// Every QS-sequence over `labels`, each exactly once.
std::vector<QsSeq> enumerate_qs_seqs(const std::vector<std::string>& labels,
                                     std::size_t bound = kDefaultEnumerationBound);

/// Random well-formed sequence over nonempty `labels`; deterministic per seed.
QsSeq random_qs_seq(const std::vector<std::string>& labels, std::uint64_t seed);

namespace detail {

/// All stratum-sequences over the element set `universe`.
std::vector<std::vector<QssStratum>> qs_seqs_over(Mask universe);
/// Precedence relation over n elements generated by a stratum sequence.
Relation g_relation(std::size_t n, const std::vector<QssStratum>& strata);
/// Cached list of all QS-order relations over {0..n-1}.
const std::vector<Relation>& qs_order_relations(std::size_t n);

}  // namespace detail

}  // namespace qsord
