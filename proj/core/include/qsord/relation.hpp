#pragma once

#include <utility>
#include <vector>

#include "qsord/bits.hpp"

namespace qsord {

using IndexPair = std::pair<Index, Index>;

/// Dense binary relation over {0, ..., n-1}; row x holds the successors of x.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n) : n_(n), rows_(n, 0) {}

  std::size_t size() const { return n_; }

  bool test(Index x, Index y) const { return contains(rows_[x], y); }
  bool related(Index x, Index y) const { return test(x, y) || test(y, x); }
  void set(Index x, Index y) { rows_[x] |= bit(y); }
  void reset(Index x, Index y) { rows_[x] &= ~bit(y); }

  Mask row(Index x) const { return rows_[x]; }
  Mask column(Index y) const;
  void set_row(Index x, Mask m) { rows_[x] = m; }

  bool empty() const;
  std::size_t count() const;

  bool is_irreflexive() const;
  bool is_transitive() const;
  bool subset_of(const Relation& other) const;

  Relation& operator|=(const Relation& other);
  Relation& operator&=(const Relation& other);
  friend Relation operator|(Relation a, const Relation& b) { return a |= b; }
  friend Relation operator&(Relation a, const Relation& b) { return a &= b; }
  /// Pairs of `a` that are not in `b`.
  friend Relation operator-(const Relation& a, const Relation& b);

  Relation transposed() const;
  /// Restriction to `keep`, renumbered compactly in increasing index order.
  Relation restricted(Mask keep) const;
  /// Copy over `n` elements where element i becomes `target[i]`.
  Relation embedded(std::size_t n, const std::vector<Index>& target) const;

  /// All pairs, ordered lexicographically.
  std::vector<IndexPair> pairs() const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Mask> rows_;
};

}  // namespace qsord
