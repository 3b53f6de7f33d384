#include "qsord/relation.hpp"

#include <cassert>

namespace qsord {

Mask Relation::column(Index y) const {
  Mask m = 0;
  for (Index x = 0; x < n_; ++x) {
    if (test(x, y)) m |= bit(x);
  }
  return m;
}

bool Relation::empty() const {
  for (Mask r : rows_) {
    if (r != 0) return false;
  }
  return true;
}

std::size_t Relation::count() const {
  std::size_t c = 0;
  for (Mask r : rows_) c += static_cast<std::size_t>(popcount(r));
  return c;
}

bool Relation::is_irreflexive() const {
  for (Index x = 0; x < n_; ++x) {
    if (test(x, x)) return false;
  }
  return true;
}

bool Relation::is_transitive() const {
  // x→y implies succ(y) ⊆ succ(x)
  for (Index x = 0; x < n_; ++x) {
    Mask reach = 0;
    for_each_bit(rows_[x], [&](Index y) { reach |= rows_[y]; });
    if ((reach & ~rows_[x]) != 0) return false;
  }
  return true;
}

bool Relation::subset_of(const Relation& other) const {
  assert(n_ == other.n_);
  for (Index x = 0; x < n_; ++x) {
    if ((rows_[x] & ~other.rows_[x]) != 0) return false;
  }
  return true;
}

Relation& Relation::operator|=(const Relation& other) {
  assert(n_ == other.n_);
  for (Index x = 0; x < n_; ++x) rows_[x] |= other.rows_[x];
  return *this;
}

Relation& Relation::operator&=(const Relation& other) {
  assert(n_ == other.n_);
  for (Index x = 0; x < n_; ++x) rows_[x] &= other.rows_[x];
  return *this;
}

Relation operator-(const Relation& a, const Relation& b) {
  assert(a.n_ == b.n_);
  Relation out = a;
  for (Index x = 0; x < a.n_; ++x) out.rows_[x] &= ~b.rows_[x];
  return out;
}

Relation Relation::transposed() const {
  Relation t(n_);
  for (Index x = 0; x < n_; ++x) {
    for_each_bit(rows_[x], [&](Index y) { t.set(y, x); });
  }
  return t;
}

Relation Relation::restricted(Mask keep) const {
  keep &= full_mask(n_);
  std::vector<Index> pos(n_, 0);
  Index next = 0;
  for_each_bit(keep, [&](Index i) { pos[i] = next++; });
  Relation out(next);
  for_each_bit(keep, [&](Index x) {
    for_each_bit(rows_[x] & keep, [&](Index y) { out.set(pos[x], pos[y]); });
  });
  return out;
}

Relation Relation::embedded(std::size_t n, const std::vector<Index>& target) const {
  assert(target.size() == n_);
  Relation out(n);
  for (Index x = 0; x < n_; ++x) {
    for_each_bit(rows_[x], [&](Index y) { out.set(target[x], target[y]); });
  }
  return out;
}

std::vector<IndexPair> Relation::pairs() const {
  std::vector<IndexPair> out;
  for (Index x = 0; x < n_; ++x) {
    for_each_bit(rows_[x], [&](Index y) { out.emplace_back(x, y); });
  }
  return out;
}

}  // namespace qsord
