#pragma once

#include <optional>
#include <vector>

#include "qsord/relation.hpp"
#include "qsord/structure.hpp"

namespace qsord {

// Axiomatic recognition of the classic execution models. Each predicate is a
// literal scan of its axiom set over all element tuples.
bool is_partial_order(const Relation& r);
bool is_total_order(const Relation& r);
bool is_stratified_order(const Relation& r);
bool is_interval_order(const Relation& r);

/// Strata Δ1..Δn with r = ⋃_{i<j} Δi×Δj, or nullopt when `r` is not a
/// stratified order.
std::optional<std::vector<Mask>> stratified_partition(const Relation& r);

struct Interval {
  int begin = 0;
  int end = 0;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Integer endpoints with begin ≤ end and x≺y ⟺ end(x) < begin(y), indexed
/// by element; nullopt when `r` is not an interval order.
///
/// Begins rank the distinct predecessor sets (a chain under inclusion for
/// interval orders). x ends just before the first of those sets that
/// contains it.
std::optional<std::vector<Interval>> interval_realization(const Relation& r);

enum class CycleModel { total, stratified, interval };

/// Shortest closed walk x1..xn (xn = x1) over ≺∪⊏ that the given execution
/// model forbids:
///  - total: any cycle;
///  - stratified: a cycle with at least one ≺ step;
///  - interval: a cycle in which every two cyclically adjacent steps include
///    a ≺ step. Cycles of length two are treated like any other.
/// Throws InvalidInput when `s` is not relational.
std::optional<std::vector<Index>> forbidden_cycle(const Structure& s, CycleModel model);

inline std::optional<std::vector<Index>> forbidden_cycle_total(const Structure& s) {
  return forbidden_cycle(s, CycleModel::total);
}
inline std::optional<std::vector<Index>> forbidden_cycle_stratified(const Structure& s) {
  return forbidden_cycle(s, CycleModel::stratified);
}
inline std::optional<std::vector<Index>> forbidden_cycle_interval(const Structure& s) {
  return forbidden_cycle(s, CycleModel::interval);
}

}  // namespace qsord
