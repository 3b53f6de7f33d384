#pragma once

#include <string>
#include <vector>

#include "qsord/qs_order.hpp"
#include "qsord/structure.hpp"

namespace qsord {

struct QscViolation {
  /// 1: x⋢x⊀x   2: x≺y ⟹ y⋢x
  /// 3: adding x≺y destroys acyclicity ⟹ y⊏x
  /// 4: adding x⊏y destroys acyclicity ⟹ y≺x
  int axiom = 0;
  Index x = 0;
  Index y = 0;
  friend bool operator==(const QscViolation&, const QscViolation&) = default;
};

/// Every violated closedness axiom, grouped by axiom then (x, y) order.
std::vector<QscViolation> qsc_violations(const Structure& s);
bool is_qsc(const Structure& s);

/// One simultaneous closure step. Every probe looks at the input:
///   y≺x is added when x≠y, y⊀x and adding x⊏y would break acyclicity;
///   y⊏x is added when x≠y, y⋢x and adding x≺y would break acyclicity.
/// Throws InvalidInput when `s` is not QS-acyclic.
Structure f_step(const Structure& s);

struct ClosureReport {
  Structure closed;
  std::vector<IndexPair> added_prec;
  std::vector<IndexPair> added_weak;
  /// Applications of f_step, counting the final one that changed nothing.
  std::size_t iterations = 0;
};

/// Iterates f_step to its fixpoint. More than 2·n² productive steps is an
/// internal error. Throws InvalidInput when `s` is not QS-acyclic.
ClosureReport close(const Structure& s);

/// Componentwise intersection of all saturations.
Structure close_oracle(const Structure& s, std::size_t bound = kDefaultEnumerationBound);

struct PropertyResult {
  enum class Status { holds, violated, not_evaluated };
  std::string name;
  Status status = Status::holds;
  std::vector<Index> tuple;  ///< first violating tuple
};

struct PropertyReport {
  std::vector<PropertyResult> results;
  bool all_hold() const;
  const PropertyResult* first_violation() const;
};

/// Evaluates the derived laws of closed structures over all element tuples
/// without checking that `s` is closed. Checks that need subset scans or
/// saturation enumeration are marked not_evaluated above their bounds.
PropertyReport evaluate_closed_properties(const Structure& s,
                                          std::size_t enumeration_bound = kDefaultEnumerationBound);

/// Same, but throws InvalidInput unless `s` is closed.
PropertyReport qsc_property_suite(const Structure& s,
                                  std::size_t enumeration_bound = kDefaultEnumerationBound);

}  // namespace qsord
