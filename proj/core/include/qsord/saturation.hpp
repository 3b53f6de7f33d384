#pragma once

#include <optional>
#include <vector>

#include "qsord/qs_order.hpp"
#include "qsord/structure.hpp"

namespace qsord {

struct QsmCheck {
  bool ok = true;
  int axiom = 0;              ///< 1..4, the first failing maximality axiom
  std::vector<Index> tuple;   ///< the elements it fails on
  explicit operator bool() const { return ok; }
};

/// Literal evaluation of the four maximality axioms:
///  1. x ⋢ x
///  2. x≺y ⟺ x⊏y ∧ y⋢x
///  3. x≠y ⟺ x≺y ∨ y≺x ∨ x⊏y⊏x
///  4. the quasi-stratified quadruple implication on ≺
QsmCheck check_qsm(const Structure& s);
inline bool is_qsm(const Structure& s) { return check_qsm(s).ok; }

Structure qso_to_qsm(const QsOrder& q);
/// Throws InvalidInput when `s` is not maximal.
QsOrder qsm_to_qso(const Structure& s);

/// One maximal extension of a QS-acyclic structure. Pre-dominant choices take
/// the lowest index and splits take the first source component, so the
/// result is deterministic. Throws InvalidInput when `s` is not QS-acyclic.
Structure one_saturation(const Structure& s);

struct SaturationSet {
  std::vector<Structure> members;
  bool truncated = false;
};

/// All maximal extensions of `s`, ordered by their sorted ≺ pair lists.
/// With a limit, stops after that many and flags truncation if more exist.
/// Throws InvalidInput when `s` is not QS-acyclic and BoundExceeded above
/// `bound` elements.
SaturationSet saturations(const Structure& s, std::optional<std::size_t> limit = std::nullopt,
                          std::size_t bound = kDefaultEnumerationBound);

}  // namespace qsord
