#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qsord/structure.hpp"

namespace qsord {

struct QsoCheck {
  bool ok = true;
  /// Element with x ≺ x, when irreflexivity fails.
  std::optional<Index> self_loop;
  /// (x, y, z, t) with x≺y and z≺t where none of the five disjuncts holds.
  std::optional<std::array<Index, 4>> violation;

  explicit operator bool() const { return ok; }
};

/// Checks irreflexivity and the quadruple axiom
///   x≺y ∧ z≺t ⟹ (x≺t ∧ z≺y) ∨ (x≺z ∧ x≺t) ∨ (z≺x ∧ z≺y) ∨ (t≺y ∧ z≺y) ∨ (y≺t ∧ x≺t).
/// The first violation in (x, y, z, t) scan order is reported.
QsoCheck check_qs_order(const Relation& r);
inline bool is_qs_order(const Relation& r) { return check_qs_order(r).ok; }

namespace detail {
struct Trusted {};
}  // namespace detail

/// A quasi-stratified order: built from the empty order by adding isolated
/// elements and sequential composition.
class QsOrder {
 public:
  /// The empty order.
  QsOrder() = default;
  /// Throws InvalidInput when `prec` fails the axioms.
  QsOrder(Domain domain, Relation prec);
  /// For values that are valid by construction.
  QsOrder(Domain domain, Relation prec, detail::Trusted);

  static QsOrder make(std::vector<std::string> labels, const std::vector<LabelPair>& prec);

  const Domain& domain() const { return domain_; }
  const Relation& prec() const { return prec_; }
  std::size_t size() const { return domain_.size(); }
  bool empty() const { return domain_.empty(); }
  Poset poset() const { return Poset(domain_, prec_); }

  friend bool operator==(const QsOrder&, const QsOrder&) = default;

 private:
  Domain domain_;
  Relation prec_;
};

inline QsOrder qso_empty() { return QsOrder(); }
/// q[x]: adds x unrelated to everything. Throws if x is already present.
QsOrder add_isolated(const QsOrder& q, std::string label);
/// q∘r: every element of q precedes every element of r. Domains must be disjoint.
QsOrder seq_compose(const QsOrder& q, const QsOrder& r);

/// Elements unrelated to every other element; nullopt when there are none
/// (or the order is empty), i.e. when q is not a stratum.
std::optional<Mask> stratum_base(const QsOrder& q);
inline bool is_qso_stratum(const QsOrder& q) { return stratum_base(q).has_value(); }

/// The unique finest sequence of strata whose composition is q.
/// Throws InvalidInput on the empty order.
std::vector<QsOrder> factorize_strata(const QsOrder& q);

QsOrder project(const QsOrder& q, Mask subset);
QsOrder project(const QsOrder& q, const std::vector<std::string>& labels);

inline constexpr std::size_t kDefaultEnumerationBound = 6;

/// Every QS-order over `labels`, each exactly once. Throws BoundExceeded
/// above `bound` labels.
std::vector<QsOrder> enumerate_qs_orders(const std::vector<std::string>& labels,
                                         std::size_t bound = kDefaultEnumerationBound);

namespace detail {
/// Stratum masks of the order `r` restricted to `within`, in sequence.
std::vector<Mask> strata_cuts(const Relation& r, Mask within);
}  // namespace detail

}  // namespace qsord
