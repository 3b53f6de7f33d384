#include "qsord/qs_order.hpp"

#include <stdexcept>

#include "qsord/error.hpp"
#include "qsord/qs_sequence.hpp"

namespace qsord {

QsoCheck check_qs_order(const Relation& r) {
  QsoCheck out;
  const std::size_t n = r.size();
  for (Index x = 0; x < n; ++x) {
    if (r.test(x, x)) {
      out.ok = false;
      out.self_loop = x;
      return out;
    }
  }
  auto p = [&](Index a, Index b) { return r.test(a, b); };
  for (Index x = 0; x < n; ++x) {
    for (Index y : indices_of(r.row(x))) {
      for (Index z = 0; z < n; ++z) {
        for (Index t : indices_of(r.row(z))) {
          const bool holds = (p(x, t) && p(z, y)) || (p(x, z) && p(x, t)) ||
                             (p(z, x) && p(z, y)) || (p(t, y) && p(z, y)) ||
                             (p(y, t) && p(x, t));
          if (!holds) {
            out.ok = false;
            out.violation = std::array<Index, 4>{x, y, z, t};
            return out;
          }
        }
      }
    }
  }
  return out;
}

QsOrder::QsOrder(Domain domain, Relation prec) : domain_(std::move(domain)), prec_(std::move(prec)) {
  if (prec_.size() != domain_.size()) throw InvalidInput("relation size does not match the domain");
  if (auto c = check_qs_order(prec_); !c) {
    throw InvalidInput(c.self_loop ? "order is not irreflexive"
                                   : "order violates the quasi-stratified quadruple axiom");
  }
}

QsOrder::QsOrder(Domain domain, Relation prec, detail::Trusted)
    : domain_(std::move(domain)), prec_(std::move(prec)) {}

QsOrder QsOrder::make(std::vector<std::string> labels, const std::vector<LabelPair>& prec) {
  Domain d(std::move(labels));
  Relation r(d.size());
  for (const auto& [x, y] : prec) r.set(d.index_of(x), d.index_of(y));
  return QsOrder(std::move(d), std::move(r));
}

QsOrder add_isolated(const QsOrder& q, std::string label) {
  if (q.domain().contains(label)) throw InvalidInput("element '" + label + "' already present");
  Domain d = q.domain().with(std::move(label));
  std::vector<Index> same(q.size());
  for (Index i = 0; i < q.size(); ++i) same[i] = i;
  return QsOrder(std::move(d), q.prec().embedded(q.size() + 1, same), detail::Trusted{});
}

QsOrder seq_compose(const QsOrder& q, const QsOrder& r) {
  std::vector<std::string> labels = q.domain().labels();
  for (const auto& l : r.domain().labels()) {
    if (q.domain().contains(l)) throw InvalidInput("composed orders share element '" + l + "'");
    labels.push_back(l);
  }
  const std::size_t n = labels.size();
  std::vector<Index> left(q.size());
  std::vector<Index> right(r.size());
  for (Index i = 0; i < q.size(); ++i) left[i] = i;
  for (Index i = 0; i < r.size(); ++i) right[i] = q.size() + i;
  Relation prec = q.prec().embedded(n, left) | r.prec().embedded(n, right);
  const Mask later = full_mask(n) & ~full_mask(q.size());
  for (Index x = 0; x < q.size(); ++x) prec.set_row(x, prec.row(x) | later);
  return QsOrder(Domain(std::move(labels)), std::move(prec), detail::Trusted{});
}

std::optional<Mask> stratum_base(const QsOrder& q) {
  Mask base = 0;
  for (Index x = 0; x < q.size(); ++x) {
    if (q.prec().row(x) == 0 && q.prec().column(x) == 0) base |= bit(x);
  }
  if (base == 0) return std::nullopt;
  return base;
}

namespace detail {

std::vector<Mask> strata_cuts(const Relation& r, Mask within) {
  // Fix one topological order (least index first). A prefix A is a cut iff
  // A × (within \ A) ⊆ r; every cut is such a prefix.
  std::vector<Index> topo;
  Mask placed = 0;
  while (placed != within) {
    Index pick = 0;
    bool found = false;
    for_each_bit(within & ~placed, [&](Index v) {
      if (!found && (r.column(v) & within & ~placed) == 0) {
        pick = v;
        found = true;
      }
    });
    if (!found) throw std::logic_error("order has a cycle");
    topo.push_back(pick);
    placed |= bit(pick);
  }

  std::vector<Mask> out;
  Mask prefix = 0;
  Mask current = 0;
  for (std::size_t i = 0; i < topo.size(); ++i) {
    prefix |= bit(topo[i]);
    current |= bit(topo[i]);
    const Mask rest = within & ~prefix;
    bool cut = true;
    for_each_bit(prefix, [&](Index a) {
      if ((r.row(a) & rest) != rest) cut = false;
    });
    if (cut) {
      out.push_back(current);
      current = 0;
    }
  }
  return out;
}

}  // namespace detail

std::vector<QsOrder> factorize_strata(const QsOrder& q) {
  if (q.empty()) throw InvalidInput("cannot factorize the empty order");
  std::vector<QsOrder> out;
  for (Mask m : detail::strata_cuts(q.prec(), q.domain().all())) {
    QsOrder factor(q.domain().restricted(m), q.prec().restricted(m), detail::Trusted{});
    if (!is_qso_stratum(factor)) {
      throw std::logic_error("factor is not a stratum; the input is not a valid QS-order");
    }
    out.push_back(std::move(factor));
  }
  return out;
}

QsOrder project(const QsOrder& q, Mask subset) {
  if ((subset & ~q.domain().all()) != 0) throw InvalidInput("projection onto unknown elements");
  return QsOrder(q.domain().restricted(subset), q.prec().restricted(subset));
}

QsOrder project(const QsOrder& q, const std::vector<std::string>& labels) {
  return project(q, q.domain().mask_of(labels));
}

std::vector<QsOrder> enumerate_qs_orders(const std::vector<std::string>& labels, std::size_t bound) {
  std::vector<QsOrder> out;
  if (labels.empty()) {
    out.emplace_back();
    return out;
  }
  for (const QsSeq& seq : enumerate_qs_seqs(labels, bound)) out.push_back(g_map(seq));
  return out;
}

}  // namespace qsord
