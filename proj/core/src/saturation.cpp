#include "qsord/saturation.hpp"

#include <algorithm>
#include <stdexcept>

#include "qsord/acyclicity.hpp"
#include "qsord/error.hpp"
#include "qsord/qs_sequence.hpp"

namespace qsord {

QsmCheck check_qsm(const Structure& s) {
  const auto& p = s.prec();
  const auto& w = s.weak();
  const std::size_t n = s.size();
  for (Index x = 0; x < n; ++x) {
    if (w.test(x, x)) return {false, 1, {x}};
  }
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (p.test(x, y) != (w.test(x, y) && !w.test(y, x))) return {false, 2, {x, y}};
    }
  }
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      const bool rhs = p.test(x, y) || p.test(y, x) || (w.test(x, y) && w.test(y, x));
      if ((x != y) != rhs) return {false, 3, {x, y}};
    }
  }
  if (auto q = check_qs_order(p); !q) {
    if (q.violation) {
      const auto& v = *q.violation;
      return {false, 4, {v[0], v[1], v[2], v[3]}};
    }
    // A ≺ self-loop would already have failed axiom 2 or 3.
    return {false, 4, {*q.self_loop}};
  }
  return {};
}

Structure qso_to_qsm(const QsOrder& q) {
  return Structure(q.domain(), q.prec(), weak_of_order(q.prec()));
}

QsOrder qsm_to_qso(const Structure& s) {
  if (!is_qsm(s)) throw InvalidInput("structure is not maximal");
  return QsOrder(s.domain(), s.prec());
}

namespace {

// Fills `prec`/`weak` with a maximal extension of s restricted to `region`.
void saturate_region(const Structure& s, const Relation& graph, Mask region, Relation& prec,
                     Relation& weak) {
  if (popcount(region) <= 1) return;
  auto comps = strongly_connected_components(graph, region);
  if (comps.size() == 1) {
    const Mask pre = predominants(s, region);
    if (pre == 0) throw std::logic_error("strongly connected region without pre-dominant");
    const Index x = lowest(pre);
    const Mask rest = region & ~bit(x);
    saturate_region(s, graph, rest, prec, weak);
    weak.set_row(x, weak.row(x) | rest);
    for_each_bit(rest, [&](Index y) { weak.set(y, x); });
    return;
  }
  // The first component has no incoming edges from the rest of the region.
  const Mask first = comps.front();
  const Mask rest = region & ~first;
  saturate_region(s, graph, first, prec, weak);
  saturate_region(s, graph, rest, prec, weak);
  for_each_bit(first, [&](Index x) {
    prec.set_row(x, prec.row(x) | rest);
    weak.set_row(x, weak.row(x) | rest);
  });
}

}  // namespace

Structure one_saturation(const Structure& s) {
  if (!is_qsa(s)) throw InvalidInput("structure is not QS-acyclic");
  Relation prec(s.size());
  Relation weak(s.size());
  saturate_region(s, s.combined(), s.domain().all(), prec, weak);
  Structure out(s.domain(), std::move(prec), std::move(weak));
  if (!extends(s, out) || !is_qsm(out)) throw std::logic_error("saturation construction failed");
  return out;
}

SaturationSet saturations(const Structure& s, std::optional<std::size_t> limit, std::size_t bound) {
  if (s.size() > bound) {
    throw BoundExceeded("saturation enumeration over " + std::to_string(s.size()) +
                        " elements exceeds the bound of " + std::to_string(bound));
  }
  if (!is_qsa(s)) throw InvalidInput("structure is not QS-acyclic");

  std::vector<std::pair<std::vector<IndexPair>, Relation>> found;
  for (const Relation& order : detail::qs_order_relations(s.size())) {
    if (!s.prec().subset_of(order)) continue;
    if (!s.weak().subset_of(weak_of_order(order))) continue;
    found.emplace_back(order.pairs(), order);
  }
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  SaturationSet out;
  if (limit && found.size() > *limit) {
    found.resize(*limit);
    out.truncated = true;
  }
  for (auto& [key, order] : found) {
    Relation weak = weak_of_order(order);
    out.members.emplace_back(s.domain(), std::move(order), std::move(weak));
  }
  return out;
}

}  // namespace qsord
