#include "qsord/orders.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "qsord/error.hpp"

namespace qsord {

bool is_partial_order(const Relation& r) { return r.is_irreflexive() && r.is_transitive(); }

bool is_total_order(const Relation& r) {
  if (!is_partial_order(r)) return false;
  const std::size_t n = r.size();
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (x != y && !r.related(x, y)) return false;
    }
  }
  return true;
}

bool is_stratified_order(const Relation& r) {
  if (!is_partial_order(r)) return false;
  const std::size_t n = r.size();
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (r.related(x, y)) continue;
      for (Index z = 0; z < n; ++z) {
        if (r.test(x, z) && !r.test(y, z)) return false;
        if (r.test(z, x) && !r.test(z, y)) return false;
      }
    }
  }
  return true;
}

bool is_interval_order(const Relation& r) {
  if (!r.is_irreflexive()) return false;
  const std::size_t n = r.size();
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (!r.test(x, y)) continue;
      for (Index z = 0; z < n; ++z) {
        // z≺w with neither x≺w nor z≺y
        if (!r.test(z, y) && (r.row(z) & ~r.row(x)) != 0) return false;
      }
    }
  }
  return true;
}

std::optional<std::vector<Mask>> stratified_partition(const Relation& r) {
  if (!is_stratified_order(r)) return std::nullopt;
  const std::size_t n = r.size();
  std::vector<Mask> strata;
  Mask assigned = 0;
  for (Index x = 0; x < n; ++x) {
    if (contains(assigned, x)) continue;
    // The incomparability class of x.
    Mask cls = full_mask(n) & ~r.row(x) & ~r.column(x);
    strata.push_back(cls);
    assigned |= cls;
  }
  // Later strata have strictly more predecessors.
  std::sort(strata.begin(), strata.end(), [&](Mask a, Mask b) {
    return popcount(r.column(lowest(a))) < popcount(r.column(lowest(b)));
  });
  return strata;
}

std::optional<std::vector<Interval>> interval_realization(const Relation& r) {
  if (!is_interval_order(r)) return std::nullopt;
  const std::size_t n = r.size();
  std::vector<Mask> preds;
  for (Index x = 0; x < n; ++x) preds.push_back(r.column(x));
  std::vector<Mask> chain = preds;
  std::sort(chain.begin(), chain.end(), [](Mask a, Mask b) {
    return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
  });
  chain.erase(std::unique(chain.begin(), chain.end()), chain.end());

  std::vector<Interval> out(n);
  const int top = static_cast<int>(chain.size()) - 1;
  for (Index x = 0; x < n; ++x) {
    out[x].begin = static_cast<int>(std::find(chain.begin(), chain.end(), preds[x]) - chain.begin());
    out[x].end = top;
    for (int j = 0; j <= top; ++j) {
      if (contains(chain[static_cast<std::size_t>(j)], x)) {
        out[x].end = j - 1;
        break;
      }
    }
  }
  for (Index x = 0; x < n; ++x) {
    if (out[x].begin > out[x].end) return std::nullopt;
    for (Index y = 0; y < n; ++y) {
      if (r.test(x, y) != (out[x].end < out[y].begin)) return std::nullopt;
    }
  }
  return out;
}

namespace {

// Breadth-first search over (vertex, flag) states. The flag's meaning depends
// on the model: unused for total, "a ≺ step was taken" for stratified, "the
// last step was ≺" for interval.
class CycleSearch {
 public:
  CycleSearch(const Structure& s, CycleModel model)
      : s_(s), model_(model), n_(s.size()), graph_(s.combined()) {}

  std::optional<std::vector<Index>> run() {
    std::optional<std::vector<Index>> best;
    for (Index start = 0; start < n_; ++start) {
      const int first_kinds = model_ == CycleModel::interval ? 2 : 1;
      for (int k = 0; k < first_kinds; ++k) {
        auto found = search(start, k == 0);
        if (found && (!best || found->size() < best->size())) best = std::move(found);
      }
    }
    return best;
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  std::size_t state(Index v, bool flag) const { return v * 2 + (flag ? 1 : 0); }

  bool allowed(bool flag, bool prec_step) const {
    return model_ != CycleModel::interval || flag || prec_step;
  }

  bool next_flag(bool flag, bool prec_step) const {
    switch (model_) {
      case CycleModel::total: return false;
      case CycleModel::stratified: return flag || prec_step;
      case CycleModel::interval: return prec_step;
    }
    return false;
  }

  bool closes(bool flag, bool first_prec) const {
    switch (model_) {
      case CycleModel::total: return true;
      case CycleModel::stratified: return flag;
      case CycleModel::interval: return flag || first_prec;
    }
    return false;
  }

  // For the interval model `first_prec` fixes the kind of the first step; the
  // other models ignore it and accept any first step.
  std::optional<std::vector<Index>> search(Index start, bool first_prec) {
    std::vector<std::size_t> parent(2 * n_, kNone);
    std::vector<bool> seen(2 * n_, false);
    std::deque<std::size_t> queue;
    const std::size_t root = 2 * n_;  // sentinel parent for first steps

    auto visit = [&](std::size_t st, std::size_t from) -> bool {
      if (seen[st]) return false;
      seen[st] = true;
      parent[st] = from;
      queue.push_back(st);
      return st / 2 == start && closes(st % 2 == 1, first_prec);
    };

    std::optional<std::size_t> goal;
    for_each_bit(graph_.row(start), [&](Index w) {
      if (goal) return;
      const bool p = s_.prec().test(start, w);
      if (model_ == CycleModel::interval && p != first_prec) return;
      if (visit(state(w, next_flag(false, p)), root)) goal = state(w, next_flag(false, p));
    });
    while (!goal && !queue.empty()) {
      const std::size_t cur = queue.front();
      queue.pop_front();
      const Index u = cur / 2;
      const bool flag = cur % 2 == 1;
      for_each_bit(graph_.row(u), [&](Index w) {
        if (goal) return;
        const bool p = s_.prec().test(u, w);
        if (!allowed(flag, p)) return;
        const std::size_t st = state(w, next_flag(flag, p));
        if (visit(st, cur)) goal = st;
      });
    }
    if (!goal) return std::nullopt;

    std::vector<Index> walk;
    for (std::size_t st = *goal; st != root; st = parent[st]) walk.push_back(st / 2);
    walk.push_back(start);
    std::reverse(walk.begin(), walk.end());
    return walk;
  }

  const Structure& s_;
  CycleModel model_;
  std::size_t n_;
  Relation graph_;
};

}  // namespace

std::optional<std::vector<Index>> forbidden_cycle(const Structure& s, CycleModel model) {
  if (!is_relational(s)) throw InvalidInput("forbidden cycle search needs a relational structure");
  return CycleSearch(s, model).run();
}

}  // namespace qsord
