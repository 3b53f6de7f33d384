#include "qsord/acyclicity.hpp"

#include <algorithm>

#include "qsord/error.hpp"

namespace qsord {

namespace {

Mask reachable(const Relation& graph, Index from, Mask within) {
  Mask seen = bit(from);
  Mask frontier = seen;
  while (frontier != 0) {
    Mask next = 0;
    for_each_bit(frontier, [&](Index v) { next |= graph.row(v); });
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::string describe(const Domain& d, Mask m) {
  std::string out = "{";
  bool first = true;
  for (const auto& l : d.labels_of(m)) {
    out += first ? "" : ", ";
    out += l;
    first = false;
  }
  return out + "}";
}

// Tarjan's algorithm over bit rows.
class Tarjan {
 public:
  Tarjan(const Relation& graph, Mask within)
      : graph_(graph), within_(within), index_(graph.size(), -1), low_(graph.size(), 0) {}

  std::vector<Mask> run() {
    for_each_bit(within_, [&](Index v) {
      if (index_[v] < 0) visit(v);
    });
    // Tarjan emits sinks first.
    std::reverse(components_.begin(), components_.end());
    return components_;
  }

 private:
  void visit(Index v) {
    index_[v] = low_[v] = counter_++;
    stack_.push_back(v);
    on_stack_ |= bit(v);
    for_each_bit(graph_.row(v) & within_, [&](Index w) {
      if (index_[w] < 0) {
        visit(w);
        low_[v] = std::min(low_[v], low_[w]);
      } else if (contains(on_stack_, w)) {
        low_[v] = std::min(low_[v], index_[w]);
      }
    });
    if (low_[v] == index_[v]) {
      Mask comp = 0;
      Index w;
      do {
        w = stack_.back();
        stack_.pop_back();
        on_stack_ &= ~bit(w);
        comp |= bit(w);
      } while (w != v);
      components_.push_back(comp);
    }
  }

  const Relation& graph_;
  Mask within_;
  std::vector<int> index_;
  std::vector<int> low_;
  int counter_ = 0;
  std::vector<Index> stack_;
  Mask on_stack_ = 0;
  std::vector<Mask> components_;
};

void check_subset_bound(const Structure& s, std::size_t bound) {
  if (s.size() > bound) {
    throw BoundExceeded("subset scan over " + std::to_string(s.size()) +
                        " elements exceeds the bound of " + std::to_string(bound));
  }
}

Mask predominants_unchecked(const Relation& prec, Mask subset) {
  Mask out = 0;
  for_each_bit(subset, [&](Index x) {
    if (((prec.row(x) | prec.column(x)) & subset) == 0) out |= bit(x);
  });
  return out;
}

std::optional<Index> self_loop(const Structure& s) {
  for (Index x = 0; x < s.size(); ++x) {
    if (s.prec().test(x, x) || s.weak().test(x, x)) return x;
  }
  return std::nullopt;
}

}  // namespace

Mask predominants(const Structure& s, Mask subset) {
  if (subset == 0) throw InvalidInput("pre-dominants of an empty set");
  if ((subset & ~s.domain().all()) != 0) throw InvalidInput("subset has unknown elements");
  return predominants_unchecked(s.prec(), subset);
}

bool is_strongly_connected(const Structure& s, Mask subset) {
  if (subset == 0) return false;
  const Relation g = s.combined();
  const Index root = lowest(subset);
  return reachable(g, root, subset) == subset && reachable(g.transposed(), root, subset) == subset;
}

std::vector<Mask> strongly_connected_components(const Relation& graph, Mask within) {
  return Tarjan(graph, within & full_mask(graph.size())).run();
}

std::vector<Mask> csc_subsets_naive(const Structure& s, std::size_t bound) {
  check_subset_bound(s, bound);
  std::vector<Mask> out;
  const Mask all = s.domain().all();
  for (Mask m = 1; m != 0 && m <= all; ++m) {
    if (is_strongly_connected(s, m)) out.push_back(m);
  }
  return out;
}

QsaCheck is_qsa_naive(const Structure& s, std::size_t bound) {
  check_subset_bound(s, bound);
  if (auto x = self_loop(s)) {
    return {false, CscWitness{bit(*x), "self-loop on " + s.domain().label(*x)}};
  }
  std::optional<Mask> best;
  auto key = [](Mask m) { return std::make_pair(popcount(m), indices_of(m)); };
  for (Mask m : csc_subsets_naive(s, bound)) {
    if (predominants_unchecked(s.prec(), m) != 0) continue;
    if (!best || key(m) < key(*best)) best = m;
  }
  if (!best) return {};
  return {false, CscWitness{*best, "strongly connected over prec and weak with no pre-dominant: " +
                                       describe(s.domain(), *best)}};
}

std::optional<Mask> find_csc_without_predominant(const Structure& s) {
  const Relation g = s.combined();
  std::vector<Mask> work{s.domain().all()};
  while (!work.empty()) {
    const Mask region = work.back();
    work.pop_back();
    for (Mask comp : strongly_connected_components(g, region)) {
      if (popcount(comp) == 1) {
        const Index x = lowest(comp);
        if (s.prec().test(x, x)) return comp;
        continue;
      }
      const Mask pre = predominants_unchecked(s.prec(), comp);
      if (pre == 0) return comp;
      // A strongly connected subset meeting `pre` has a pre-dominant; the
      // others lie inside comp \ pre.
      if (comp & ~pre) work.push_back(comp & ~pre);
    }
  }
  return std::nullopt;
}

QsaCheck is_qsa(const Structure& s) {
  if (auto x = self_loop(s)) {
    return {false, CscWitness{bit(*x), "self-loop on " + s.domain().label(*x)}};
  }
  if (auto comp = find_csc_without_predominant(s)) {
    return {false, CscWitness{*comp, "strongly connected over prec and weak with no pre-dominant: " +
                                         describe(s.domain(), *comp)}};
  }
  return {};
}

LegalExtensions legal_extensions(const Structure& s, Index x, Index y) {
  if (x >= s.size() || y >= s.size()) throw InvalidInput("element index out of range");
  if (x == y) throw InvalidInput("legal extensions need two distinct elements");
  if (!is_qsa(s)) throw InvalidInput("legal extensions need a QS-acyclic structure");
  return {is_qsa(add_prec(s, x, y)).ok, is_qsa(add_weak(s, x, y)).ok};
}

}  // namespace qsord
