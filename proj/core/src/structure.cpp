#include "qsord/structure.hpp"

#include "qsord/error.hpp"

namespace qsord {

Structure::Structure(Domain domain, Relation prec, Relation weak)
    : domain_(std::move(domain)), prec_(std::move(prec)), weak_(std::move(weak)) {
  if (prec_.size() != domain_.size() || weak_.size() != domain_.size()) {
    throw InvalidInput("relation size does not match the domain");
  }
}

namespace {

Relation relation_from_pairs(const Domain& d, const std::vector<LabelPair>& pairs) {
  Relation r(d.size());
  for (const auto& [x, y] : pairs) r.set(d.index_of(x), d.index_of(y));
  return r;
}

// Position in `to` of every element of `from`; requires from ⊆ to.
std::vector<Index> label_map(const Domain& from, const Domain& to) {
  std::vector<Index> target(from.size());
  for (Index i = 0; i < from.size(); ++i) target[i] = to.index_of(from.label(i));
  return target;
}

void require_index(const Structure& s, Index i) {
  if (i >= s.size()) throw InvalidInput("element index " + std::to_string(i) + " out of range");
}

}  // namespace

Structure make_structure(std::vector<std::string> labels, const std::vector<LabelPair>& prec,
                         const std::vector<LabelPair>& weak) {
  Domain d(std::move(labels));
  Relation p = relation_from_pairs(d, prec);
  Relation w = relation_from_pairs(d, weak);
  return Structure(std::move(d), std::move(p), std::move(w));
}

bool is_relational(const Structure& s) {
  return s.prec().is_irreflexive() && s.weak().is_irreflexive();
}

bool extends(const Structure& base, const Structure& ext) {
  if (base.size() != ext.size()) return false;
  if (base.domain() == ext.domain()) {
    return base.prec().subset_of(ext.prec()) && base.weak().subset_of(ext.weak());
  }
  for (const auto& l : base.domain().labels()) {
    if (!ext.domain().contains(l)) return false;
  }
  auto target = label_map(base.domain(), ext.domain());
  return base.prec().embedded(ext.size(), target).subset_of(ext.prec()) &&
         base.weak().embedded(ext.size(), target).subset_of(ext.weak());
}

Structure project(const Structure& s, Mask subset) {
  if ((subset & ~s.domain().all()) != 0) throw InvalidInput("projection onto unknown elements");
  return Structure(s.domain().restricted(subset), s.prec().restricted(subset),
                   s.weak().restricted(subset));
}

Structure project(const Structure& s, const std::vector<std::string>& labels) {
  return project(s, s.domain().mask_of(labels));
}

Structure intersect(const Structure& s, const Structure& t) {
  Mask common = 0;
  for (Index i = 0; i < s.size(); ++i) {
    if (t.domain().contains(s.domain().label(i))) common |= bit(i);
  }
  Structure left = project(s, common);
  auto target = label_map(left.domain(), t.domain());
  // Pull t's relations back onto left's numbering.
  Relation tp(left.size());
  Relation tw(left.size());
  for (Index x = 0; x < left.size(); ++x) {
    for (Index y = 0; y < left.size(); ++y) {
      if (t.prec().test(target[x], target[y])) tp.set(x, y);
      if (t.weak().test(target[x], target[y])) tw.set(x, y);
    }
  }
  return Structure(left.domain(), left.prec() & tp, left.weak() & tw);
}

Structure add_element(const Structure& s, std::string label) {
  if (s.domain().contains(label)) throw InvalidInput("element '" + label + "' already present");
  Domain d = s.domain().with(std::move(label));
  std::vector<Index> same(s.size());
  for (Index i = 0; i < s.size(); ++i) same[i] = i;
  return Structure(std::move(d), s.prec().embedded(s.size() + 1, same),
                   s.weak().embedded(s.size() + 1, same));
}

Structure add_prec(const Structure& s, Index x, Index y) {
  require_index(s, x);
  require_index(s, y);
  Relation p = s.prec();
  p.set(x, y);
  return Structure(s.domain(), std::move(p), s.weak());
}

Structure add_weak(const Structure& s, Index x, Index y) {
  require_index(s, x);
  require_index(s, y);
  Relation w = s.weak();
  w.set(x, y);
  return Structure(s.domain(), s.prec(), std::move(w));
}

Structure add_prec(const Structure& s, std::string_view x, std::string_view y) {
  return add_prec(s, s.domain().index_of(x), s.domain().index_of(y));
}

Structure add_weak(const Structure& s, std::string_view x, std::string_view y) {
  return add_weak(s, s.domain().index_of(x), s.domain().index_of(y));
}

Poset::Poset(Domain domain, Relation prec) : domain_(std::move(domain)), prec_(std::move(prec)) {
  if (prec_.size() != domain_.size()) throw InvalidInput("relation size does not match the domain");
  if (!prec_.is_irreflexive()) throw InvalidInput("order is not irreflexive");
  if (!prec_.is_transitive()) throw InvalidInput("order is not transitive");
}

Poset Poset::make(std::vector<std::string> labels, const std::vector<LabelPair>& prec) {
  Domain d(std::move(labels));
  Relation r = relation_from_pairs(d, prec);
  return Poset(std::move(d), std::move(r));
}

Relation weak_of_order(const Relation& prec) {
  const std::size_t n = prec.size();
  Relation w(n);
  for (Index x = 0; x < n; ++x) {
    // y ⊀ x and y ≠ x
    w.set_row(x, full_mask(n) & ~prec.column(x) & ~bit(x));
  }
  return w;
}

Structure rho(const Poset& p) {
  return Structure(p.domain(), p.prec(), weak_of_order(p.prec()));
}

std::vector<LabelPair> label_pairs(const Domain& d, const Relation& r) {
  std::vector<LabelPair> out;
  for (auto [x, y] : r.pairs()) out.emplace_back(d.label(x), d.label(y));
  return out;
}

}  // namespace qsord
