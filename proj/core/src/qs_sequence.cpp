#include "qsord/qs_sequence.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "qsord/error.hpp"

namespace qsord {

Mask QssStratum::domain() const {
  Mask m = base;
  for (const auto& c : children) m |= c.domain();
  return m;
}

Mask domain_of(const QsSeq& q) {
  Mask m = 0;
  for (const auto& s : q.strata()) m |= s.domain();
  return m;
}

namespace {

std::optional<std::string> check_stratum(const QssStratum& s, Mask universe, Mask& seen) {
  if (s.base == 0) return "empty base set";
  if ((s.base & ~universe) != 0) return "base refers to elements outside the domain";
  if ((s.base & seen) != 0) return "base sets are not mutually disjoint";
  seen |= s.base;
  if (s.children.size() == 1) return "a node needs at least two child strata";
  for (const auto& c : s.children) {
    if (auto err = check_stratum(c, universe, seen)) return err;
  }
  return std::nullopt;
}

void add_sequence(Relation& r, const std::vector<QssStratum>& strata);

void add_stratum(Relation& r, const QssStratum& s) {
  if (!s.is_leaf()) add_sequence(r, s.children);
}

void add_sequence(Relation& r, const std::vector<QssStratum>& strata) {
  Mask later = 0;
  for (const auto& s : strata) later |= s.domain();
  for (const auto& s : strata) {
    const Mask d = s.domain();
    later &= ~d;
    for_each_bit(d, [&](Index x) { r.set_row(x, r.row(x) | later); });
    add_stratum(r, s);
  }
}

std::vector<QssStratum> invert_sequence(const Relation& r, Mask within);

QssStratum invert_stratum(const Relation& r, Mask within) {
  Mask base = 0;
  for_each_bit(within, [&](Index x) {
    if (((r.row(x) | r.column(x)) & within) == 0) base |= bit(x);
  });
  if (base == 0) throw std::logic_error("stratum without base elements");
  const Mask rest = within & ~base;
  if (rest == 0) return QssStratum::leaf(base);
  auto children = invert_sequence(r, rest);
  if (children.size() < 2) throw std::logic_error("stratum body with a single stratum");
  return QssStratum::node(base, std::move(children));
}

std::vector<QssStratum> invert_sequence(const Relation& r, Mask within) {
  std::vector<QssStratum> out;
  for (Mask cut : detail::strata_cuts(r, within)) out.push_back(invert_stratum(r, cut));
  return out;
}

class SeqEnumerator {
 public:
  const std::vector<QssStratum>& strata(Mask m) {
    if (auto it = strata_.find(m); it != strata_.end()) return it->second;
    std::vector<QssStratum> out{QssStratum::leaf(m)};
    for (Mask base = (m - 1) & m; base != 0; base = (base - 1) & m) {
      for (const auto& body : seqs(m & ~base, true)) out.push_back(QssStratum::node(base, body));
    }
    return strata_.emplace(m, std::move(out)).first->second;
  }

  const std::vector<std::vector<QssStratum>>& seqs(Mask m, bool at_least_two) {
    auto& memo = seqs_[at_least_two ? 1 : 0];
    if (auto it = memo.find(m); it != memo.end()) return it->second;
    std::vector<std::vector<QssStratum>> out;
    if (!at_least_two) {
      for (const auto& s : strata(m)) out.push_back({s});
    }
    for (Mask first = (m - 1) & m; first != 0; first = (first - 1) & m) {
      const auto& heads = strata(first);
      const auto& tails = seqs(m & ~first, false);
      for (const auto& h : heads) {
        for (const auto& t : tails) {
          std::vector<QssStratum> seq;
          seq.reserve(t.size() + 1);
          seq.push_back(h);
          seq.insert(seq.end(), t.begin(), t.end());
          out.push_back(std::move(seq));
        }
      }
    }
    return memo.emplace(m, std::move(out)).first->second;
  }

 private:
  std::unordered_map<Mask, std::vector<QssStratum>> strata_;
  std::unordered_map<Mask, std::vector<std::vector<QssStratum>>> seqs_[2];
};

class SeqSampler {
 public:
  explicit SeqSampler(std::uint64_t seed) : gen_(seed) {}

  std::vector<QssStratum> sequence(Mask m, bool at_least_two) {
    const std::size_t n = static_cast<std::size_t>(popcount(m));
    if (!at_least_two && (n == 1 || below(3) == 0)) return {stratum(m)};
    auto elems = shuffled(m);
    const std::size_t blocks = 2 + below(n - 1);
    std::vector<std::size_t> gaps;
    for (std::size_t g = 1; g < n; ++g) gaps.push_back(g);
    shuffle(gaps);
    gaps.resize(blocks - 1);
    std::sort(gaps.begin(), gaps.end());
    gaps.push_back(n);
    std::vector<QssStratum> out;
    std::size_t from = 0;
    for (std::size_t to : gaps) {
      Mask block = 0;
      for (std::size_t i = from; i < to; ++i) block |= bit(elems[i]);
      out.push_back(stratum(block));
      from = to;
    }
    return out;
  }

  QssStratum stratum(Mask m) {
    const std::size_t n = static_cast<std::size_t>(popcount(m));
    if (n < 3 || below(2) == 0) return QssStratum::leaf(m);
    auto elems = shuffled(m);
    const std::size_t base_size = 1 + below(n - 2);
    Mask base = 0;
    for (std::size_t i = 0; i < base_size; ++i) base |= bit(elems[i]);
    return QssStratum::node(base, sequence(m & ~base, true));
  }

 private:
  std::size_t below(std::size_t k) { return static_cast<std::size_t>(gen_() % k); }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

  std::vector<Index> shuffled(Mask m) {
    auto v = indices_of(m);
    shuffle(v);
    return v;
  }

  std::mt19937_64 gen_;
};

void check_bound(std::size_t n, std::size_t bound) {
  if (n > bound) {
    throw BoundExceeded("enumeration over " + std::to_string(n) + " elements exceeds the bound of " +
                        std::to_string(bound));
  }
}

}  // namespace

std::optional<std::string> validate(const QsSeq& q) {
  if (q.strata().empty()) return "empty sequence";
  Mask seen = 0;
  for (const auto& s : q.strata()) {
    if (auto err = check_stratum(s, q.domain().all(), seen)) return err;
  }
  if (seen != q.domain().all()) return "bases do not cover the domain";
  return std::nullopt;
}

QsOrder g_map(const QsSeq& q) {
  if (auto err = validate(q)) throw InvalidInput("invalid QS-sequence: " + *err);
  return QsOrder(q.domain(), detail::g_relation(q.domain().size(), q.strata()), detail::Trusted{});
}

QsSeq i_map(const QsOrder& q) {
  if (q.empty()) throw InvalidInput("the empty order has no QS-sequence");
  return QsSeq(q.domain(), invert_sequence(q.prec(), q.domain().all()));
}

std::vector<QsSeq> enumerate_qs_seqs(const std::vector<std::string>& labels, std::size_t bound) {
  check_bound(labels.size(), bound);
  Domain d(labels);
  std::vector<QsSeq> out;
  if (d.empty()) return out;
  for (auto& strata : detail::qs_seqs_over(d.all())) out.emplace_back(d, std::move(strata));
  return out;
}

QsSeq random_qs_seq(const std::vector<std::string>& labels, std::uint64_t seed) {
  Domain d(labels);
  if (d.empty()) throw InvalidInput("random QS-sequence needs at least one label");
  SeqSampler sampler(seed);
  return QsSeq(d, sampler.sequence(d.all(), false));
}

namespace detail {

std::vector<std::vector<QssStratum>> qs_seqs_over(Mask universe) {
  if (universe == 0) return {};
  SeqEnumerator e;
  return e.seqs(universe, false);
}

Relation g_relation(std::size_t n, const std::vector<QssStratum>& strata) {
  Relation r(n);
  add_sequence(r, strata);
  return r;
}

const std::vector<Relation>& qs_order_relations(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, std::vector<Relation>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<Relation> out;
  if (n == 0) {
    out.emplace_back(0);
  } else {
    for (const auto& strata : qs_seqs_over(full_mask(n))) out.push_back(g_relation(n, strata));
  }
  return cache.emplace(n, std::move(out)).first->second;
}

}  // namespace detail

}  // namespace qsord
