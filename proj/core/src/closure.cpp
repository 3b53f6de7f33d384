#include "qsord/closure.hpp"

#include <array>
#include <functional>
#include <stdexcept>

#include "qsord/acyclicity.hpp"
#include "qsord/error.hpp"
#include "qsord/saturation.hpp"

namespace qsord {
namespace {

bool breaks_with_prec(const Structure& s, Index x, Index y) {
  return find_csc_without_predominant(add_prec(s, x, y)).has_value();
}

bool breaks_with_weak(const Structure& s, Index x, Index y) {
  return find_csc_without_predominant(add_weak(s, x, y)).has_value();
}

Structure f_step_unchecked(const Structure& s) {
  const std::size_t n = s.size();
  Relation prec = s.prec();
  Relation weak = s.weak();
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (x == y) continue;
      if (!s.prec().test(y, x) && breaks_with_weak(s, x, y)) prec.set(y, x);
      if (!s.weak().test(y, x) && breaks_with_prec(s, x, y)) weak.set(y, x);
    }
  }
  return Structure(s.domain(), std::move(prec), std::move(weak));
}

void require_qsa(const Structure& s) {
  if (auto check = is_qsa(s); !check) {
    throw InvalidInput("structure is not QS-acyclic: " + check.witness->note);
  }
}

}  // namespace

std::vector<QscViolation> qsc_violations(const Structure& s) {
  const std::size_t n = s.size();
  std::vector<QscViolation> out;
  for (Index x = 0; x < n; ++x) {
    if (s.prec().test(x, x) || s.weak().test(x, x)) out.push_back({1, x, x});
  }
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (x != y && s.prec().test(x, y) && s.weak().test(y, x)) out.push_back({2, x, y});
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (x != y && !s.weak().test(y, x) && breaks_with_prec(s, x, y)) out.push_back({3, x, y});
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (x != y && !s.prec().test(y, x) && breaks_with_weak(s, x, y)) out.push_back({4, x, y});
  return out;
}

bool is_qsc(const Structure& s) { return qsc_violations(s).empty(); }

Structure f_step(const Structure& s) {
  require_qsa(s);
  return f_step_unchecked(s);
}

ClosureReport close(const Structure& s) {
  require_qsa(s);
  const std::size_t n = s.size();
  const std::size_t cap = 2 * n * n;
  Structure cur = s;
  std::size_t productive = 0;
  std::size_t iterations = 0;
  for (;;) {
    Structure next = f_step_unchecked(cur);
    ++iterations;
    if (next == cur) break;
    if (++productive > cap) throw std::logic_error("closure did not stabilize within 2n^2 steps");
    cur = std::move(next);
  }
  ClosureReport report{cur, (cur.prec() - s.prec()).pairs(), (cur.weak() - s.weak()).pairs(), iterations};
  return report;
}

Structure close_oracle(const Structure& s, std::size_t bound) {
  const SaturationSet sats = saturations(s, std::nullopt, bound);
  if (sats.members.empty()) throw std::logic_error("QS-acyclic structure without saturations");
  Relation prec = sats.members.front().prec();
  Relation weak = sats.members.front().weak();
  for (const Structure& m : sats.members) {
    prec &= m.prec();
    weak &= m.weak();
  }
  return Structure(s.domain(), std::move(prec), std::move(weak));
}

bool PropertyReport::all_hold() const { return first_violation() == nullptr; }

const PropertyResult* PropertyReport::first_violation() const {
  for (const PropertyResult& r : results)
    if (r.status == PropertyResult::Status::violated) return &r;
  return nullptr;
}

namespace {

using Tuple = std::array<Index, 4>;

struct Law {
  const char* name;
  int arity;
  std::function<bool(const Tuple&)> holds;
};

PropertyResult scan(const Law& law, std::size_t n) {
  PropertyResult r{law.name, PropertyResult::Status::holds, {}};
  Tuple v{};
  std::function<bool(int)> rec = [&](int depth) {
    if (depth == law.arity) return law.holds(v);
    for (Index i = 0; i < n; ++i) {
      v[depth] = i;
      if (!rec(depth + 1)) return false;
    }
    return true;
  };
  if (!rec(0)) {
    r.status = PropertyResult::Status::violated;
    r.tuple.assign(v.begin(), v.begin() + law.arity);
  }
  return r;
}

}  // namespace

PropertyReport evaluate_closed_properties(const Structure& s, std::size_t enumeration_bound) {
  const std::size_t n = s.size();
  const Relation& P = s.prec();
  const Relation& W = s.weak();
  auto p = [&](Index a, Index b) { return P.test(a, b); };
  auto w = [&](Index a, Index b) { return W.test(a, b); };

  const std::vector<Law> laws = {
      {"prec_implies_weak", 2,
       [&](const Tuple& v) { return !p(v[0], v[1]) || w(v[0], v[1]); }},
      {"prec_weak_prec", 4,
       [&](const Tuple& v) {
         auto [x, y, z, t] = v;
         return !(p(x, y) && w(y, z) && p(z, t)) || p(x, t);
       }},
      {"mixed_weak_transitivity", 3,
       [&](const Tuple& v) {
         auto [x, y, z, t] = v;
         return !((w(x, y) && p(y, z)) || (p(x, y) && w(y, z))) || w(x, z);
       }},
      {"weak_prec_weak", 4,
       [&](const Tuple& v) {
         auto [x, y, z, t] = v;
         return !(w(x, y) && p(y, z) && w(z, t) && t != x) || w(x, t);
       }},
      {"triangle_weak", 3,
       [&](const Tuple& v) {
         auto [x, y, z, t] = v;
         return !(w(x, z) && p(z, y) && w(y, x)) || (w(z, x) && w(x, y));
       }},
      {"triangle_pred", 4,
       [&](const Tuple& v) {
         auto [x, y, z, t] = v;
         return !(p(t, x) && w(x, z) && p(z, y) && w(y, x)) || (p(t, z) && p(t, y));
       }},
      {"triangle_succ", 4,
       [&](const Tuple& v) {
         auto [x, y, z, t] = v;
         return !(w(x, z) && p(z, y) && w(y, x) && p(x, t)) || (p(z, t) && p(y, t));
       }},
      {"triangle_weak_in", 4,
       [&](const Tuple& v) {
         auto [x, y, z, t] = v;
         return !(x != t && w(t, y) && w(y, x) && w(x, z) && p(z, y)) || w(t, x);
       }},
      {"triangle_weak_out", 4,
       [&](const Tuple& v) {
         auto [x, y, z, t] = v;
         return !(p(z, y) && w(y, x) && w(x, z) && w(z, t) && t != x) || w(x, t);
       }},
      {"double_bridge", 4,
       [&](const Tuple& v) {
         auto [x, y, z, t] = v;
         return !(p(x, z) && w(z, y) && w(x, t) && p(t, y)) || p(x, y);
       }},
      {"weak_triangle_has_single_predominant", 3,
       [&](const Tuple& v) {
         auto [x, y, z, t] = v;
         if (!(w(x, y) && p(y, z) && w(z, x))) return true;
         const Mask tri = bit(x) | bit(y) | bit(z);
         return is_strongly_connected(s, tri) && predominants(s, tri) == bit(x);
       }},
  };

  PropertyReport report;
  for (const Law& law : laws) report.results.push_back(scan(law, n));

  // Strongly connected subsets with exactly two pre-dominants.
  {
    PropertyResult r{"predominant_pair_is_weak_cycle", PropertyResult::Status::holds, {}};
    if (n > kDefaultSubsetBound) {
      r.status = PropertyResult::Status::not_evaluated;
    } else {
      for (Mask phi : csc_subsets_naive(s)) {
        const Mask pre = predominants(s, phi);
        if (popcount(pre) != 2) continue;
        const Index x = lowest(pre);
        const Index y = lowest(pre & (pre - 1));
        if (!(w(x, y) && w(y, x))) {
          r.status = PropertyResult::Status::violated;
          r.tuple = {x, y};
          break;
        }
      }
    }
    report.results.push_back(r);
  }

  // Unordered pairs: both ways of ordering them stay acyclic, and each
  // strictly narrows the saturation set.
  {
    PropertyResult acyclic{"unordered_pair_extensions_acyclic", PropertyResult::Status::holds, {}};
    PropertyResult narrows{"unordered_pair_extensions_narrow_saturations",
                           PropertyResult::Status::holds, {}};
    const bool enumerable = n <= enumeration_bound && is_qsa(s);
    if (!enumerable) narrows.status = PropertyResult::Status::not_evaluated;
    const std::size_t total = enumerable ? saturations(s, std::nullopt, enumeration_bound).members.size() : 0;
    for (Index x = 0; x < n; ++x) {
      for (Index y = 0; y < n; ++y) {
        if (x == y || p(x, y) || w(y, x)) continue;
        const Structure weak_ext = add_weak(s, y, x);
        const Structure prec_ext = add_prec(s, x, y);
        const bool ok_weak = is_qsa(weak_ext).ok;
        const bool ok_prec = is_qsa(prec_ext).ok;
        if (acyclic.status == PropertyResult::Status::holds && !(ok_weak && ok_prec)) {
          acyclic.status = PropertyResult::Status::violated;
          acyclic.tuple = {x, y};
        }
        if (narrows.status != PropertyResult::Status::holds || !ok_weak || !ok_prec) continue;
        const std::size_t via_weak = saturations(weak_ext, std::nullopt, enumeration_bound).members.size();
        const std::size_t via_prec = saturations(prec_ext, std::nullopt, enumeration_bound).members.size();
        if (via_weak >= total || via_prec >= total) {
          narrows.status = PropertyResult::Status::violated;
          narrows.tuple = {x, y};
        }
      }
    }
    report.results.push_back(acyclic);
    report.results.push_back(narrows);
  }
  return report;
}

PropertyReport qsc_property_suite(const Structure& s, std::size_t enumeration_bound) {
  if (!is_qsc(s)) throw InvalidInput("property suite needs a QS-closed structure");
  return evaluate_closed_properties(s, enumeration_bound);
}

}  // namespace qsord
