#pragma once

#include <string>
#include <vector>

#include "qsord/qs_order.hpp"
#include "qsord/structure.hpp"

namespace samples {

using qsord::LabelPair;

inline const std::vector<std::string> kAbcd = {"a", "b", "c", "d"};

inline qsord::Structure four_events() {
  return qsord::make_structure(kAbcd, {{"a", "c"}, {"b", "d"}}, {{"a", "b"}, {"c", "d"}});
}

inline qsord::Structure four_events_closed() {
  return qsord::make_structure(kAbcd, {{"a", "c"}, {"a", "d"}, {"b", "d"}},
                               {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "d"}, {"c", "d"}});
}

inline qsord::Relation order(const std::vector<LabelPair>& pairs) {
  return qsord::Poset::make(kAbcd, pairs).prec();
}

// Four-element orders named after the elements a..d.
inline qsord::Relation chain4() {
  return order({{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "d"}});
}
inline qsord::Relation stratified4() {
  return order({{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "d"}});
}
inline qsord::Relation interval4() { return order({{"a", "c"}, {"a", "d"}, {"b", "d"}}); }
inline qsord::Relation two_plus_two() { return order({{"a", "c"}, {"b", "d"}}); }
inline qsord::Relation qs_not_stratified() { return order({{"a", "c"}, {"a", "d"}, {"c", "d"}, {"b", "d"}}); }

inline qsord::Structure cycle4(const std::vector<LabelPair>& prec, const std::vector<LabelPair>& weak) {
  return qsord::make_structure(kAbcd, prec, weak);
}
inline qsord::Structure all_weak_cycle() {
  return cycle4({}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
}
inline qsord::Structure one_prec_cycle() {
  return cycle4({{"a", "b"}}, {{"b", "c"}, {"c", "d"}, {"d", "a"}});
}
inline qsord::Structure two_prec_cycle() {
  return cycle4({{"a", "b"}, {"b", "c"}}, {{"c", "d"}, {"d", "a"}});
}
inline qsord::Structure alternating_cycle() {
  return cycle4({{"a", "b"}, {"c", "d"}}, {{"b", "c"}, {"d", "a"}});
}

}  // namespace samples
