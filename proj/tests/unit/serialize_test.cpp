#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "qsord/error.hpp"
#include "qsord/generate.hpp"
#include "qsord/qs_sequence.hpp"
#include "qsord/serialize.hpp"
#include "samples.hpp"

using namespace qsord;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(QSORD_FIXTURE_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(StructureJson, ReadsFixtures) {
  EXPECT_EQ(parse_structure(fixture("four_events.json")), samples::four_events());
  EXPECT_EQ(parse_structure(fixture("four_events_closed.json")), samples::four_events_closed());
  const StructureDocument poset = parse_document(fixture("qs_not_stratified.json"));
  EXPECT_FALSE(poset.weak);
  EXPECT_EQ(poset.prec, samples::qs_not_stratified());
  EXPECT_EQ(parse_structure(fixture("qs_maximal.json")), to_structure(poset));
}

TEST(StructureJson, WritesCanonicalForm) {
  EXPECT_EQ(write_structure(samples::four_events_closed()), fixture("four_events_closed.json"));
  EXPECT_EQ(write_structure(samples::four_events()), fixture("four_events.json"));
  EXPECT_EQ(write_poset(Domain(samples::kAbcd), samples::qs_not_stratified()), fixture("qs_not_stratified.json"));
}

TEST(StructureJson, RejectsMalformedInput) {
  EXPECT_THROW(parse_document("{"), InvalidInput);
  EXPECT_THROW(parse_document("[]"), InvalidInput);
  EXPECT_THROW(parse_document(R"({"domain": ["a"], "extra": 1})"), InvalidInput);
  EXPECT_THROW(parse_document(R"({"domain": ["a", "a"]})"), InvalidInput);
  EXPECT_THROW(parse_document(R"({"domain": ["a"], "prec": [["a", "b"]]})"), InvalidInput);
  EXPECT_THROW(parse_document(R"({"domain": ["a"], "prec": [["a"]]})"), InvalidInput);
  EXPECT_THROW(parse_document(R"({"prec": []})"), InvalidInput);
  // A file without "weak" must hold a partial order.
  EXPECT_THROW(parse_structure(R"({"domain": ["a", "b"], "prec": [["a", "b"], ["b", "a"]]})"), InvalidInput);
}

TEST(StructureJson, RoundTrips) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Structure s = random_structure(seed % 30, seed, 0.3);
    ASSERT_EQ(parse_structure(write_structure(s)), s);
  }
  const Structure odd = make_structure({"quote\"d", "back\\slash", "ü"}, {{"ü", "quote\"d"}}, {});
  EXPECT_EQ(parse_structure(write_structure(odd)), odd);
}

TEST(QsSeqFormats, JsonAndTreeText) {
  const QsSeq q = i_map(QsOrder(Domain(samples::kAbcd), samples::qs_not_stratified()));
  EXPECT_EQ(write_qs_seq(q), R"([{"base":["b"],"children":[{"base":["a"]},{"base":["c"]}]},{"base":["d"]}])");
  EXPECT_EQ(parse_qs_seq(write_qs_seq(q), q.domain()), q);
  EXPECT_EQ(tree_text(q), "(b | a c) ; d");
  const QsSeq flat(Domain(samples::kAbcd), {QssStratum::leaf(0b0011), QssStratum::leaf(0b1100)});
  EXPECT_EQ(tree_text(flat), "{a b} ; {c d}");
  EXPECT_THROW(parse_qs_seq(R"([{"base":["a"]}])", Domain(samples::kAbcd)), InvalidInput);
  EXPECT_THROW(parse_qs_seq(R"([{"base":["a","b","c","d"],"x":1}])", Domain(samples::kAbcd)), InvalidInput);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const QsSeq r = random_qs_seq(default_labels(1 + seed % 8), seed);
    ASSERT_EQ(parse_qs_seq(write_qs_seq(r), r.domain()), r);
  }
}

TEST(Dot, SolidAndDashedEdges) {
  const std::string dot = to_dot(samples::four_events_closed(), "closed");
  EXPECT_NE(dot.find("digraph \"closed\" {"), std::string::npos);
  EXPECT_NE(dot.find("\"a\" -> \"d\";"), std::string::npos);
  EXPECT_NE(dot.find("\"a\" -> \"b\" [style=dashed];"), std::string::npos);
  EXPECT_NE(dot.find("\"c\" -> \"d\" [style=dashed];"), std::string::npos);
  // ⊏ pairs already drawn solid are not repeated.
  EXPECT_EQ(dot.find("\"a\" -> \"d\" [style=dashed]"), std::string::npos);
}
