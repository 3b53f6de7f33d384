#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qsord/error.hpp"
#include "qsord/orders.hpp"
#include "qsord/qs_sequence.hpp"
#include "samples.hpp"

using namespace qsord;

namespace {

const Domain kD(samples::kAbcd);
constexpr Mask A = 1, B = 2, C = 4, D = 8;

QsSeq first_tree() {
  return QsSeq(kD, {QssStratum::node(B, {QssStratum::leaf(A), QssStratum::leaf(C)}), QssStratum::leaf(D)});
}

}  // namespace

TEST(QsSeq, Domain) {
  EXPECT_EQ(QssStratum::leaf(A | B).domain(), A | B);
  EXPECT_EQ(domain_of(first_tree()), A | B | C | D);
  EXPECT_EQ(domain_of(QsSeq(Domain({"a", "b"}), {QssStratum::leaf(1), QssStratum::leaf(2)})), Mask{3});
}

TEST(QsSeq, Validate) {
  EXPECT_FALSE(validate(first_tree()));
  const QsSeq one_child(kD, {QssStratum::node(A | B, {QssStratum::leaf(C | D)})});
  EXPECT_EQ(validate(one_child), "a node needs at least two child strata");
  const QsSeq overlap(kD, {QssStratum::leaf(A | B), QssStratum::leaf(B | C | D)});
  EXPECT_EQ(validate(overlap), "base sets are not mutually disjoint");
  EXPECT_EQ(validate(QsSeq(kD, {QssStratum::leaf(A)})), "bases do not cover the domain");
  EXPECT_EQ(validate(QsSeq(kD, {})), "empty sequence");
  EXPECT_EQ(validate(QsSeq(kD, {QssStratum::leaf(0), QssStratum::leaf(A | B | C | D)})), "empty base set");
  EXPECT_THROW(g_map(one_child), InvalidInput);
}

TEST(QsSeq, GMap) {
  EXPECT_EQ(g_map(QsSeq(Domain({"a", "b"}), {QssStratum::leaf(3)})).prec(), Relation(2));
  const QsOrder ab = g_map(QsSeq(Domain({"a", "b"}), {QssStratum::leaf(1), QssStratum::leaf(2)}));
  EXPECT_EQ(ab.prec().pairs(), (std::vector<IndexPair>{{0, 1}}));
  EXPECT_EQ(g_map(first_tree()).prec(), samples::qs_not_stratified());
}

TEST(QsSeq, IMap) {
  EXPECT_EQ(i_map(QsOrder(Domain({"a", "b"}), Relation(2))), QsSeq(Domain({"a", "b"}), {QssStratum::leaf(3)}));
  EXPECT_EQ(i_map(QsOrder(kD, samples::qs_not_stratified())), first_tree());
  Relation chain(3);
  chain.set(0, 1);
  chain.set(1, 2);
  chain.set(0, 2);
  EXPECT_EQ(i_map(QsOrder(Domain({"a", "b", "c"}), chain)),
            QsSeq(Domain({"a", "b", "c"}), {QssStratum::leaf(1), QssStratum::leaf(2), QssStratum::leaf(4)}));
  EXPECT_THROW(i_map(qso_empty()), InvalidInput);
}

TEST(QsSeq, EnumerationCounts) {
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(enumerate_qs_seqs(default_labels(n)).size(), oracle::kQsOrderCounts[n]);
  }
  EXPECT_THROW(enumerate_qs_seqs(default_labels(7)), BoundExceeded);
}

TEST(QsSeq, RandomIsDeterministicAndValid) {
  EXPECT_EQ(random_qs_seq({"a"}, 3), QsSeq(Domain({"a"}), {QssStratum::leaf(1)}));
  const auto labels = default_labels(5);
  EXPECT_EQ(random_qs_seq(labels, 42), random_qs_seq(labels, 42));
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const QsSeq q = random_qs_seq(default_labels(1 + seed % 8), seed);
    ASSERT_FALSE(validate(q)) << *validate(q);
  }
}

TEST(QsSeq, RoundTripsBothWays) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const QsSeq q = random_qs_seq(default_labels(1 + seed % 8), seed);
    const QsOrder o = g_map(q);
    ASSERT_TRUE(is_qs_order(o.prec()));
    ASSERT_EQ(o.domain(), q.domain());
    ASSERT_EQ(i_map(o), q);
  }
  for (std::size_t n = 1; n <= 5; ++n)
    for (const QsOrder& o : enumerate_qs_orders(default_labels(n))) ASSERT_EQ(g_map(i_map(o)), o);
}

TEST(QsSeq, SingleStratumIffStratumOrder) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const QsSeq& q : enumerate_qs_seqs(default_labels(n)))
      ASSERT_EQ(q.strata().size() == 1, is_qso_stratum(g_map(q)));
}

TEST(QsSeq, AllLeafSequencesAreStratified) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const QsSeq& q : enumerate_qs_seqs(default_labels(n))) {
      bool leaves = true;
      std::vector<Mask> bases;
      for (const QssStratum& s : q.strata()) {
        leaves = leaves && s.is_leaf();
        bases.push_back(s.base);
      }
      if (!leaves) continue;
      const Relation r = g_map(q).prec();
      ASSERT_TRUE(is_stratified_order(r));
      ASSERT_EQ(stratified_partition(r), bases);
    }
}
