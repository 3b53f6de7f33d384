#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qsord/error.hpp"
#include "qsord/generate.hpp"
#include "qsord/structure.hpp"
#include "samples.hpp"

using namespace qsord;

TEST(Domain, RejectsDuplicateAndEmptyLabels) {
  EXPECT_THROW(Domain({"a", "a"}), InvalidInput);
  EXPECT_THROW(Domain({"a", ""}), InvalidInput);
  EXPECT_THROW(Domain(default_labels(65)), InvalidInput);
}

TEST(Domain, IndexesInDeclarationOrder) {
  const Domain d({"q", "b", "z"});
  EXPECT_EQ(d.index_of("b"), 1u);
  EXPECT_EQ(d.labels_of(0b101), (std::vector<std::string>{"q", "z"}));
  EXPECT_THROW(d.index_of("x"), InvalidInput);
  EXPECT_EQ(default_labels(28)[27], "x27");
}

TEST(Relation, SetAlgebra) {
  Relation a(3), b(3);
  a.set(0, 1);
  a.set(1, 2);
  b.set(1, 2);
  EXPECT_EQ((a & b).pairs(), (std::vector<IndexPair>{{1, 2}}));
  EXPECT_EQ((a - b).pairs(), (std::vector<IndexPair>{{0, 1}}));
  EXPECT_TRUE(b.subset_of(a));
  EXPECT_FALSE(a.is_transitive());
  a.set(0, 2);
  EXPECT_TRUE(a.is_transitive());
  EXPECT_EQ(a.transposed().pairs(), (std::vector<IndexPair>{{1, 0}, {2, 0}, {2, 1}}));
  EXPECT_EQ(a.restricted(0b101).pairs(), (std::vector<IndexPair>{{0, 1}}));
}

TEST(Structure, BuildsFromLabelPairs) {
  const Structure s = make_structure({"a", "b"}, {{"a", "b"}, {"a", "b"}}, {});
  EXPECT_TRUE(s.prec().test(0, 1));
  EXPECT_EQ(s.prec().count(), 1u);
  EXPECT_THROW(make_structure({"a", "a"}, {}, {}), InvalidInput);
  EXPECT_THROW(make_structure({"a"}, {{"a", "q"}}, {}), InvalidInput);
  const Structure e = samples::four_events();
  EXPECT_EQ(label_pairs(e.domain(), e.weak()), (std::vector<LabelPair>{{"a", "b"}, {"c", "d"}}));
}

TEST(Structure, Relational) {
  EXPECT_TRUE(is_relational(Structure()));
  EXPECT_FALSE(is_relational(make_structure({"a"}, {{"a", "a"}}, {})));
  EXPECT_TRUE(is_relational(samples::four_events()));
}

TEST(Structure, Extends) {
  const Structure s = samples::four_events();
  EXPECT_TRUE(extends(s, s));
  EXPECT_TRUE(extends(s, rho(Poset(s.domain(), samples::qs_not_stratified()))));
  EXPECT_FALSE(extends(make_structure({"a", "b"}, {{"a", "b"}}, {}), make_structure({"a", "b"}, {}, {})));
  // Label order does not matter.
  EXPECT_TRUE(extends(make_structure({"a", "b"}, {{"a", "b"}}, {}), make_structure({"b", "a"}, {{"a", "b"}}, {})));
  EXPECT_FALSE(extends(make_structure({"a"}, {}, {}), make_structure({"a", "b"}, {}, {})));
}

TEST(Structure, Project) {
  const Structure s = samples::four_events();
  EXPECT_EQ(project(s, s.domain().all()), s);
  const Structure ac = project(s, std::vector<std::string>{"a", "c"});
  EXPECT_EQ(ac, make_structure({"a", "c"}, {{"a", "c"}}, {}));
  EXPECT_EQ(project(s, Mask{0}).size(), 0u);
  EXPECT_THROW(project(s, std::vector<std::string>{"q"}), InvalidInput);
}

TEST(Structure, Intersect) {
  const Structure s = samples::four_events();
  EXPECT_EQ(intersect(s, s), s);
  const Structure ab = make_structure({"a", "b"}, {{"a", "b"}}, {});
  const Structure ba = make_structure({"a", "b"}, {{"b", "a"}}, {});
  EXPECT_EQ(intersect(ab, ba), make_structure({"a", "b"}, {}, {}));
  EXPECT_EQ(intersect(s, make_structure({"c", "a", "x"}, {{"a", "c"}}, {})), make_structure({"a", "c"}, {{"a", "c"}}, {}));
}

TEST(Structure, ElementAndPairAddition) {
  EXPECT_EQ(add_element(Structure(), "a").domain().labels(), (std::vector<std::string>{"a"}));
  EXPECT_THROW(add_element(samples::four_events(), "a"), InvalidInput);
  const Structure e = make_structure({"a", "b"}, {}, {});
  EXPECT_EQ(add_prec(e, "a", "b"), make_structure({"a", "b"}, {{"a", "b"}}, {}));
  EXPECT_EQ(add_prec(add_prec(e, "a", "b"), "a", "b"), add_prec(e, "a", "b"));
  EXPECT_TRUE(is_relational(add_weak(samples::four_events(), "a", "d")));
}

TEST(Structure, Rho) {
  const Structure anti = rho(Poset::make({"a", "b"}, {}));
  EXPECT_EQ(anti, make_structure({"a", "b"}, {}, {{"a", "b"}, {"b", "a"}}));
  EXPECT_EQ(rho(Poset::make({"a", "b"}, {{"a", "b"}})), make_structure({"a", "b"}, {{"a", "b"}}, {{"a", "b"}}));
  const Structure maximal = make_structure(samples::kAbcd, {{"a", "c"}, {"a", "d"}, {"b", "d"}, {"c", "d"}},
                                        {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "a"}, {"b", "c"}, {"b", "d"},
                                         {"c", "b"}, {"c", "d"}});
  EXPECT_EQ(rho(Poset(Domain(samples::kAbcd), samples::qs_not_stratified())), maximal);
  EXPECT_THROW(Poset::make({"a", "b"}, {{"a", "b"}, {"b", "a"}}), InvalidInput);
}

TEST(StructureProperties, RhoTrichotomyOnAllSmallPosets) {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const Relation& p : oracle::all_posets(n)) {
      const Structure s = rho(Poset(Domain(default_labels(n)), p));
      for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y) {
          if (x == y) continue;
          const int held = int(s.prec().test(x, y)) + int(s.prec().test(y, x)) +
                           int(s.weak().test(x, y) && s.weak().test(y, x));
          ASSERT_EQ(held, 1);
        }
      ASSERT_TRUE(s.prec().subset_of(s.weak()));
    }
  }
}

TEST(StructureProperties, AlgebraLawsOnRandomStructures) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 1 + seed % 6;
    const Structure s = random_structure(n, seed, 0.4);
    const Structure t = random_structure(n, seed + 1000, 0.4);
    const Structure u = random_structure(n, seed + 2000, 0.4);
    const Mask a = (seed * 2654435761u) & full_mask(n);
    const Mask b = (seed * 40503u + 7) & full_mask(n);
    // Projection by index refers to positions of the projected structure.
    const Structure pa = project(s, a);
    EXPECT_EQ(project(pa, pa.domain().mask_of(s.domain().restricted(a & b).labels())), project(s, a & b));
    EXPECT_EQ(intersect(s, t), intersect(t, s));
    EXPECT_EQ(intersect(intersect(s, t), u), intersect(s, intersect(t, u)));
    EXPECT_TRUE(extends(intersect(s, t), s));
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y)
        if (x != y && !s.prec().test(x, y)) EXPECT_TRUE(extends(s, add_prec(s, x, y)));
    if (extends(s, t) && extends(t, s)) EXPECT_EQ(s, t);
  }
}
