#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "qsord/acyclicity.hpp"
#include "qsord/error.hpp"
#include "qsord/generate.hpp"
#include "samples.hpp"

using namespace qsord;

TEST(Predominants, Examples) {
  const Structure single = make_structure({"x"}, {}, {});
  EXPECT_EQ(predominants(single, 1), Mask{1});
  EXPECT_EQ(predominants(samples::four_events(), 0b1111), Mask{0});
  // a≺b is the only solid arc, so c and d remain.
  EXPECT_EQ(predominants(samples::one_prec_cycle(), 0b1111), Mask{0b1100});
  EXPECT_THROW(predominants(single, 0), InvalidInput);
  EXPECT_THROW(predominants(single, 0b10), InvalidInput);
}

TEST(CscSubsets, Examples) {
  EXPECT_EQ(csc_subsets_naive(samples::four_events()), (std::vector<Mask>{1, 2, 4, 8}));
  EXPECT_EQ(csc_subsets_naive(samples::all_weak_cycle()), (std::vector<Mask>{1, 2, 4, 8, 15}));
  EXPECT_TRUE(csc_subsets_naive(Structure()).empty());
  EXPECT_THROW(csc_subsets_naive(Structure(Domain(default_labels(13)), Relation(13), Relation(13))), BoundExceeded);
}

TEST(Qsa, CycleFamily) {
  const QsaCheck d = is_qsa_naive(samples::alternating_cycle());
  ASSERT_FALSE(d.ok);
  EXPECT_EQ(d.witness->subset, Mask{0b1111});
  EXPECT_TRUE(is_qsa_naive(samples::one_prec_cycle()));
  EXPECT_TRUE(is_qsa_naive(samples::four_events()));
  EXPECT_TRUE(is_qsa(samples::two_prec_cycle()));
  EXPECT_TRUE(is_qsa(samples::all_weak_cycle()));
  const QsaCheck fast = is_qsa(samples::alternating_cycle());
  ASSERT_FALSE(fast.ok);
  EXPECT_EQ(fast.witness->subset, Mask{0b1111});
}

TEST(Qsa, NonRelationalInputFails) {
  EXPECT_FALSE(is_qsa(make_structure({"a"}, {{"a", "a"}}, {})));
  EXPECT_FALSE(is_qsa(make_structure({"a"}, {}, {{"a", "a"}})));
  EXPECT_FALSE(is_qsa_naive(make_structure({"a"}, {}, {{"a", "a"}})));
}

TEST(Qsa, AgreesWithSubsetScansExhaustively) {
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const Structure& s : oracle::all_relational_structures(n)) {
      const bool fast = is_qsa(s).ok;
      ASSERT_EQ(fast, is_qsa_naive(s).ok);
      ASSERT_EQ(fast, oracle::qsa_by_subsets(s));
    }
  }
}

TEST(Qsa, AgreesWithSubsetScansOnSamples) {
  for (std::size_t n = 4; n <= 6; ++n) {
    for (std::uint64_t seed = 0; seed < 2000; ++seed) {
      const double density = 0.05 + 0.05 * static_cast<double>(seed % 6);
      const Structure s = seed % 2 ? random_structure(n, seed, density) : random_qsa_structure(n, seed, 0.9);
      const bool fast = is_qsa(s).ok;
      ASSERT_EQ(fast, is_qsa_naive(s).ok) << "n=" << n << " seed=" << seed;
      ASSERT_EQ(fast, oracle::qsa_by_subsets(s));
      if (!fast) {
        const Mask w = is_qsa(s).witness->subset;
        ASSERT_TRUE(is_strongly_connected(s, w));
        if (popcount(w) > 1) ASSERT_EQ(predominants(s, w), Mask{0});
      }
    }
  }
}

TEST(Qsa, DownwardClosedProjectionAndIntersection) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const std::size_t n = 2 + seed % 5;
    const Structure s = random_qsa_structure(n, seed, 0.6);
    const Structure t = random_qsa_structure(n, seed + 7, 0.6);
    ASSERT_TRUE(is_qsa(s));
    ASSERT_TRUE(is_qsa(project(s, (seed * 11) & full_mask(n))));
    ASSERT_TRUE(is_qsa(intersect(s, t)));
    // Anything below s stays acyclic; anything above a failing structure fails.
    const Structure r = random_structure(n, seed, 0.3);
    if (!is_qsa(r)) ASSERT_FALSE(is_qsa(add_weak(r, 0, 1)));
    const auto before = csc_subsets_naive(r);
    const auto after = csc_subsets_naive(add_prec(r, 0, 1));
    for (Mask m : before) ASSERT_NE(std::find(after.begin(), after.end(), m), after.end());
  }
}

TEST(LegalExtensions, Examples) {
  const Structure ab = make_structure({"a", "b"}, {{"a", "b"}}, {});
  EXPECT_FALSE(legal_extensions(ab, 1, 0).weak_ok);
  const Structure e = make_structure({"a", "b"}, {}, {});
  EXPECT_EQ(legal_extensions(e, 0, 1), (LegalExtensions{true, true}));
  EXPECT_EQ(legal_extensions(e, 1, 0), (LegalExtensions{true, true}));
  EXPECT_THROW(legal_extensions(e, 0, 0), InvalidInput);
  EXPECT_THROW(legal_extensions(samples::alternating_cycle(), 0, 1), InvalidInput);
}

TEST(LegalExtensions, OneOfTheTwoOrientationsIsAlwaysLegal) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t n = 2 + seed % 5;
    const Structure s = random_qsa_structure(n, seed, 0.5);
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y)
        if (x != y) ASSERT_TRUE(legal_extensions(s, x, y).prec_ok || legal_extensions(s, y, x).weak_ok);
  }
}
