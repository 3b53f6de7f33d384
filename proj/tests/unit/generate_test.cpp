#include <gtest/gtest.h>

#include "qsord/acyclicity.hpp"
#include "qsord/error.hpp"
#include "qsord/generate.hpp"

using namespace qsord;

TEST(Generate, Deterministic) {
  EXPECT_EQ(random_structure(4, 7, 0.3), random_structure(4, 7, 0.3));
  EXPECT_EQ(random_qsa_structure(6, 9, 0.5), random_qsa_structure(6, 9, 0.5));
  EXPECT_NE(random_structure(6, 1, 0.5), random_structure(6, 2, 0.5));
}

TEST(Generate, Shapes) {
  EXPECT_EQ(random_structure(3, 0, 0.0).prec().count(), 0u);
  EXPECT_EQ(random_structure(3, 0, 1.0).prec().count(), 6u);
  EXPECT_TRUE(is_relational(random_structure(10, 4, 1.0)));
  EXPECT_EQ(random_structure(30, 0, 0.1).domain().label(29), "x29");
  EXPECT_THROW(random_structure(3, 0, 1.5), InvalidInput);
  EXPECT_EQ(random_qsa_structure(0, 0, 0.5).size(), 0u);
}

TEST(Generate, QsaGeneratorStaysAcyclic) {
  for (std::uint64_t seed = 0; seed < 500; ++seed)
    ASSERT_TRUE(is_qsa(random_qsa_structure(1 + seed % 20, seed, 0.1 * static_cast<double>(seed % 11))));
}
