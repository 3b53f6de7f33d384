#pragma once

#include <cstdint>

#include "qsord/structure.hpp"

namespace qsord {

/// Labels a, b, ... for n ≤ 26, x0, x1, ... beyond.
std::vector<std::string> generated_labels(std::size_t n);

/// Irreflexive ≺ and ⊏ with each off-diagonal pair present with probability
/// `density`. Deterministic per seed.
Structure random_structure(std::size_t n, std::uint64_t seed, double density);

/// A random QS-acyclic structure: a random maximal structure thinned by
/// keeping each of its pairs with probability `density`.
Structure random_qsa_structure(std::size_t n, std::uint64_t seed, double density);

}  // namespace qsord
