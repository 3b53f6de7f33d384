#include "qsord/generate.hpp"

#include <random>

#include "qsord/error.hpp"
#include "qsord/qs_sequence.hpp"
#include "qsord/saturation.hpp"

namespace qsord {
namespace {

void check_density(double density) {
  if (!(density >= 0.0 && density <= 1.0)) throw InvalidInput("density must lie in [0, 1]");
}

Relation thinned(const Relation& r, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(density);
  Relation out(r.size());
  for (auto [x, y] : r.pairs())
    if (keep(rng)) out.set(x, y);
  return out;
}

}  // namespace

std::vector<std::string> generated_labels(std::size_t n) {
  if (n <= 26) return default_labels(n);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

Structure random_structure(std::size_t n, std::uint64_t seed, double density) {
  check_density(density);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  Relation prec(n), weak(n);
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (x == y) continue;
      if (coin(rng)) prec.set(x, y);
      if (coin(rng)) weak.set(x, y);
    }
  }
  return Structure(Domain(generated_labels(n)), std::move(prec), std::move(weak));
}

Structure random_qsa_structure(std::size_t n, std::uint64_t seed, double density) {
  check_density(density);
  if (n == 0) return Structure();
  const auto labels = generated_labels(n);
  const Structure full = qso_to_qsm(g_map(random_qs_seq(labels, seed)));
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  Relation prec = thinned(full.prec(), density, rng);
  Relation weak = thinned(full.weak(), density, rng);
  return Structure(full.domain(), std::move(prec), std::move(weak));
}

}  // namespace qsord
