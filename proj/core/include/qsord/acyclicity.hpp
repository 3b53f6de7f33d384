#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsord/structure.hpp"

namespace qsord {

/// A set of elements that is strongly connected over ≺∪⊏ but has no
/// pre-dominant: the certificate that a structure is not QS-acyclic.
struct CscWitness {
  Mask subset = 0;
  std::string note;
};

struct QsaCheck {
  bool ok = true;
  std::optional<CscWitness> witness;
  explicit operator bool() const { return ok; }
};

/// Members of `subset` with no ≺ relationship (in either direction) to any
/// member of `subset`. Throws InvalidInput on an empty or out-of-range subset.
Mask predominants(const Structure& s, Mask subset);

/// True iff the (≺∪⊏)-graph induced by `subset` is strongly connected.
/// Singletons are strongly connected.
bool is_strongly_connected(const Structure& s, Mask subset);

/// Strongly connected components of `graph` restricted to `within`, listed so
/// that no edge leads from a later component to an earlier one.
std::vector<Mask> strongly_connected_components(const Relation& graph, Mask within);

inline constexpr std::size_t kDefaultSubsetBound = 12;

/// Every strongly connected subset, by scanning all 2^n subsets.
std::vector<Mask> csc_subsets_naive(const Structure& s, std::size_t bound = kDefaultSubsetBound);

/// Subset scan. The witness is a smallest failing subset, ties broken by the
/// lexicographically least element list.
QsaCheck is_qsa_naive(const Structure& s, std::size_t bound = kDefaultSubsetBound);

/// Polynomial decision: in every nontrivial strongly connected component,
/// strip all pre-dominants and recurse on what is left; a component without
/// any pre-dominant is the witness.
QsaCheck is_qsa(const Structure& s);

/// A strongly connected subset without pre-dominant, if any. Unlike is_qsa
/// this does not require the structure to be relational.
std::optional<Mask> find_csc_without_predominant(const Structure& s);

struct LegalExtensions {
  bool prec_ok = false;  ///< adding x≺y keeps the structure QS-acyclic
  bool weak_ok = false;  ///< adding x⊏y keeps the structure QS-acyclic
  friend bool operator==(const LegalExtensions&, const LegalExtensions&) = default;
};

/// Requires a QS-acyclic `s` and x ≠ y.
LegalExtensions legal_extensions(const Structure& s, Index x, Index y);

}  // namespace qsord
