#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "qsord/qs_sequence.hpp"
#include "qsord/structure.hpp"

namespace qsord {

/// A parsed structure file. `weak` is absent for poset files.
struct StructureDocument {
  Domain domain;
  Relation prec;
  std::optional<Relation> weak;
};

/// Parses `{"domain": [...], "prec": [[x, y], ...], "weak": [[x, y], ...]}`.
/// "weak" may be omitted; any other key is rejected. Throws InvalidInput.
StructureDocument parse_document(std::string_view text);

/// The structure a document describes. A poset document (no "weak") must
/// have a partial order as "prec" and is embedded with rho.
Structure to_structure(const StructureDocument& doc);

Structure parse_structure(std::string_view text);

/// Canonical form: one key per line, pairs in index order, trailing newline.
std::string write_structure(const Structure& s);
/// Same layout without the "weak" key.
std::string write_poset(const Domain& d, const Relation& prec);

std::string write_qs_seq(const QsSeq& q);
/// Parses the format of write_qs_seq over the given domain and validates.
QsSeq parse_qs_seq(std::string_view text, const Domain& domain);

/// `(b | a c) ; d`: strata joined by " ; ", nodes as "(base | children)",
/// leaves with several elements braced.
std::string tree_text(const QsSeq& q);

/// Graphviz digraph: solid edges for ≺, dashed edges for ⊏ pairs not in ≺.
std::string to_dot(const Structure& s, std::string_view name = "structure");

}  // namespace qsord
