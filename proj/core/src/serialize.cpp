#include "qsord/serialize.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

#include "qsord/error.hpp"
#include "qsord/orders.hpp"

namespace qsord {
namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

std::string quoted(const std::string& s) { return json(s).dump(); }

Relation read_pairs(const json& j, const Domain& d, const char* key) {
  if (!j.is_array()) throw InvalidInput(std::string("\"") + key + "\" must be an array");
  Relation r(d.size());
  for (const json& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
      throw InvalidInput(std::string("\"") + key + "\" entries must be pairs of labels");
    }
    r.set(d.index_of(p[0].get<std::string>()), d.index_of(p[1].get<std::string>()));
  }
  return r;
}

std::string pair_list(const Domain& d, const Relation& r) {
  std::string out = "[";
  bool first = true;
  for (auto [x, y] : r.pairs()) {
    if (!first) out += ", ";
    first = false;
    out += "[" + quoted(d.label(x)) + ", " + quoted(d.label(y)) + "]";
  }
  return out + "]";
}

std::string domain_list(const Domain& d) {
  std::string out = "[";
  for (Index i = 0; i < d.size(); ++i) {
    if (i) out += ", ";
    out += quoted(d.label(i));
  }
  return out + "]";
}

json stratum_json(const Domain& d, const QssStratum& st) {
  json j;
  j["base"] = d.labels_of(st.base);
  if (!st.is_leaf()) {
    json kids = json::array();
    for (const QssStratum& c : st.children) kids.push_back(stratum_json(d, c));
    j["children"] = std::move(kids);
  }
  return j;
}

QssStratum stratum_from(const json& j, const Domain& d) {
  if (!j.is_object()) throw InvalidInput("a stratum must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() != "base" && it.key() != "children") throw InvalidInput("unknown key \"" + it.key() + "\"");
  }
  if (!j.contains("base") || !j["base"].is_array()) throw InvalidInput("a stratum needs a \"base\" array");
  QssStratum st;
  for (const json& l : j["base"]) {
    if (!l.is_string()) throw InvalidInput("base entries must be labels");
    st.base |= bit(d.index_of(l.get<std::string>()));
  }
  if (j.contains("children")) {
    if (!j["children"].is_array()) throw InvalidInput("\"children\" must be an array");
    for (const json& c : j["children"]) st.children.push_back(stratum_from(c, d));
  }
  return st;
}

std::string base_text(const Domain& d, Mask m) {
  const auto labels = d.labels_of(m);
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ' ';
    out += labels[i];
  }
  return labels.size() == 1 ? out : "{" + out + "}";
}

std::string stratum_text(const Domain& d, const QssStratum& st) {
  if (st.is_leaf()) return base_text(d, st.base);
  std::string out = "(";
  const auto labels = d.labels_of(st.base);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ' ';
    out += labels[i];
  }
  out += " |";
  for (const QssStratum& c : st.children) out += " " + stratum_text(d, c);
  return out + ")";
}

}  // namespace

StructureDocument parse_document(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw InvalidInput("structure file must hold a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() != "domain" && it.key() != "prec" && it.key() != "weak") {
      throw InvalidInput("unknown key \"" + it.key() + "\"");
    }
  }
  if (!j.contains("domain") || !j["domain"].is_array()) throw InvalidInput("missing \"domain\" array");
  std::vector<std::string> labels;
  for (const json& l : j["domain"]) {
    if (!l.is_string()) throw InvalidInput("domain entries must be strings");
    labels.push_back(l.get<std::string>());
  }
  StructureDocument doc{Domain(std::move(labels)), Relation(0), std::nullopt};
  doc.prec = j.contains("prec") ? read_pairs(j["prec"], doc.domain, "prec") : Relation(doc.domain.size());
  if (j.contains("weak")) doc.weak = read_pairs(j["weak"], doc.domain, "weak");
  return doc;
}

Structure to_structure(const StructureDocument& doc) {
  if (doc.weak) return Structure(doc.domain, doc.prec, *doc.weak);
  if (!is_partial_order(doc.prec)) throw InvalidInput("a file without \"weak\" must describe a partial order");
  return rho(Poset(doc.domain, doc.prec));
}

Structure parse_structure(std::string_view text) { return to_structure(parse_document(text)); }

std::string write_structure(const Structure& s) {
  std::ostringstream os;
  os << "{\n"
     << "  \"domain\": " << domain_list(s.domain()) << ",\n"
     << "  \"prec\": " << pair_list(s.domain(), s.prec()) << ",\n"
     << "  \"weak\": " << pair_list(s.domain(), s.weak()) << "\n"
     << "}\n";
  return os.str();
}

std::string write_poset(const Domain& d, const Relation& prec) {
  std::ostringstream os;
  os << "{\n"
     << "  \"domain\": " << domain_list(d) << ",\n"
     << "  \"prec\": " << pair_list(d, prec) << "\n"
     << "}\n";
  return os.str();
}

std::string write_qs_seq(const QsSeq& q) {
  json j = json::array();
  for (const QssStratum& st : q.strata()) j.push_back(stratum_json(q.domain(), st));
  return j.dump();
}

QsSeq parse_qs_seq(std::string_view text, const Domain& domain) {
  const json j = parse_json(text);
  if (!j.is_array()) throw InvalidInput("a QS-sequence must be a JSON array");
  std::vector<QssStratum> strata;
  for (const json& st : j) strata.push_back(stratum_from(st, domain));
  QsSeq q(domain, std::move(strata));
  if (auto problem = validate(q)) throw InvalidInput(*problem);
  return q;
}

std::string tree_text(const QsSeq& q) {
  std::string out;
  for (std::size_t i = 0; i < q.strata().size(); ++i) {
    if (i) out += " ; ";
    out += stratum_text(q.domain(), q.strata()[i]);
  }
  return out;
}

std::string to_dot(const Structure& s, std::string_view name) {
  const Domain& d = s.domain();
  std::ostringstream os;
  os << "digraph " << quoted(std::string(name)) << " {\n";
  for (Index i = 0; i < d.size(); ++i) os << "  " << quoted(d.label(i)) << ";\n";
  for (auto [x, y] : s.prec().pairs()) {
    os << "  " << quoted(d.label(x)) << " -> " << quoted(d.label(y)) << ";\n";
  }
  for (auto [x, y] : (s.weak() - s.prec()).pairs()) {
    os << "  " << quoted(d.label(x)) << " -> " << quoted(d.label(y)) << " [style=dashed];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace qsord
