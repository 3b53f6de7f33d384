#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qsord/acyclicity.hpp"
#include "qsord/closure.hpp"
#include "qsord/error.hpp"
#include "qsord/generate.hpp"
#include "qsord/orders.hpp"
#include "qsord/qs_order.hpp"
#include "qsord/qs_sequence.hpp"
#include "qsord/saturation.hpp"
#include "qsord/serialize.hpp"

using namespace qsord;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string names(const Domain& d, const std::vector<Index>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += d.label(xs[i]);
  }
  return "(" + out + ")";
}

// Counterexamples for the order classes, found by the same literal scans the
// library predicates perform.
std::optional<std::string> partial_order_problem(const Domain& d, const Relation& r) {
  const std::size_t n = r.size();
  for (Index x = 0; x < n; ++x)
    if (r.test(x, x)) return d.label(x) + " precedes itself";
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index z = 0; z < n; ++z)
        if (r.test(x, y) && r.test(y, z) && !r.test(x, z))
          return "not transitive at " + names(d, {x, y, z});
  return std::nullopt;
}

std::optional<std::string> total_order_problem(const Domain& d, const Relation& r) {
  if (auto p = partial_order_problem(d, r)) return p;
  for (Index x = 0; x < r.size(); ++x)
    for (Index y = x + 1; y < r.size(); ++y)
      if (!r.related(x, y)) return d.label(x) + " and " + d.label(y) + " are unordered";
  return std::nullopt;
}

std::optional<std::string> stratified_order_problem(const Domain& d, const Relation& r) {
  if (auto p = partial_order_problem(d, r)) return p;
  const std::size_t n = r.size();
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index z = 0; z < n; ++z) {
        if (x == y || r.related(x, y)) continue;
        if (r.test(x, z) && !r.test(y, z)) return "unordered pair does not share successors at " + names(d, {x, y, z});
        if (r.test(z, x) && !r.test(z, y)) return "unordered pair does not share predecessors at " + names(d, {x, y, z});
      }
  return std::nullopt;
}

std::optional<std::string> interval_order_problem(const Domain& d, const Relation& r) {
  if (auto p = partial_order_problem(d, r)) return p;
  const std::size_t n = r.size();
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index z = 0; z < n; ++z)
        for (Index t = 0; t < n; ++t)
          if (r.test(x, y) && r.test(z, t) && !r.test(x, t) && !r.test(z, y))
            return "two unrelated chains " + names(d, {x, y, z, t});
  return std::nullopt;
}

int verdict(bool ok, const std::string& what, const std::string& witness = {}) {
  if (ok) {
    std::cout << "pass: " << what << "\n";
    return kPass;
  }
  std::cout << "fail: not " << what;
  if (!witness.empty()) std::cout << "; " << witness;
  std::cout << "\n";
  return kFail;
}

int check_order_class(const StructureDocument& doc, const std::string& cls) {
  const Domain& d = doc.domain;
  const Relation& r = doc.prec;
  std::optional<std::string> problem;
  std::string what;
  if (cls == "po") {
    problem = partial_order_problem(d, r);
    what = "a partial order";
  } else if (cls == "to") {
    problem = total_order_problem(d, r);
    what = "a total order";
  } else if (cls == "so") {
    problem = stratified_order_problem(d, r);
    what = "a stratified order";
  } else {
    problem = interval_order_problem(d, r);
    what = "an interval order";
  }
  return verdict(!problem, what, problem.value_or(""));
}

int check_qso(const StructureDocument& doc) {
  const QsoCheck c = check_qs_order(doc.prec);
  if (c.ok) return verdict(true, "a quasi-stratified order");
  if (c.self_loop) return verdict(false, "a quasi-stratified order", doc.domain.label(*c.self_loop) + " precedes itself");
  const auto& v = *c.violation;
  return verdict(false, "a quasi-stratified order",
                 "quadruple " + names(doc.domain, {v[0], v[1], v[2], v[3]}));
}

int check_relational(const Structure& s) {
  for (Index x = 0; x < s.size(); ++x) {
    if (s.prec().test(x, x)) return verdict(false, "relational", s.domain().label(x) + " precedes itself");
    if (s.weak().test(x, x)) return verdict(false, "relational", s.domain().label(x) + " weakly precedes itself");
  }
  return verdict(true, "relational");
}

int check_qsa(const Structure& s) {
  const QsaCheck c = is_qsa(s);
  return verdict(c.ok, "QS-acyclic", c.ok ? "" : c.witness->note);
}

int check_maximal(const Structure& s) {
  const QsmCheck c = qsord::check_qsm(s);
  return verdict(c.ok, "maximal", c.ok ? "" : "axiom " + std::to_string(c.axiom) + " fails at " + names(s.domain(), c.tuple));
}

std::string describe(const Domain& d, const QscViolation& v) {
  const std::string x = d.label(v.x), y = d.label(v.y);
  switch (v.axiom) {
    case 1: return x + " is related to itself";
    case 2: return x + " precedes " + y + " but " + y + " weakly precedes " + x;
    case 3: return "adding " + x + " precedes " + y + " breaks acyclicity, so " + y + " weakly precedes " + x + " is required";
    default: return "adding " + x + " weakly precedes " + y + " breaks acyclicity, so " + y + " precedes " + x + " is required";
  }
}

int check_qsc(const Structure& s) {
  const auto violations = qsc_violations(s);
  if (violations.empty()) return verdict(true, "closed");
  std::cout << "fail: not closed\n";
  for (const QscViolation& v : violations) {
    std::cout << "  axiom " << v.axiom << ": " << describe(s.domain(), v) << "\n";
  }
  return kFail;
}

int cmd_check(const std::string& path, const std::string& cls) {
  const StructureDocument doc = parse_document(read_file(path));
  if (cls == "po" || cls == "to" || cls == "so" || cls == "io") return check_order_class(doc, cls);
  if (cls == "qso") return check_qso(doc);
  const Structure s = to_structure(doc);
  if (cls == "relational") return check_relational(s);
  if (cls == "qsa") return check_qsa(s);
  if (cls == "qsm") return check_maximal(s);
  return check_qsc(s);
}

std::string pair_text(const Domain& d, const std::vector<IndexPair>& ps) {
  std::string out;
  for (auto [x, y] : ps) out += (out.empty() ? "" : " ") + d.label(x) + "->" + d.label(y);
  return out.empty() ? "none" : out;
}

int cmd_close(const std::string& path, const std::string& output) {
  const Structure s = parse_structure(read_file(path));
  if (auto c = is_qsa(s); !c) {
    std::cout << "fail: not QS-acyclic; " << c.witness->note << "\n";
    return kFail;
  }
  const ClosureReport rep = close(s);
  std::ostream& log = output.empty() ? std::cerr : std::cout;
  if (output.empty()) {
    std::cout << write_structure(rep.closed);
  } else {
    write_file(output, write_structure(rep.closed));
  }
  if (rep.added_prec.empty() && rep.added_weak.empty()) {
    log << "already closed, 0 additions\n";
  } else {
    log << "added prec: " << pair_text(s.domain(), rep.added_prec) << "\n"
        << "added weak: " << pair_text(s.domain(), rep.added_weak) << "\n";
  }
  log << "iterations: " << rep.iterations << "\n";
  return kPass;
}

std::string intervals_text(const Domain& d, const std::vector<Interval>& iv) {
  std::string out;
  for (Index i = 0; i < d.size(); ++i) {
    out += (i ? " " : "") + d.label(i) + "[" + std::to_string(iv[i].begin) + "," + std::to_string(iv[i].end) + "]";
  }
  return out;
}

std::string intervals_json(const Domain& d, const std::vector<Interval>& iv) {
  std::string out = "{";
  for (Index i = 0; i < d.size(); ++i) {
    if (i) out += ", ";
    out += quote(d.label(i)) + ": [" + std::to_string(iv[i].begin) + ", " + std::to_string(iv[i].end) + "]";
  }
  return out + "}";
}

std::string indent(const std::string& text, const std::string& pad) {
  std::string out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out += pad + line + "\n";
  return out;
}

int cmd_saturate(const std::string& path, std::optional<std::size_t> limit, const std::string& format) {
  const Structure s = parse_structure(read_file(path));
  if (auto c = is_qsa(s); !c) {
    std::cout << "fail: not QS-acyclic; " << c.witness->note << "\n";
    return kFail;
  }
  const SaturationSet sats = saturations(s, limit);
  if (format == "tree") {
    std::size_t k = 0;
    for (const Structure& m : sats.members) {
      const QsOrder q = qsm_to_qso(m);
      std::cout << ++k << ": " << tree_text(i_map(q)) << "    " << intervals_text(m.domain(), *interval_realization(m.prec()))
                << "\n";
    }
    std::cout << sats.members.size() << " saturation(s)" << (sats.truncated ? ", truncated" : "") << "\n";
    return kPass;
  }
  std::cout << "{\n  \"truncated\": " << (sats.truncated ? "true" : "false") << ",\n  \"saturations\": [";
  for (std::size_t k = 0; k < sats.members.size(); ++k) {
    const Structure& m = sats.members[k];
    const QsSeq seq = i_map(qsm_to_qso(m));
    std::string structure = write_structure(m);
    structure.pop_back();
    std::cout << (k ? ",\n" : "\n") << "    {\n"
              << "      \"tree\": " << quote(tree_text(seq)) << ",\n"
              << "      \"sequence\": " << write_qs_seq(seq) << ",\n"
              << "      \"intervals\": " << intervals_json(m.domain(), *interval_realization(m.prec())) << ",\n"
              << "      \"structure\":\n" << indent(structure, "      ") << "    }";
  }
  std::cout << (sats.members.empty() ? "]\n" : "\n  ]\n") << "}\n";
  return kPass;
}

std::optional<QsOrder> qs_order_of(const StructureDocument& doc) {
  if (!is_qs_order(doc.prec)) {
    check_qso(doc);
    return std::nullopt;
  }
  return QsOrder(doc.domain, doc.prec);
}

int cmd_decompose(const std::string& path, const std::string& format) {
  const auto q = qs_order_of(parse_document(read_file(path)));
  if (!q) return kFail;
  if (q->empty()) {
    std::cout << (format == "json" ? "[]\n" : "\n");
    return kPass;
  }
  const QsSeq seq = i_map(*q);
  std::cout << (format == "json" ? write_qs_seq(seq) : tree_text(seq)) << "\n";
  return kPass;
}

int cmd_intervals(const std::string& path) {
  const StructureDocument doc = parse_document(read_file(path));
  const auto iv = interval_realization(doc.prec);
  if (!iv) return check_order_class(doc, "io");
  for (Index i = 0; i < doc.domain.size(); ++i) {
    std::cout << doc.domain.label(i) << " " << (*iv)[i].begin << " " << (*iv)[i].end << "\n";
  }
  return kPass;
}

int cmd_render(const std::string& path, const std::string& format) {
  const StructureDocument doc = parse_document(read_file(path));
  if (format == "tree") return cmd_decompose(path, "tree");
  if (format == "json") {
    std::cout << (doc.weak ? write_structure(to_structure(doc)) : write_poset(doc.domain, doc.prec));
    return kPass;
  }
  const Structure s = doc.weak ? to_structure(doc) : Structure(doc.domain, doc.prec, Relation(doc.domain.size()));
  std::cout << to_dot(s);
  return kPass;
}

int cmd_gen(std::size_t n, std::uint64_t seed, double density, bool qsa, const std::string& output) {
  if (n > kMaxElements) throw InvalidInput("at most 64 elements");
  const Structure s = qsa ? random_qsa_structure(n, seed, density) : random_structure(n, seed, density);
  if (output.empty()) {
    std::cout << write_structure(s);
  } else {
    write_file(output, write_structure(s));
  }
  return kPass;
}

// Self-test oracles: brute-force enumeration of relations over small domains.

std::vector<Structure> all_relational_structures(std::size_t n) {
  std::vector<IndexPair> slots;
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (x != y) slots.emplace_back(x, y);
  const std::size_t m = slots.size();
  std::vector<Structure> out;
  const Domain d(default_labels(n));
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (2 * m)); ++bits) {
    Relation p(n), w(n);
    for (std::size_t i = 0; i < m; ++i) {
      if (bits >> i & 1) p.set(slots[i].first, slots[i].second);
      if (bits >> (m + i) & 1) w.set(slots[i].first, slots[i].second);
    }
    out.emplace_back(d, std::move(p), std::move(w));
  }
  return out;
}

std::vector<Relation> all_partial_orders(std::size_t n) {
  std::vector<IndexPair> slots;
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (x != y) slots.emplace_back(x, y);
  std::vector<Relation> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots.size()); ++bits) {
    Relation r(n);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (bits >> i & 1) r.set(slots[i].first, slots[i].second);
    if (r.is_transitive()) out.push_back(std::move(r));
  }
  return out;
}

enum class Cell { pass, fail, skipped };

Cell suite_qsa(std::size_t n) {
  if (n <= 3) {
    for (const Structure& s : all_relational_structures(n))
      if (is_qsa(s).ok != is_qsa_naive(s).ok) return Cell::fail;
    return Cell::pass;
  }
  if (n > kDefaultSubsetBound) return Cell::skipped;
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    const Structure s = random_structure(n, seed, 0.05 + 0.3 * static_cast<double>(seed % 7) / 6.0);
    if (is_qsa(s).ok != is_qsa_naive(s).ok) return Cell::fail;
  }
  return Cell::pass;
}

Cell suite_axioms(std::size_t n) {
  if (n > 4) return Cell::skipped;
  std::set<std::vector<IndexPair>> enumerated;
  for (const QsOrder& q : enumerate_qs_orders(default_labels(n))) enumerated.insert(q.prec().pairs());
  std::size_t members = 0;
  for (const Relation& r : all_partial_orders(n)) {
    const bool listed = enumerated.count(r.pairs()) > 0;
    if (is_qs_order(r) != listed) return Cell::fail;
    members += listed;
  }
  return members == enumerated.size() ? Cell::pass : Cell::fail;
}

Cell suite_round_trip(std::size_t n) {
  if (n > kDefaultEnumerationBound) return Cell::skipped;
  const auto labels = default_labels(n);
  for (const QsSeq& seq : enumerate_qs_seqs(labels)) {
    const QsOrder q = g_map(seq);
    if (!(i_map(q) == seq)) return Cell::fail;
    if (!(parse_qs_seq(write_qs_seq(seq), seq.domain()) == seq)) return Cell::fail;
    const Structure m = qso_to_qsm(q);
    if (!(parse_structure(write_structure(m)) == m)) return Cell::fail;
    if (!(qsm_to_qso(m) == q)) return Cell::fail;
  }
  return Cell::pass;
}

Cell suite_closure(std::size_t n) {
  if (n > 5) return Cell::skipped;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Structure s = random_qsa_structure(n, seed, 0.2 + 0.6 * static_cast<double>(seed % 5) / 4.0);
    if (!(close(s).closed == close_oracle(s))) return Cell::fail;
  }
  return Cell::pass;
}

int cmd_selftest(std::size_t max_n) {
  if (max_n < 1) throw InvalidInput("--max-n must be at least 1");
  const std::vector<std::pair<std::string, Cell (*)(std::size_t)>> suites = {
      {"acyclicity vs subset scan", suite_qsa},
      {"axioms vs enumeration", suite_axioms},
      {"round trip", suite_round_trip},
      {"closure vs intersection", suite_closure},
  };
  bool ok = true;
  std::printf("%-28s", "suite");
  for (std::size_t n = 1; n <= max_n; ++n) std::printf(" n=%-5zu", n);
  std::printf("\n");
  for (const auto& [name, run] : suites) {
    std::printf("%-28s", name.c_str());
    for (std::size_t n = 1; n <= max_n; ++n) {
      const Cell c = run(n);
      ok = ok && c != Cell::fail;
      std::printf(" %-7s", c == Cell::pass ? "pass" : c == Cell::fail ? "FAIL" : "-");
    }
    std::printf("\n");
  }
  std::printf("%s\n", ok ? "all suites pass" : "some suites failed");
  return ok ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasi-stratified orders and relational structures"};
  app.require_subcommand(1);

  std::string path, cls, format, output;
  std::optional<std::size_t> limit;
  std::size_t n = 4, max_n = 4;
  std::uint64_t seed = 0;
  double density = 0.3;
  bool qsa = false;

  auto* check = app.add_subcommand("check", "Classify a structure or order");
  check->add_option("--class", cls, "po|to|so|io|qso|relational|qsa|qsm|qsc")
      ->required()
      ->check(CLI::IsMember({"po", "to", "so", "io", "qso", "relational", "qsa", "qsm", "qsc"}));
  check->add_option("file", path)->required();

  auto* closec = app.add_subcommand("close", "Compute the closure of a QS-acyclic structure");
  closec->add_option("file", path)->required();
  closec->add_option("--output,-o", output, "Write the closed structure here");

  auto* sat = app.add_subcommand("saturate", "List all maximal extensions");
  sat->add_option("file", path)->required();
  sat->add_option("--limit", limit);
  sat->add_option("--format", format)->check(CLI::IsMember({"json", "tree"}))->default_val("json");

  auto* dec = app.add_subcommand("decompose", "Print the QS-sequence of a quasi-stratified order");
  dec->add_option("file", path)->required();
  dec->add_option("--format", format)->check(CLI::IsMember({"tree", "json"}))->default_val("tree");

  auto* iv = app.add_subcommand("intervals", "Print integer interval endpoints of an interval order");
  iv->add_option("file", path)->required();

  auto* render = app.add_subcommand("render", "Write a structure as JSON, DOT or tree text");
  render->add_option("file", path)->required();
  render->add_option("--format", format)->check(CLI::IsMember({"json", "dot", "tree"}))->default_val("dot");

  auto* gen = app.add_subcommand("gen", "Generate a random structure");
  gen->add_option("--n", n)->default_val(4);
  gen->add_option("--seed", seed)->default_val(0);
  gen->add_option("--density", density)->default_val(0.3)->check(CLI::Range(0.0, 1.0));
  gen->add_flag("--qsa", qsa, "Thin a random maximal structure instead, so the result is QS-acyclic");
  gen->add_option("--output,-o", output);

  auto* self = app.add_subcommand("selftest", "Run the oracle suites");
  self->add_option("--max-n", max_n)->default_val(4);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kInputError;
  }

  try {
    if (*check) return cmd_check(path, cls);
    if (*closec) return cmd_close(path, output);
    if (*sat) return cmd_saturate(path, limit, format);
    if (*dec) return cmd_decompose(path, format);
    if (*iv) return cmd_intervals(path);
    if (*render) return cmd_render(path, format);
    if (*gen) return cmd_gen(n, seed, density, qsa, output);
    return cmd_selftest(max_n);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const BoundExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
