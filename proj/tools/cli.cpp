#include "qlat/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "qlat/error.hpp"
#include "qlat/generators.hpp"
#include "qlat/pipeline.hpp"
#include "qlat/projective.hpp"

namespace qlat::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr std::array kLaws{Law::LatticeAxioms, Law::Distributive, Law::Modular, Law::HeightLaw,
                           Law::Complemented,  Law::Atomic,       Law::Perspective, Law::P1,
                           Law::P2,            Law::P3ThirdPoint, Law::Spanning,    Law::TopHeight};

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

[[noreturn]] void bad_input(const std::string& what) { throw Error(ErrorCode::InvalidArgument, what); }

std::string quoted_id(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) bad_input("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) bad_input("cannot write '" + path + "'");
  file << text;
}

json witness_labels(const FiniteLattice& L, const std::vector<ElementId>& w) {
  json arr = json::array();
  for (ElementId x : w) arr.push_back(L.label(x));
  return arr;
}

std::vector<Law> parse_law_list(const std::string& spec) {
  if (spec == "all") return {kLaws.begin(), kLaws.end()};
  std::vector<Law> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(parse_law(item));
  }
  if (out.empty()) bad_input("--laws is empty");
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

LatticeDocument parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte);
    bad_input("line " + std::to_string(line) + ", column " + std::to_string(column) + ": malformed JSON");
  }
  if (!j.is_object()) bad_input("document must be a JSON object");
  LatticeDocument doc;
  if (j.contains("name")) {
    if (!j["name"].is_string()) bad_input("\"name\" must be a string");
    doc.name = j["name"].get<std::string>();
  }
  if (!j.contains("elements") || !j["elements"].is_array()) bad_input("\"elements\" must be an array of labels");
  for (std::size_t i = 0; i < j["elements"].size(); ++i) {
    const auto& e = j["elements"][i];
    if (!e.is_string()) bad_input("elements[" + std::to_string(i) + "] is not a string");
    doc.elements.push_back(e.get<std::string>());
  }
  if (j.contains("order")) {
    if (!j["order"].is_array()) bad_input("\"order\" must be an array of [child, parent] pairs");
    for (std::size_t i = 0; i < j["order"].size(); ++i) {
      const auto& p = j["order"][i];
      if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
        bad_input("order[" + std::to_string(i) + "] is not a [child, parent] pair of labels");
      }
      doc.order.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
    }
  }
  return doc;
}

std::string render_document(const LatticeDocument& doc) {
  json order = json::array();
  for (const auto& [c, p] : doc.order) order.push_back({c, p});
  json j = {{"name", doc.name}, {"elements", doc.elements}, {"order", order}};
  return j.dump(2) + "\n";
}

FiniteLattice to_lattice(const LatticeDocument& doc) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < doc.elements.size(); ++i) index.emplace(doc.elements[i], i);
  std::vector<OrderPair> pairs;
  for (const auto& [c, p] : doc.order) {
    auto ci = index.find(c), pi = index.find(p);
    if (ci == index.end()) bad_input("order mentions unknown label '" + c + "'");
    if (pi == index.end()) bad_input("order mentions unknown label '" + p + "'");
    pairs.emplace_back(ci->second, pi->second);
  }
  return FiniteLattice::build(doc.elements, pairs);
}

LatticeDocument to_document(const FiniteLattice& L, std::string name) {
  LatticeDocument doc{std::move(name), L.labels(), {}};
  for (ElementId x : L.elements())
    for (ElementId y : L.upper_neighbors(x)) doc.order.emplace_back(L.label(x), L.label(y));
  return doc;
}

std::string hasse_dot(const FiniteLattice& L, std::string_view name) {
  std::map<unsigned, std::vector<ElementId>> ranks;
  for (ElementId x : L.elements()) ranks[L.height(x)].push_back(x);
  std::ostringstream os;
  os << "digraph " << quoted_id(name) << " {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (const auto& [h, xs] : ranks) {
    os << "  { rank=same;";
    for (ElementId x : xs) os << ' ' << quoted_id(L.label(x)) << ';';
    os << " }\n";
  }
  for (ElementId x : L.elements())
    for (ElementId y : L.upper_neighbors(x)) os << "  " << quoted_id(L.label(x)) << " -> " << quoted_id(L.label(y)) << ";\n";
  os << "}\n";
  return os.str();
}

Law parse_law(std::string_view name) {
  for (Law law : kLaws)
    if (to_string(law) == name) return law;
  bad_input("unknown law '" + std::string(name) + "'");
}

std::span<const Law> all_laws() { return kLaws; }

LawReport run_check(const FiniteLattice& L, Law law, unsigned n) {
  switch (law) {
    case Law::LatticeAxioms: return props::check_lattice_axioms(L);
    case Law::Distributive: return props::is_distributive(L);
    case Law::Modular: return props::is_modular(L);
    case Law::HeightLaw: return props::satisfies_height_law(L);
    case Law::Complemented: return props::is_complemented(L);
    case Law::Atomic: return props::is_atomic(L);
    case Law::Perspective: return props::is_perspective_lattice(L);
    case Law::TopHeight: {
      const unsigned h = L.height(L.top());
      return LawReport{law, h == n, h == n ? std::vector<ElementId>{} : std::vector{L.top()},
                       "top has height " + std::to_string(h)};
    }
    case Law::Spanning:
      if (!props::is_atomic(L).holds) return LawReport{law, false, {}, "lattice is not atomic"};
      return projective::check_spanning(L, n);
    case Law::P1:
    case Law::P2:
    case Law::P3ThirdPoint: {
      if (!projective::is_graded(L)) return LawReport{law, false, {}, "lattice is not graded"};
      const projective::GeometryView view(L);
      if (law == Law::P1) return projective::check_p1(view);
      if (law == Law::P2) return projective::check_p2(view);
      return projective::check_p3_third_point(view);
    }
  }
  bad_input("unsupported law");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite lattice laboratory: generate lattices, check laws, run the construction pipelines.", "qlat"};
  app.require_subcommand(1);

  std::string kind, input, laws = "all", format = "json", out_path, section;
  unsigned n = 0, q = 0;
  bool canonical = false;

  auto* gen = app.add_subcommand("gen", "Write a generated lattice document");
  gen->add_option("kind", kind, "boolean, subspace, m3, n5 or chain")
      ->required()
      ->check(CLI::IsMember({"boolean", "subspace", "m3", "n5", "chain"}));
  auto* gen_n = gen->add_option("--n", n, "rank, dimension or chain length");
  auto* gen_q = gen->add_option("--q", q, "prime field order");
  gen->add_option("--out", out_path, "output file (default stdout)");

  auto* check = app.add_subcommand("check", "Check laws on a lattice document");
  check->add_option("input", input, "document path, - for stdin")->required();
  check->add_option("--laws", laws, "comma-separated laws or 'all'");
  auto* check_n = check->add_option("--n", n, "depth for top-height and spanning (default h(top))");
  check->add_flag("--canonical", canonical, "omit timing");
  check->add_option("--out", out_path, "report file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Run a construction pipeline");
  verify->add_option("section", section, "s5 or s7")->required()->check(CLI::IsMember({"s5", "s7"}));
  verify->add_option("--n", n, "depth")->required();
  auto* verify_q = verify->add_option("--q", q, "prime field order (s7)");
  verify->add_flag("--canonical", canonical, "omit timing");
  verify->add_option("--out", out_path, "report file (default stdout)");

  auto* exp = app.add_subcommand("export", "Re-emit a lattice document");
  exp->add_option("input", input, "document path, - for stdin")->required();
  exp->add_option("--format", format, "hasse-dot or json")->check(CLI::IsMember({"hasse-dot", "json"}));
  exp->add_option("--out", out_path, "output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    if (gen->parsed()) {
      auto need = [&](CLI::Option* opt, const char* flag) {
        if (opt->count() == 0) bad_input("gen " + kind + " needs " + flag);
      };
      FiniteLattice L = [&] {
        if (kind == "boolean") return need(gen_n, "--n"), gen::boolean_lattice(n);
        if (kind == "subspace") return need(gen_n, "--n"), need(gen_q, "--q"), gen::subspace_lattice({n, q});
        if (kind == "chain") return need(gen_n, "--n"), gen::chain(n);
        if (kind == "m3") return gen::diamond_m3();
        return gen::pentagon_n5();
      }();
      std::string name = kind;
      if (gen_n->count() && kind != "m3" && kind != "n5") name += "-" + std::to_string(n);
      if (kind == "subspace") name += "-" + std::to_string(q);
      write_output(out_path, render_document(to_document(L, name)), out);
      return 0;
    }

    if (exp->parsed()) {
      const auto doc = parse_document(read_input(input));
      const FiniteLattice L = to_lattice(doc);
      write_output(out_path, format == "json" ? render_document(to_document(L, doc.name)) : hasse_dot(L, doc.name), out);
      return 0;
    }

    json report;
    report["command"] = args;
    bool passed = true;
    if (check->parsed()) {
      const auto selected = parse_law_list(laws);
      const auto doc = parse_document(read_input(input));
      const FiniteLattice L = to_lattice(doc);
      const unsigned depth = check_n->count() ? n : L.height(L.top());
      report["lattice"] = {{"name", doc.name}, {"size", L.size()}, {"height", L.height(L.top())}};
      json checks = json::array();
      for (Law law : selected) {
        const LawReport r = run_check(L, law, depth);
        passed = passed && r.holds;
        checks.push_back({{"law", std::string(to_string(law))},
                          {"holds", r.holds},
                          {"witness", witness_labels(L, r.witness)},
                          {"detail", r.detail}});
      }
      report["checks"] = checks;
    } else {
      if (section == "s7" && verify_q->count() == 0) bad_input("verify s7 needs --q");
      const auto r = section == "s5" ? construct::verify_section5(n) : construct::verify_section7(n, q);
      passed = r.passed();
      report["section"] = r.section;
      report["n"] = r.n;
      if (section == "s7") report["q"] = r.q;
      json steps = json::array();
      for (const auto& s : r.steps) steps.push_back({{"name", s.name}, {"passed", s.passed}, {"detail", s.detail}});
      report["steps"] = steps;
    }
    report["passed"] = passed;
    if (!canonical) report["timing"] = {{"seconds", seconds_since(start)}};
    write_output(out_path, report.dump(2) + "\n", out);
    return passed ? 0 : 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace qlat::cli
