#include <algorithm>
#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "wiseowl/error.hpp"
#include "wiseowl/parser.hpp"

namespace wiseowl::rdf {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string extension_of(std::string_view filename) {
  auto slash = filename.find_last_of("/\\");
  auto name = slash == std::string_view::npos ? filename
                                              : filename.substr(slash + 1);
  auto dot = name.rfind('.');
  if (dot == std::string_view::npos || dot == 0) return {};
  return lower(name.substr(dot + 1));
}

std::string_view trim_left(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  return s;
}

bool has_turtle_directive(std::string_view head) {
  std::istringstream lines{std::string(head)};
  std::string line;
  while (std::getline(lines, line)) {
    auto t = trim_left(line);
    if (t.starts_with("@prefix") || t.starts_with("@base")) return true;
    auto u = lower(t.substr(0, std::min<std::size_t>(t.size(), 7)));
    if (u.starts_with("prefix ") || u.starts_with("base ")) return true;
  }
  return false;
}

bool looks_like_xml_or_json(std::string_view head) {
  auto t = trim_left(head);
  if (t.starts_with("\xEF\xBB\xBF")) t = trim_left(t.substr(3));
  return t.starts_with("<?xml") || t.starts_with("<rdf:RDF") ||
         t.starts_with("<!DOCTYPE") || t.starts_with("{");
}

// Every complete, non-blank, non-comment line parses as an N-Triples
// statement.
bool all_lines_ntriples(std::string_view head) {
  std::string_view body = head;
  // A sample cut mid-line ends in a fragment; drop it.
  if (!body.empty() && body.back() != '\n') {
    auto nl = body.rfind('\n');
    body = nl == std::string_view::npos ? std::string_view{}
                                        : body.substr(0, nl + 1);
  }
  std::istringstream lines{std::string(body)};
  std::string line;
  std::size_t statements = 0;
  while (std::getline(lines, line)) {
    auto t = trim_left(line);
    if (t.empty() || t.front() == '#') continue;
    std::istringstream one{std::string(t)};
    try {
      parse_triples(one, Syntax::kNTriples, {}, {});
    } catch (const Error &) {
      return false;
    }
    ++statements;
  }
  return statements > 0;
}

constexpr const char *kPreconvert =
    "; convert the ontology to Turtle first (for example with ROBOT: "
    "`robot convert -i in.owl -o out.ttl`, or rdflib/riot)";

}  // namespace

std::string_view syntax_name(Syntax s) {
  return s == Syntax::kTurtle ? "turtle" : "ntriples";
}

std::optional<Syntax> syntax_from_name(std::string_view name) {
  auto n = lower(name);
  if (n == "turtle" || n == "ttl") return Syntax::kTurtle;
  if (n == "ntriples" || n == "nt" || n == "n-triples" || n == "nquads" ||
      n == "nq") {
    return Syntax::kNTriples;
  }
  return std::nullopt;
}

Syntax detect_syntax(std::string_view filename, std::string_view head) {
  const std::string ext = extension_of(filename);

  if (ext == "rdf" || ext == "xml" || ext == "owx" || ext == "rdfs") {
    throw UnrecognizedSyntax("'" + std::string(filename) +
                             "' looks like RDF/XML, which is not supported" +
                             kPreconvert);
  }
  if (ext == "jsonld" || ext == "json") {
    throw UnrecognizedSyntax("'" + std::string(filename) +
                             "' looks like JSON-LD, which is not supported" +
                             kPreconvert);
  }
  if (ext == "ttl" || ext == "turtle") return Syntax::kTurtle;
  if (ext == "nt" || ext == "nq" || ext == "ntriples") return Syntax::kNTriples;

  if (looks_like_xml_or_json(head) || (ext == "owl" && !head.empty() &&
                                       trim_left(head).starts_with("<"))) {
    if (!has_turtle_directive(head) && !all_lines_ntriples(head)) {
      throw UnrecognizedSyntax(
          "'" + std::string(filename) +
          "' is RDF/XML or JSON-LD (or OWL/XML), which is not supported" +
          kPreconvert);
    }
  }
  if (has_turtle_directive(head)) return Syntax::kTurtle;
  if (all_lines_ntriples(head)) return Syntax::kNTriples;
  if (ext == "owl" && head.empty()) {
    throw UnrecognizedSyntax("'" + std::string(filename) +
                             "': .owl files are usually RDF/XML" + kPreconvert);
  }
  return Syntax::kTurtle;
}

TripleGraph parse_file(const std::filesystem::path &path,
                       std::optional<Syntax> syntax) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  if (!syntax) {
    std::string head(1024, '\0');
    in.read(head.data(), static_cast<std::streamsize>(head.size()));
    head.resize(static_cast<std::size_t>(in.gcount()));
    syntax = detect_syntax(path.string(), head);
    in.clear();
    in.seekg(0);
  }
  ParseOptions options;
  std::error_code ec;
  auto abs = std::filesystem::absolute(path, ec);
  options.base_iri = "file://" + (ec ? path : abs).generic_string();
  return parse(in, *syntax, options);
}

void write_ntriples(std::ostream &out, const TripleGraph &graph) {
  std::vector<std::string> lines;
  lines.reserve(graph.size());
  for (const auto &t : graph.triples()) {
    std::string line = to_ntriples(graph.term(t.s));
    line += ' ';
    line += to_ntriples(graph.term(t.p));
    line += ' ';
    line += to_ntriples(graph.term(t.o));
    line += " .\n";
    lines.push_back(std::move(line));
  }
  std::sort(lines.begin(), lines.end());
  for (const auto &l : lines) out << l;
}

std::string to_ntriples(const TripleGraph &graph) {
  std::ostringstream out;
  write_ntriples(out, graph);
  return out.str();
}

}  // namespace wiseowl::rdf
