#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "wiseowl/graph.hpp"

namespace wiseowl::rdf {

enum class Syntax { kTurtle, kNTriples };

std::string_view syntax_name(Syntax s);
// Accepts "turtle" / "ntriples" (and the usual aliases "ttl", "nt").
std::optional<Syntax> syntax_from_name(std::string_view name);

// Guesses the serialization from the file name and the first bytes of the
// document. Throws UnrecognizedSyntax for RDF/XML and JSON-LD input.
Syntax detect_syntax(std::string_view filename, std::string_view head);

struct ParseOptions {
  // Base for resolving relative IRIs when the document has no @base.
  std::string base_iri = "file:///stdin";
};

using TripleSink =
    std::function<void(const Term &, const Term &, const Term &)>;

// Streams triples out of `in` as they are recognized. Blank-node labels are
// renamed to document-scoped ids (b0, b1, ...). Prefix declarations are
// reported through `on_prefix` when given.
void parse_triples(
    std::istream &in, Syntax syntax, const ParseOptions &options,
    const TripleSink &sink,
    const std::function<void(const std::string &, const std::string &)>
        &on_prefix = {});

TripleGraph parse(std::istream &in, Syntax syntax,
                  const ParseOptions &options = {});

// Opens and parses a file; syntax is detected when not given.
TripleGraph parse_file(const std::filesystem::path &path,
                       std::optional<Syntax> syntax = std::nullopt);

// Canonical N-Triples: one statement per line, sorted, LF endings.
void write_ntriples(std::ostream &out, const TripleGraph &graph);
std::string to_ntriples(const TripleGraph &graph);

// RFC 3986 reference resolution.
std::string resolve_iri(std::string_view base, std::string_view reference);

}  // namespace wiseowl::rdf
