#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace wiseowl::rdf {

enum class TermKind : std::uint8_t { kIri, kBlank, kLiteral };

// An RDF term. For literals, at most one of datatype / language is set;
// plain literals carry neither.
struct Term {
  TermKind kind = TermKind::kIri;
  std::string value;
  std::optional<std::string> datatype;
  std::optional<std::string> language;

  static Term Iri(std::string iri);
  static Term Blank(std::string id);
  static Term Literal(std::string lexical);
  static Term TypedLiteral(std::string lexical, std::string datatype);
  static Term LangLiteral(std::string lexical, std::string language);

  bool is_iri() const { return kind == TermKind::kIri; }
  bool is_blank() const { return kind == TermKind::kBlank; }
  bool is_literal() const { return kind == TermKind::kLiteral; }

  // Checks the kind-specific invariants (absolute IRI, literal tags).
  bool valid() const;

  bool operator==(const Term &) const = default;
  // Ordered by value first so sorted output reads alphabetically.
  std::strong_ordering operator<=>(const Term &other) const;
};

// N-Triples rendering of a single term.
std::string to_ntriples(const Term &term);

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  bool operator==(const Triple &) const = default;
  auto operator<=>(const Triple &) const = default;
};

struct TermHash {
  std::size_t operator()(const Term &t) const noexcept;
};

// Dense index of a term inside one TripleGraph. Ids are assigned in Term
// order, so comparing ids compares terms.
enum class TermId : std::uint32_t {};

inline std::uint32_t raw(TermId id) { return static_cast<std::uint32_t>(id); }

struct TripleIds {
  TermId s;
  TermId p;
  TermId o;

  bool operator==(const TripleIds &) const = default;
  auto operator<=>(const TripleIds &) const = default;
};

// True when `iri` has a scheme separator, i.e. is absolute.
bool is_absolute_iri(std::string_view iri);

}  // namespace wiseowl::rdf

template <>
struct std::hash<wiseowl::rdf::Term> : wiseowl::rdf::TermHash {};
