#include "wiseowl/term.hpp"

#include <cstdio>

namespace wiseowl::rdf {

Term Term::Iri(std::string iri) {
  return Term{TermKind::kIri, std::move(iri), std::nullopt, std::nullopt};
}

Term Term::Blank(std::string id) {
  return Term{TermKind::kBlank, std::move(id), std::nullopt, std::nullopt};
}

Term Term::Literal(std::string lexical) {
  return Term{TermKind::kLiteral, std::move(lexical), std::nullopt,
              std::nullopt};
}

Term Term::TypedLiteral(std::string lexical, std::string datatype) {
  return Term{TermKind::kLiteral, std::move(lexical), std::move(datatype),
              std::nullopt};
}

Term Term::LangLiteral(std::string lexical, std::string language) {
  return Term{TermKind::kLiteral, std::move(lexical), std::nullopt,
              std::move(language)};
}

bool is_absolute_iri(std::string_view iri) {
  // scheme = ALPHA *( ALPHA / DIGIT / "+" / "-" / "." ) ":"
  if (iri.empty()) return false;
  auto alpha = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  };
  if (!alpha(iri[0])) return false;
  for (std::size_t i = 1; i < iri.size(); ++i) {
    char c = iri[i];
    if (c == ':') return true;
    if (!(alpha(c) || (c >= '0' && c <= '9') || c == '+' || c == '-' ||
          c == '.')) {
      return false;
    }
  }
  return false;
}

bool Term::valid() const {
  switch (kind) {
    case TermKind::kIri:
      return is_absolute_iri(value) && !datatype && !language;
    case TermKind::kBlank:
      return !value.empty() && !datatype && !language;
    case TermKind::kLiteral:
      return !(datatype && language);
  }
  return false;
}

std::strong_ordering Term::operator<=>(const Term &other) const {
  if (auto c = value <=> other.value; c != 0) return c;
  if (auto c = kind <=> other.kind; c != 0) return c;
  if (auto c = datatype <=> other.datatype; c != 0) return c;
  return language <=> other.language;
}

std::size_t TermHash::operator()(const Term &t) const noexcept {
  std::size_t h = std::hash<std::string>{}(t.value);
  h ^= static_cast<std::size_t>(t.kind) + 0x9e3779b97f4a7c15ULL + (h << 6) +
       (h >> 2);
  if (t.datatype) {
    h ^= std::hash<std::string>{}(*t.datatype) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
  }
  if (t.language) {
    h ^= std::hash<std::string>{}(*t.language) + 0x7f4a7c159e3779b9ULL +
         (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

void append_escaped_iri(std::string &out, std::string_view iri) {
  for (unsigned char c : iri) {
    // Characters not allowed raw inside an N-Triples IRIREF.
    if (c <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' ||
        c == '}' || c == '|' || c == '^' || c == '`' || c == '\\') {
      char buf[12];
      std::snprintf(buf, sizeof buf, "\\u%04X", c);
      out += buf;
    } else {
      out += static_cast<char>(c);
    }
  }
}

void append_escaped_literal(std::string &out, std::string_view text) {
  for (unsigned char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      default:
        if (c < 0x20 || c == 0x7f) {
          char buf[12];
          std::snprintf(buf, sizeof buf, "\\u%04X", c);
          out += buf;
        } else {
          out += static_cast<char>(c);
        }
    }
  }
}

}  // namespace

std::string to_ntriples(const Term &term) {
  std::string out;
  switch (term.kind) {
    case TermKind::kIri:
      out += '<';
      append_escaped_iri(out, term.value);
      out += '>';
      break;
    case TermKind::kBlank:
      out += "_:";
      out += term.value;
      break;
    case TermKind::kLiteral:
      out += '"';
      append_escaped_literal(out, term.value);
      out += '"';
      if (term.language) {
        out += '@';
        out += *term.language;
      } else if (term.datatype) {
        out += "^^<";
        append_escaped_iri(out, *term.datatype);
        out += '>';
      }
      break;
  }
  return out;
}

}  // namespace wiseowl::rdf
