// Streaming reader for Turtle 1.1 and N-Triples 1.1 (N-Quads tolerated: the
// graph label is read and discarded).

#include <cstdint>
#include <cstring>
#include <istream>
#include <string>
#include <unordered_map>
#include <vector>

#include "wiseowl/error.hpp"
#include "wiseowl/parser.hpp"
#include "wiseowl/vocab.hpp"

namespace wiseowl::rdf {

namespace {

// Buffered byte source with bounded lookahead and line/column tracking.
class Source {
 public:
  explicit Source(std::istream &in) : in_(in), buf_(kChunk) {}

  int peek(std::size_t k = 0) {
    if (pos_ + k >= end_) fill(k + 1);
    return pos_ + k < end_ ? static_cast<unsigned char>(buf_[pos_ + k]) : -1;
  }

  int get() {
    if (pos_ >= end_) fill(1);
    if (pos_ >= end_) return -1;
    char c = buf_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return static_cast<unsigned char>(c);
  }

  bool at_end() { return peek() < 0; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static constexpr std::size_t kChunk = 1 << 16;

  void fill(std::size_t want) {
    if (eof_) return;
    if (pos_ > 0) {
      std::memmove(buf_.data(), buf_.data() + pos_, end_ - pos_);
      end_ -= pos_;
      pos_ = 0;
    }
    while (end_ < want && !eof_) {
      if (buf_.size() - end_ < kChunk / 2) buf_.resize(buf_.size() + kChunk);
      in_.read(buf_.data() + end_,
               static_cast<std::streamsize>(buf_.size() - end_));
      auto got = static_cast<std::size_t>(in_.gcount());
      end_ += got;
      if (got == 0) {
        if (in_.bad()) throw IoError("read failure");
        eof_ = true;
      }
    }
  }

  std::istream &in_;
  std::vector<char> buf_;
  std::size_t pos_ = 0;
  std::size_t end_ = 0;
  bool eof_ = false;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

bool is_alpha(int c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(int c) { return c >= '0' && c <= '9'; }
bool is_hex(int c) {
  return is_digit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}
// Multi-byte UTF-8 sequences are accepted wholesale as name characters.
bool is_pn_chars_base(int c) { return is_alpha(c) || c >= 0x80; }
bool is_pn_chars_u(int c) { return is_pn_chars_base(c) || c == '_'; }
bool is_pn_chars(int c) { return is_pn_chars_u(c) || c == '-' || is_digit(c); }

void append_utf8(std::string &out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

class Parser {
 public:
  Parser(std::istream &in, Syntax syntax, const ParseOptions &options,
         const TripleSink &sink,
         const std::function<void(const std::string &, const std::string &)>
             &on_prefix)
      : src_(in),
        ntriples_(syntax == Syntax::kNTriples),
        base_(options.base_iri),
        sink_(sink),
        on_prefix_(on_prefix),
        rdf_type_(Term::Iri(std::string(vocab::rdf::kType))),
        rdf_first_(Term::Iri(std::string(vocab::rdf::kFirst))),
        rdf_rest_(Term::Iri(std::string(vocab::rdf::kRest))),
        rdf_nil_(Term::Iri(std::string(vocab::rdf::kNil))) {}

  void run() {
    while (true) {
      skip_ws();
      if (src_.at_end()) break;
      if (ntriples_) {
        ntriples_statement();
      } else {
        turtle_statement();
      }
    }
  }

 private:
  [[noreturn]] void fail(const std::string &msg) {
    throw SyntaxError(src_.line(), src_.column(), msg);
  }

  void expect(int c, const char *what) {
    if (src_.peek() != c) fail(std::string("expected ") + what);
    src_.get();
  }

  void skip_ws() {
    while (true) {
      int c = src_.peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        src_.get();
      } else if (c == '#') {
        while (c >= 0 && c != '\n') {
          src_.get();
          c = src_.peek();
        }
      } else {
        return;
      }
    }
  }

  void emit(const Term &s, const Term &p, const Term &o) {
    if (sink_) sink_(s, p, o);
  }

  // --- statements ---------------------------------------------------------

  void ntriples_statement() {
    Term s = src_.peek() == '<' ? Term::Iri(iriref(false)) : blank_label();
    skip_ws_inline();
    if (src_.peek() != '<') fail("expected predicate IRI");
    Term p = Term::Iri(iriref(false));
    skip_ws_inline();
    Term o;
    int c = src_.peek();
    if (c == '<') {
      o = Term::Iri(iriref(false));
    } else if (c == '_') {
      o = blank_label();
    } else if (c == '"') {
      o = literal();
    } else {
      fail("expected object");
    }
    skip_ws_inline();
    // N-Quads graph label, ignored.
    if (src_.peek() == '<') {
      iriref(false);
      skip_ws_inline();
    } else if (src_.peek() == '_') {
      blank_label();
      skip_ws_inline();
    }
    expect('.', "'.' at end of statement");
    skip_ws_inline();
    int e = src_.peek();
    if (e == '#') {
      while (e >= 0 && e != '\n') {
        src_.get();
        e = src_.peek();
      }
    }
    if (e >= 0 && e != '\n' && e != '\r') fail("trailing content after '.'");
    emit(s, p, o);
  }

  void skip_ws_inline() {
    while (src_.peek() == ' ' || src_.peek() == '\t') src_.get();
  }

  void turtle_statement() {
    int c = src_.peek();
    if (c == '@') {
      directive_at();
      return;
    }
    if (keyword_ahead("PREFIX")) {
      consume_n(6);
      prefix_decl();
      return;
    }
    if (keyword_ahead("BASE")) {
      consume_n(4);
      skip_ws();
      base_ = resolve(iriref(true));
      return;
    }
    triples();
    skip_ws();
    expect('.', "'.' at end of triples");
  }

  // Case-insensitive SPARQL-style keyword followed by whitespace.
  bool keyword_ahead(const char *kw) {
    std::size_t n = std::strlen(kw);
    for (std::size_t i = 0; i < n; ++i) {
      int c = src_.peek(i);
      if (c < 0 || std::toupper(c) != kw[i]) return false;
    }
    int after = src_.peek(n);
    return after == ' ' || after == '\t' || after == '\n' || after == '\r' ||
           after == '<' || after == '#';
  }

  void consume_n(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) src_.get();
  }

  void directive_at() {
    src_.get();  // '@'
    std::string word;
    while (is_alpha(src_.peek())) word += static_cast<char>(src_.get());
    if (word == "prefix") {
      prefix_decl();
      skip_ws();
      expect('.', "'.' after @prefix");
    } else if (word == "base") {
      skip_ws();
      base_ = resolve(iriref(true));
      skip_ws();
      expect('.', "'.' after @base");
    } else {
      fail("unknown directive @" + word);
    }
  }

  void prefix_decl() {
    skip_ws();
    std::string prefix;
    if (src_.peek() != ':') prefix = pn_prefix();
    expect(':', "':' in prefix declaration");
    skip_ws();
    std::string iri = resolve(iriref(true));
    prefixes_[prefix] = iri;
    if (on_prefix_) on_prefix_(prefix, iri);
  }

  void triples() {
    int c = src_.peek();
    if (c == '[') {
      Term subject = blank_property_list();
      skip_ws();
      if (src_.peek() != '.') predicate_object_list(subject);
      return;
    }
    Term subject = subject_term();
    skip_ws();
    predicate_object_list(subject);
  }

  Term subject_term() {
    int c = src_.peek();
    if (c == '<') return Term::Iri(resolve(iriref(true)));
    if (c == '_') return blank_label();
    if (c == '(') return collection();
    if (c == '"' || c == '\'' || is_digit(c) || c == '+' || c == '-') {
      fail("literal not allowed as subject");
    }
    return Term::Iri(prefixed_name());
  }

  void predicate_object_list(const Term &subject) {
    while (true) {
      Term predicate = verb();
      skip_ws();
      object_list(subject, predicate);
      skip_ws();
      if (src_.peek() != ';') return;
      while (src_.peek() == ';') {
        src_.get();
        skip_ws();
      }
      int c = src_.peek();
      if (c == '.' || c == ']' || c < 0) return;
    }
  }

  Term verb() {
    if (src_.peek() == 'a') {
      int next = src_.peek(1);
      if (!is_pn_chars(next) && next != ':' && next != '.') {
        src_.get();
        return rdf_type_;
      }
    }
    if (src_.peek() == '<') return Term::Iri(resolve(iriref(true)));
    return Term::Iri(prefixed_name());
  }

  void object_list(const Term &subject, const Term &predicate) {
    while (true) {
      Term o = object();
      emit(subject, predicate, o);
      skip_ws();
      if (src_.peek() != ',') return;
      src_.get();
      skip_ws();
    }
  }

  Term object() {
    int c = src_.peek();
    if (c == '<') return Term::Iri(resolve(iriref(true)));
    if (c == '_') return blank_label();
    if (c == '[') return blank_property_list();
    if (c == '(') return collection();
    if (c == '"' || c == '\'') return literal();
    if (is_digit(c) || c == '+' || c == '-' ||
        (c == '.' && is_digit(src_.peek(1)))) {
      return numeric();
    }
    if (word_ahead("true")) {
      consume_n(4);
      return Term::TypedLiteral("true", std::string(vocab::xsd::kBoolean));
    }
    if (word_ahead("false")) {
      consume_n(5);
      return Term::TypedLiteral("false", std::string(vocab::xsd::kBoolean));
    }
    return Term::Iri(prefixed_name());
  }

  bool word_ahead(const char *w) {
    std::size_t n = std::strlen(w);
    for (std::size_t i = 0; i < n; ++i) {
      if (src_.peek(i) != w[i]) return false;
    }
    int after = src_.peek(n);
    return !is_pn_chars(after) && after != ':';
  }

  Term blank_property_list() {
    expect('[', "'['");
    Term node = fresh_blank();
    skip_ws();
    if (src_.peek() != ']') {
      predicate_object_list(node);
      skip_ws();
    }
    expect(']', "']'");
    return node;
  }

  Term collection() {
    expect('(', "'('");
    skip_ws();
    std::vector<Term> items;
    while (src_.peek() != ')') {
      if (src_.at_end()) fail("unterminated collection");
      items.push_back(object());
      skip_ws();
    }
    src_.get();
    if (items.empty()) return rdf_nil_;
    Term head = fresh_blank();
    Term cell = head;
    for (std::size_t i = 0; i < items.size(); ++i) {
      emit(cell, rdf_first_, items[i]);
      if (i + 1 == items.size()) {
        emit(cell, rdf_rest_, rdf_nil_);
      } else {
        Term next = fresh_blank();
        emit(cell, rdf_rest_, next);
        cell = std::move(next);
      }
    }
    return head;
  }

  // --- terminals ----------------------------------------------------------

  Term fresh_blank() { return Term::Blank("b" + std::to_string(next_blank_++)); }

  Term blank_label() {
    if (src_.peek() != '_' || src_.peek(1) != ':') fail("expected blank node");
    src_.get();
    src_.get();
    std::string label;
    int c = src_.peek();
    if (!(is_pn_chars_u(c) || is_digit(c))) fail("bad blank node label");
    label += static_cast<char>(src_.get());
    while (true) {
      c = src_.peek();
      if (is_pn_chars(c)) {
        label += static_cast<char>(src_.get());
      } else if (c == '.') {
        std::size_t k = 0;
        while (src_.peek(k) == '.') ++k;
        if (!is_pn_chars(src_.peek(k))) break;
        for (std::size_t i = 0; i < k; ++i) label += static_cast<char>(src_.get());
      } else {
        break;
      }
    }
    auto [it, inserted] = blank_ids_.try_emplace(label, 0);
    if (inserted) it->second = next_blank_++;
    return Term::Blank("b" + std::to_string(it->second));
  }

  std::uint32_t hex_value(int digits) {
    std::uint32_t v = 0;
    for (int i = 0; i < digits; ++i) {
      int c = src_.get();
      if (!is_hex(c)) fail("bad hex escape");
      v = v * 16 + static_cast<std::uint32_t>(
                       is_digit(c) ? c - '0' : (std::tolower(c) - 'a' + 10));
    }
    return v;
  }

  std::string iriref(bool allow_relative) {
    expect('<', "'<'");
    std::string out;
    while (true) {
      int c = src_.get();
      if (c < 0) fail("unterminated IRI");
      if (c == '>') break;
      if (c == '\\') {
        int e = src_.get();
        if (e == 'u') {
          append_utf8(out, hex_value(4));
        } else if (e == 'U') {
          append_utf8(out, hex_value(8));
        } else {
          fail("bad escape in IRI");
        }
        continue;
      }
      if (c <= 0x20 || c == '<' || c == '"' || c == '{' || c == '}' ||
          c == '|' || c == '^' || c == '`') {
        fail("illegal character in IRI");
      }
      out += static_cast<char>(c);
    }
    if (!allow_relative && !is_absolute_iri(out)) fail("relative IRI: " + out);
    return out;
  }

  std::string resolve(const std::string &iri) {
    if (is_absolute_iri(iri)) return iri;
    return resolve_iri(base_, iri);
  }

  std::string pn_prefix() {
    std::string out;
    int c = src_.peek();
    if (!is_pn_chars_base(c)) fail("bad prefix name");
    out += static_cast<char>(src_.get());
    while (true) {
      c = src_.peek();
      if (is_pn_chars(c)) {
        out += static_cast<char>(src_.get());
      } else if (c == '.') {
        std::size_t k = 0;
        while (src_.peek(k) == '.') ++k;
        if (!is_pn_chars(src_.peek(k))) break;
        for (std::size_t i = 0; i < k; ++i) out += static_cast<char>(src_.get());
      } else {
        break;
      }
    }
    return out;
  }

  static bool is_local_escape(int c) {
    return c >= 0 && std::strchr("_~.-!$&'()*+,;=/?#@%", c) != nullptr;
  }

  // Is `c` (at lookahead k) a character that may continue a local name?
  bool local_continues(std::size_t k) {
    int c = src_.peek(k);
    return is_pn_chars(c) || c == ':' || c == '%' || c == '\\';
  }

  void local_char(std::string &out) {
    int c = src_.peek();
    if (c == '%') {
      src_.get();
      int h1 = src_.get();
      int h2 = src_.get();
      if (!is_hex(h1) || !is_hex(h2)) fail("bad percent escape");
      out += '%';
      out += static_cast<char>(h1);
      out += static_cast<char>(h2);
    } else if (c == '\\') {
      src_.get();
      int e = src_.get();
      if (!is_local_escape(e)) fail("bad local name escape");
      out += static_cast<char>(e);
    } else {
      out += static_cast<char>(src_.get());
    }
  }

  std::string prefixed_name() {
    std::string prefix;
    int c = src_.peek();
    if (c != ':') {
      if (!is_pn_chars_base(c)) fail("unexpected character");
      prefix = pn_prefix();
    }
    expect(':', "':' in prefixed name");
    std::string local;
    c = src_.peek();
    if (is_pn_chars_u(c) || c == ':' || is_digit(c) || c == '%' || c == '\\') {
      local_char(local);
      while (true) {
        if (local_continues(0)) {
          local_char(local);
        } else if (src_.peek() == '.') {
          std::size_t k = 0;
          while (src_.peek(k) == '.') ++k;
          if (!local_continues(k)) break;
          for (std::size_t i = 0; i < k; ++i) local += static_cast<char>(src_.get());
        } else {
          break;
        }
      }
    }
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) fail("undeclared prefix '" + prefix + ":'");
    return it->second + local;
  }

  void escape_char(std::string &out) {
    int e = src_.get();
    switch (e) {
      case 't': out += '\t'; break;
      case 'b': out += '\b'; break;
      case 'n': out += '\n'; break;
      case 'r': out += '\r'; break;
      case 'f': out += '\f'; break;
      case '"': out += '"'; break;
      case '\'': out += '\''; break;
      case '\\': out += '\\'; break;
      case 'u': append_utf8(out, hex_value(4)); break;
      case 'U': append_utf8(out, hex_value(8)); break;
      default: fail("bad string escape");
    }
  }

  std::string string_body() {
    int q = src_.get();
    bool long_form = !ntriples_ && src_.peek() == q && src_.peek(1) == q;
    std::string out;
    if (long_form) {
      src_.get();
      src_.get();
      while (true) {
        int c = src_.peek();
        if (c < 0) fail("unterminated long string");
        if (c == q && src_.peek(1) == q && src_.peek(2) == q) {
          consume_n(3);
          // """a"""" : quotes directly before the terminator belong to the body.
          while (src_.peek() == q) {
            out += static_cast<char>(q);
            src_.get();
          }
          return out;
        }
        src_.get();
        if (c == '\\') {
          escape_char(out);
        } else {
          out += static_cast<char>(c);
        }
      }
    }
    if (ntriples_ && q != '"') fail("N-Triples literals use double quotes");
    while (true) {
      int c = src_.get();
      if (c < 0 || c == '\n' || c == '\r') fail("unterminated string");
      if (c == q) return out;
      if (c == '\\') {
        escape_char(out);
      } else {
        out += static_cast<char>(c);
      }
    }
  }

  Term literal() {
    std::string lexical = string_body();
    int c = src_.peek();
    if (c == '@') {
      src_.get();
      std::string tag;
      if (!is_alpha(src_.peek())) fail("bad language tag");
      while (is_alpha(src_.peek())) {
        tag += static_cast<char>(std::tolower(src_.get()));
      }
      while (src_.peek() == '-') {
        tag += static_cast<char>(src_.get());
        if (!(is_alpha(src_.peek()) || is_digit(src_.peek()))) {
          fail("bad language tag");
        }
        while (is_alpha(src_.peek()) || is_digit(src_.peek())) {
          tag += static_cast<char>(std::tolower(src_.get()));
        }
      }
      return Term::LangLiteral(std::move(lexical), std::move(tag));
    }
    if (c == '^' && src_.peek(1) == '^') {
      src_.get();
      src_.get();
      std::string dt;
      if (src_.peek() == '<') {
        dt = ntriples_ ? iriref(false) : resolve(iriref(true));
      } else if (!ntriples_) {
        dt = prefixed_name();
      } else {
        fail("expected datatype IRI");
      }
      // xsd:string is the implicit type of a simple literal.
      if (dt == vocab::xsd::kString) return Term::Literal(std::move(lexical));
      return Term::TypedLiteral(std::move(lexical), std::move(dt));
    }
    return Term::Literal(std::move(lexical));
  }

  Term numeric() {
    std::string text;
    if (src_.peek() == '+' || src_.peek() == '-') {
      text += static_cast<char>(src_.get());
    }
    bool digits_before = false;
    while (is_digit(src_.peek())) {
      text += static_cast<char>(src_.get());
      digits_before = true;
    }
    bool decimal = false;
    if (src_.peek() == '.' && is_digit(src_.peek(1))) {
      decimal = true;
      text += static_cast<char>(src_.get());
      while (is_digit(src_.peek())) text += static_cast<char>(src_.get());
    } else if (!digits_before) {
      fail("bad numeric literal");
    }
    int c = src_.peek();
    if (c == 'e' || c == 'E') {
      std::size_t k = 1;
      if (src_.peek(k) == '+' || src_.peek(k) == '-') ++k;
      if (is_digit(src_.peek(k))) {
        for (std::size_t i = 0; i < k; ++i) text += static_cast<char>(src_.get());
        while (is_digit(src_.peek())) text += static_cast<char>(src_.get());
        return Term::TypedLiteral(std::move(text),
                                  std::string(vocab::xsd::kDouble));
      }
      if (!digits_before && !decimal) fail("bad numeric literal");
    }
    return Term::TypedLiteral(
        std::move(text), std::string(decimal ? vocab::xsd::kDecimal
                                             : vocab::xsd::kInteger));
  }

  Source src_;
  bool ntriples_;
  std::string base_;
  const TripleSink &sink_;
  const std::function<void(const std::string &, const std::string &)>
      &on_prefix_;
  std::unordered_map<std::string, std::string> prefixes_;
  std::unordered_map<std::string, std::uint64_t> blank_ids_;
  std::uint64_t next_blank_ = 0;
  const Term rdf_type_;
  const Term rdf_first_;
  const Term rdf_rest_;
  const Term rdf_nil_;
};

}  // namespace

void parse_triples(
    std::istream &in, Syntax syntax, const ParseOptions &options,
    const TripleSink &sink,
    const std::function<void(const std::string &, const std::string &)>
        &on_prefix) {
  Parser parser(in, syntax, options, sink, on_prefix);
  parser.run();
}

TripleGraph parse(std::istream &in, Syntax syntax,
                  const ParseOptions &options) {
  GraphBuilder builder;
  parse_triples(
      in, syntax, options,
      [&](const Term &s, const Term &p, const Term &o) { builder.add(s, p, o); },
      [&](const std::string &prefix, const std::string &iri) {
        builder.add_prefix(prefix, iri);
      });
  return std::move(builder).build();
}

}  // namespace wiseowl::rdf
