#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "wiseowl/term.hpp"

namespace wiseowl::rdf {

// Immutable, indexed set of triples.
//
// Terms live in a sorted dictionary and triples are stored three times as
// id tuples: SPO, POS and OSP order, each with a dense offset table so that
// lookups by subject, predicate or object are a single array access. All
// spans returned by the accessors point into the graph and stay valid as
// long as the graph does.
class TripleGraph {
 public:
  TripleGraph() = default;

  std::size_t size() const { return spo_.size(); }
  bool empty() const { return spo_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  const Term &term(TermId id) const { return terms_[raw(id)]; }
  std::optional<TermId> find(const Term &t) const;
  Triple materialize(const TripleIds &t) const;

  // All triples in (s, p, o) order.
  std::span<const TripleIds> triples() const { return spo_; }

  std::span<const TripleIds> with_subject(TermId s) const;
  std::span<const TripleIds> with_subject_predicate(TermId s, TermId p) const;
  // (p, o, s) order.
  std::span<const TripleIds> with_predicate(TermId p) const;
  std::span<const TripleIds> with_predicate_object(TermId p, TermId o) const;
  // (o, s, p) order.
  std::span<const TripleIds> with_object(TermId o) const;

  bool contains(TermId s, TermId p, TermId o) const;

  // Pattern match; unbound positions are wildcards. Results are in (s, p, o)
  // order regardless of which index served the query.
  std::vector<TripleIds> match_ids(std::optional<TermId> s,
                                   std::optional<TermId> p,
                                   std::optional<TermId> o) const;
  std::vector<Triple> match(const std::optional<Term> &s,
                            const std::optional<Term> &p,
                            const std::optional<Term> &o) const;

  std::vector<Term> objects(const Term &s, const Term &p) const;
  std::vector<Term> subjects(const Term &p, const Term &o) const;

  const std::map<std::string, std::string> &prefixes() const {
    return prefixes_;
  }

 private:
  friend class GraphBuilder;

  std::vector<Term> terms_;
  std::vector<TripleIds> spo_;
  std::vector<TripleIds> pos_;
  std::vector<TripleIds> osp_;
  // offsets_x_[id] .. offsets_x_[id + 1] is the range for that term.
  std::vector<std::uint32_t> s_offsets_;
  std::vector<std::uint32_t> p_offsets_;
  std::vector<std::uint32_t> o_offsets_;
  std::map<std::string, std::string> prefixes_;
};

// Accumulates triples and produces a TripleGraph. Duplicates collapse.
class GraphBuilder {
 public:
  void add(const Term &s, const Term &p, const Term &o);
  void add(const Triple &t) { add(t.subject, t.predicate, t.object); }
  void add_prefix(const std::string &prefix, const std::string &iri) {
    prefixes_[prefix] = iri;
  }
  std::size_t pending() const { return triples_.size(); }

  TripleGraph build() &&;

 private:
  std::uint32_t intern(const Term &t);

  std::vector<Term> terms_;
  std::unordered_map<Term, std::uint32_t> lookup_;
  std::vector<TripleIds> triples_;
  std::map<std::string, std::string> prefixes_;
};

// Convenience: build a graph from an explicit triple list.
TripleGraph make_graph(const std::vector<Triple> &triples);

}  // namespace wiseowl::rdf
