#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "wiseowl/graph.hpp"

namespace wiseowl {

using rdf::Term;
using rdf::TermId;
using rdf::TripleGraph;

// Sorted, duplicate-free list of graph term ids.
using IdSet = std::vector<TermId>;

inline bool contains(const IdSet &set, TermId id) {
  return std::binary_search(set.begin(), set.end(), id);
}

// The sets every metric operates on. Members of the id sets always occur in
// the graph; the two predicate sets hold vocabulary terms that may not.
struct EntityCatalog {
  IdSet classes;
  IdSet individuals;
  IdSet entities;  // classes ∪ individuals
  IdSet object_properties;
  std::set<Term> annotation_properties;
  std::set<Term> structural_predicates;
};

// The 22 built-in descriptive annotation predicates (labels, comments,
// definitions, notes, SKOS/SKOS-XL labels, DC titles/descriptions, OBO
// definition and synonym properties).
const std::vector<std::string_view> &builtin_descriptive_predicates();

// RDF/RDFS/OWL machinery predicates that never count as semantic links.
const std::set<Term> &structural_predicates();

IdSet extract_classes(const TripleGraph &graph);
IdSet extract_individuals(const TripleGraph &graph, const IdSet &classes);
std::set<Term> extract_annotation_properties(const TripleGraph &graph);
IdSet extract_object_properties(const TripleGraph &graph,
                                const std::set<Term> &annotation_properties);

EntityCatalog extract_catalog(const TripleGraph &graph);

// Human-readable fallback label derived from an IRI:
// "http://example.org/PlantOrgan" -> "plant organ".
std::string local_name(const Term &iri);

std::vector<Term> to_terms(const TripleGraph &graph, const IdSet &ids);
// Ids of those terms that occur in the graph.
IdSet to_ids(const TripleGraph &graph, const std::set<Term> &terms);

}  // namespace wiseowl
