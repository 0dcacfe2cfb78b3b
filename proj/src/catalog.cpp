#include "wiseowl/catalog.hpp"

#include <cctype>

#include "wiseowl/vocab.hpp"

namespace wiseowl {

namespace {

void normalize(IdSet &ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
}

std::optional<TermId> iri_id(const TripleGraph &g, std::string_view iri) {
  return g.find(Term::Iri(std::string(iri)));
}

// Subjects s of (s, rdf:type, type).
void typed_subjects(const TripleGraph &g, std::optional<TermId> rdf_type,
                    std::string_view type, IdSet &out, bool iri_only) {
  auto type_id = iri_id(g, type);
  if (!rdf_type || !type_id) return;
  for (const auto &t : g.with_predicate_object(*rdf_type, *type_id)) {
    if (iri_only && !g.term(t.s).is_iri()) continue;
    out.push_back(t.s);
  }
}

}  // namespace

const std::vector<std::string_view> &builtin_descriptive_predicates() {
  static const std::vector<std::string_view> kList = {
      vocab::rdfs::kLabel,
      vocab::rdfs::kComment,
      vocab::skos::kPrefLabel,
      vocab::skos::kAltLabel,
      vocab::skos::kHiddenLabel,
      vocab::skos::kDefinition,
      vocab::skos::kNote,
      vocab::skos::kScopeNote,
      vocab::skos::kExample,
      vocab::skosxl::kPrefLabel,
      vocab::skosxl::kAltLabel,
      vocab::skosxl::kHiddenLabel,
      vocab::dcterms::kDescription,
      vocab::dcterms::kTitle,
      vocab::dc::kDescription,
      vocab::dc::kTitle,
      vocab::obo::kDefinition,
      vocab::oboinowl::kHasDefinition,
      vocab::oboinowl::kHasExactSynonym,
      vocab::oboinowl::kHasRelatedSynonym,
      vocab::oboinowl::kHasBroadSynonym,
      vocab::oboinowl::kHasNarrowSynonym,
  };
  return kList;
}

const std::set<Term> &structural_predicates() {
  static const std::set<Term> kSet = [] {
    const std::string rdf(vocab::rdf::kNs);
    const std::string rdfs(vocab::rdfs::kNs);
    const std::string owl(vocab::owl::kNs);
    std::set<Term> s;
    for (const char *name : {"type", "first", "rest"}) {
      s.insert(Term::Iri(rdf + name));
    }
    for (const char *name : {"subClassOf", "subPropertyOf", "domain", "range",
                             "seeAlso", "isDefinedBy"}) {
      s.insert(Term::Iri(rdfs + name));
    }
    for (const char *name :
         {"equivalentClass", "equivalentProperty", "disjointWith", "inverseOf",
          "onProperty", "someValuesFrom", "allValuesFrom", "hasValue",
          "intersectionOf", "unionOf", "complementOf", "imports", "versionIRI",
          // axiom reification and n-ary axiom plumbing
          "annotatedSource", "annotatedProperty", "annotatedTarget", "members",
          "distinctMembers", "oneOf", "onClass", "onDataRange", "onDatatype",
          "withRestrictions", "propertyChainAxiom", "disjointUnionOf",
          "propertyDisjointWith", "hasKey", "sourceIndividual",
          "assertionProperty", "targetIndividual", "targetValue",
          "datatypeComplementOf",
          // built-in non-descriptive annotation properties
          "versionInfo", "priorVersion", "backwardCompatibleWith",
          "incompatibleWith", "deprecated"}) {
      s.insert(Term::Iri(owl + name));
    }
    // Soft domain/range declarations, the counterparts of rdfs:domain and
    // rdfs:range in DCMI and schema.org vocabularies.
    for (const char *iri : {"http://purl.org/dc/dcam/domainIncludes",
                            "http://purl.org/dc/dcam/rangeIncludes",
                            "http://schema.org/domainIncludes",
                            "http://schema.org/rangeIncludes",
                            "https://schema.org/domainIncludes",
                            "https://schema.org/rangeIncludes"}) {
      s.insert(Term::Iri(iri));
    }
    return s;
  }();
  return kSet;
}

IdSet extract_classes(const TripleGraph &g) {
  IdSet out;
  auto rdf_type = iri_id(g, vocab::rdf::kType);
  // Anonymous class expressions are traversed by the metrics, not cataloged.
  typed_subjects(g, rdf_type, vocab::owl::kClass, out, true);
  typed_subjects(g, rdf_type, vocab::rdfs::kClass, out, true);
  typed_subjects(g, rdf_type, vocab::skos::kConcept, out, true);
  if (auto sub = iri_id(g, vocab::rdfs::kSubClassOf)) {
    for (const auto &t : g.with_predicate(*sub)) {
      if (g.term(t.s).is_iri()) out.push_back(t.s);
      if (g.term(t.o).is_iri()) out.push_back(t.o);
    }
  }
  normalize(out);
  return out;
}

IdSet extract_individuals(const TripleGraph &g, const IdSet &classes) {
  IdSet out;
  auto rdf_type = iri_id(g, vocab::rdf::kType);
  if (!rdf_type) return out;
  for (const auto &t : g.with_predicate(*rdf_type)) {
    if (contains(classes, t.o)) out.push_back(t.s);
  }
  typed_subjects(g, rdf_type, vocab::owl::kNamedIndividual, out, false);
  normalize(out);
  return out;
}

std::set<Term> extract_annotation_properties(const TripleGraph &g) {
  std::set<Term> out;
  for (auto iri : builtin_descriptive_predicates()) {
    out.insert(Term::Iri(std::string(iri)));
  }
  IdSet declared;
  typed_subjects(g, iri_id(g, vocab::rdf::kType),
                 vocab::owl::kAnnotationProperty, declared, true);
  for (auto id : declared) out.insert(g.term(id));
  return out;
}

IdSet extract_object_properties(const TripleGraph &g,
                                const std::set<Term> &annotation_properties) {
  IdSet candidates;
  typed_subjects(g, iri_id(g, vocab::rdf::kType), vocab::owl::kObjectProperty,
                 candidates, true);
  // Usage inference: one non-literal object is enough.
  for (std::size_t i = 0; i < g.term_count(); ++i) {
    auto p = static_cast<TermId>(i);
    auto uses = g.with_predicate(p);
    if (std::any_of(uses.begin(), uses.end(), [&](const rdf::TripleIds &t) {
          return !g.term(t.o).is_literal();
        })) {
      candidates.push_back(p);
    }
  }
  normalize(candidates);

  const auto &structural = structural_predicates();
  IdSet out;
  for (auto id : candidates) {
    const Term &t = g.term(id);
    if (annotation_properties.count(t) || structural.count(t)) continue;
    out.push_back(id);
  }
  return out;
}

EntityCatalog extract_catalog(const TripleGraph &g) {
  EntityCatalog c;
  c.classes = extract_classes(g);
  c.individuals = extract_individuals(g, c.classes);
  c.entities.reserve(c.classes.size() + c.individuals.size());
  std::set_union(c.classes.begin(), c.classes.end(), c.individuals.begin(),
                 c.individuals.end(), std::back_inserter(c.entities));
  c.annotation_properties = extract_annotation_properties(g);
  c.object_properties = extract_object_properties(g, c.annotation_properties);
  c.structural_predicates = structural_predicates();
  return c;
}

std::string local_name(const Term &iri) {
  std::string_view v = iri.value;
  while (!v.empty() && (v.back() == '#' || v.back() == '/')) v.remove_suffix(1);
  auto cut = v.rfind('#');
  if (cut == std::string_view::npos) cut = v.rfind('/');
  if (cut != std::string_view::npos) v = v.substr(cut + 1);

  auto upper = [](char c) { return c >= 'A' && c <= 'Z'; };
  auto lower_or_digit = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
  };
  std::string spaced;
  for (std::size_t i = 0; i < v.size(); ++i) {
    char c = v[i];
    if (c == '_') {
      spaced += ' ';
      continue;
    }
    if (upper(c) && i > 0) {
      char prev = v[i - 1];
      bool next_lower = i + 1 < v.size() && v[i + 1] >= 'a' && v[i + 1] <= 'z';
      // fooBar -> foo Bar; HTTPServer -> HTTP Server
      if (lower_or_digit(prev) || (upper(prev) && next_lower)) spaced += ' ';
    }
    spaced += c;
  }
  std::string out;
  for (char c : spaced) {
    if (c == ' ' && (out.empty() || out.back() == ' ')) continue;
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

std::vector<Term> to_terms(const TripleGraph &g, const IdSet &ids) {
  std::vector<Term> out;
  out.reserve(ids.size());
  for (auto id : ids) out.push_back(g.term(id));
  return out;
}

IdSet to_ids(const TripleGraph &g, const std::set<Term> &terms) {
  IdSet out;
  for (const auto &t : terms) {
    if (auto id = g.find(t)) out.push_back(*id);
  }
  normalize(out);
  return out;
}

}  // namespace wiseowl
