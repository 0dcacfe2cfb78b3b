#pragma once

// Test support: graph builders, a seeded random-ontology generator and
// brute-force reference implementations that work on a flat triple list.
// The references share vocabulary lists with the library but none of its
// indexing or traversal code.

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wiseowl/catalog.hpp"
#include "wiseowl/parser.hpp"
#include "wiseowl/structure.hpp"
#include "wiseowl/vocab.hpp"

namespace testing {

using wiseowl::rdf::Term;
using wiseowl::rdf::Triple;
using wiseowl::rdf::TripleGraph;
namespace vocab = wiseowl::vocab;

inline const char *kPrelude =
    "@prefix : <http://example.org/> .\n"
    "@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .\n"
    "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n"
    "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n"
    "@prefix skos: <http://www.w3.org/2004/02/skos/core#> .\n"
    "@prefix skosxl: <http://www.w3.org/2008/05/skos-xl#> .\n"
    "@prefix obo: <http://purl.obolibrary.org/obo/> .\n"
    "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n";

// Parses Turtle with the standard prefixes prepended.
inline TripleGraph ttl(const std::string &body) {
  std::istringstream in(std::string(kPrelude) + body);
  return wiseowl::rdf::parse(in, wiseowl::rdf::Syntax::kTurtle);
}

inline Term ex(const std::string &local) {
  return Term::Iri("http://example.org/" + local);
}
inline Term iri(std::string_view v) { return Term::Iri(std::string(v)); }

// ---------------------------------------------------------------------------
// Random ontologies

struct GeneratorLimits {
  std::size_t max_entities = 25;
  std::size_t max_triples = 60;
};

// Entities, typing, annotations (plain, custom, SKOS-XL with and without a
// literal form), object links (declared and usage-inferred), data links,
// restrictions through subClassOf / equivalentClass and a little noise.
inline std::vector<Triple> random_ontology(std::mt19937_64 &rng,
                                           GeneratorLimits limits = {}) {
  auto pick = [&](std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  };
  auto chance = [&](double p) {
    return std::bernoulli_distribution(p)(rng);
  };
  const std::size_t n_entities = 1 + pick(limits.max_entities);
  const std::size_t n_props = 1 + pick(4);
  std::vector<Term> ents, props;
  for (std::size_t i = 0; i < n_entities; ++i) ents.push_back(ex("e" + std::to_string(i)));
  for (std::size_t i = 0; i < n_props; ++i) props.push_back(ex("p" + std::to_string(i)));
  const Term type = iri(vocab::rdf::kType);
  const Term custom_note = ex("note");

  std::vector<Triple> out;
  auto add = [&](Term s, Term p, Term o) {
    if (out.size() < limits.max_triples) {
      out.push_back({std::move(s), std::move(p), std::move(o)});
    }
  };
  std::size_t blank = 0;
  auto fresh = [&] { return Term::Blank("g" + std::to_string(blank++)); };

  for (const auto &p : props) {
    if (chance(0.5)) add(p, type, iri(vocab::owl::kObjectProperty));
  }
  if (chance(0.3)) add(custom_note, type, iri(vocab::owl::kAnnotationProperty));

  const std::size_t steps = limits.max_triples;
  for (std::size_t step = 0; step < steps && out.size() < limits.max_triples; ++step) {
    const Term &a = ents[pick(ents.size())];
    const Term &b = ents[pick(ents.size())];
    switch (pick(14)) {
      case 0: add(a, type, iri(vocab::owl::kClass)); break;
      case 1: add(a, type, iri(vocab::rdfs::kClass)); break;
      case 2: add(a, iri(vocab::rdfs::kSubClassOf), b); break;
      case 3: add(a, type, b); break;
      case 4: add(a, type, iri(vocab::owl::kNamedIndividual)); break;
      case 5: add(a, iri(vocab::rdfs::kLabel), Term::LangLiteral("a thing", "en")); break;
      case 6: add(a, custom_note, chance(0.5) ? Term::Literal("n") : b); break;
      case 7: {
        Term label = chance(0.5) ? fresh() : ex("lbl" + std::to_string(step));
        add(a, iri(vocab::skosxl::kPrefLabel), label);
        if (chance(0.6)) {
          add(label, iri(vocab::skosxl::kLiteralForm),
              chance(0.8) ? Term::Literal("form") : b);
        }
        break;
      }
      case 8:
      case 9: add(a, props[pick(props.size())], b); break;
      case 10: add(a, props[pick(props.size())], Term::Literal("v")); break;
      case 11: {
        Term r = fresh();
        add(a, iri(chance(0.7) ? vocab::rdfs::kSubClassOf : vocab::owl::kEquivalentClass), r);
        add(r, type, iri(vocab::owl::kRestriction));
        add(r, iri(vocab::owl::kOnProperty), props[pick(props.size())]);
        static constexpr std::string_view kFillers[] = {
            vocab::owl::kSomeValuesFrom, vocab::owl::kAllValuesFrom,
            vocab::owl::kHasValue};
        add(r, iri(kFillers[pick(3)]), chance(0.85) ? b : Term::Literal("3"));
        break;
      }
      case 12: add(a, iri(vocab::rdfs::kSeeAlso), b); break;
      default: add(a, iri(vocab::owl::kDisjointWith), b); break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Brute-force references

struct FlatCatalog {
  std::set<Term> entities;
  std::set<Term> object_properties;
  std::set<Term> annotation_properties;
};

inline FlatCatalog flat_catalog(const std::vector<Triple> &in) {
  std::set<Triple> ts(in.begin(), in.end());
  const Term type = iri(vocab::rdf::kType);
  FlatCatalog c;
  std::set<Term> classes, individuals;
  for (const auto &t : ts) {
    if (t.predicate == type && t.subject.is_iri() &&
        (t.object == iri(vocab::owl::kClass) || t.object == iri(vocab::rdfs::kClass) ||
         t.object == iri(vocab::skos::kConcept))) {
      classes.insert(t.subject);
    }
    if (t.predicate == iri(vocab::rdfs::kSubClassOf)) {
      if (t.subject.is_iri()) classes.insert(t.subject);
      if (t.object.is_iri()) classes.insert(t.object);
    }
  }
  for (const auto &t : ts) {
    if (t.predicate != type) continue;
    if (classes.count(t.object) || t.object == iri(vocab::owl::kNamedIndividual)) {
      individuals.insert(t.subject);
    }
  }
  c.entities = classes;
  c.entities.insert(individuals.begin(), individuals.end());

  for (auto v : wiseowl::builtin_descriptive_predicates()) {
    c.annotation_properties.insert(iri(v));
  }
  for (const auto &t : ts) {
    if (t.predicate == type && t.object == iri(vocab::owl::kAnnotationProperty) &&
        t.subject.is_iri()) {
      c.annotation_properties.insert(t.subject);
    }
  }
  std::set<Term> candidates;
  for (const auto &t : ts) {
    if (t.predicate == type && t.object == iri(vocab::owl::kObjectProperty)) {
      candidates.insert(t.subject);
    }
    if (!t.object.is_literal()) candidates.insert(t.predicate);
  }
  const auto &structural = wiseowl::structural_predicates();
  for (const auto &p : candidates) {
    if (!c.annotation_properties.count(p) && !structural.count(p)) {
      c.object_properties.insert(p);
    }
  }
  return c;
}

// 10 * |described| / |E| straight from the triple list.
inline double reference_described(const std::vector<Triple> &in) {
  const FlatCatalog c = flat_catalog(in);
  if (c.entities.empty()) return 0.0;
  std::set<Triple> ts(in.begin(), in.end());
  const std::set<Term> xl = {iri(vocab::skosxl::kPrefLabel),
                             iri(vocab::skosxl::kAltLabel),
                             iri(vocab::skosxl::kHiddenLabel)};
  std::size_t described = 0;
  for (const auto &e : c.entities) {
    bool ok = false;
    for (const auto &t : ts) {
      if (t.subject != e || !c.annotation_properties.count(t.predicate)) continue;
      if (!xl.count(t.predicate)) {
        ok = true;
        continue;
      }
      for (const auto &f : ts) {
        if (f.subject == t.object && f.predicate == iri(vocab::skosxl::kLiteralForm) &&
            f.object.is_literal()) {
          ok = true;
        }
      }
    }
    described += ok ? 1 : 0;
  }
  return 10.0 * static_cast<double>(described) / static_cast<double>(c.entities.size());
}

struct ReferenceConnection {
  double score = 0.0, coverage = 0.0, diversity = 0.0, richness = 0.0;
};

// Enumerates every triple and every restriction axiom for every entity.
inline ReferenceConnection reference_connection(const std::vector<Triple> &in) {
  const FlatCatalog c = flat_catalog(in);
  ReferenceConnection r;
  if (c.entities.empty()) return r;
  std::set<Triple> ts(in.begin(), in.end());
  const std::set<Term> axioms = {iri(vocab::rdfs::kSubClassOf),
                                 iri(vocab::owl::kEquivalentClass)};
  const std::set<Term> filler_preds = {iri(vocab::owl::kSomeValuesFrom),
                                       iri(vocab::owl::kAllValuesFrom),
                                       iri(vocab::owl::kHasValue)};
  // (owner, property, filler) from C ⊑ R / C ≡ R.
  std::set<std::tuple<Term, Term, Term>> restriction_links;
  for (const auto &ax : ts) {
    if (!axioms.count(ax.predicate) || !c.entities.count(ax.subject)) continue;
    for (const auto &on : ts) {
      if (on.subject != ax.object || on.predicate != iri(vocab::owl::kOnProperty)) continue;
      if (!c.object_properties.count(on.object)) continue;
      for (const auto &f : ts) {
        if (f.subject == ax.object && filler_preds.count(f.predicate) && f.object.is_iri()) {
          restriction_links.insert({ax.subject, on.object, f.object});
        }
      }
    }
  }
  double cov = 0, div = 0, rich = 0;
  for (const auto &e : c.entities) {
    std::set<std::tuple<Term, Term, int>> links;
    for (const auto &t : ts) {
      if (!c.object_properties.count(t.predicate)) continue;
      if (t.subject == e && !t.object.is_literal()) links.insert({t.predicate, t.object, 0});
      if (t.object == e) links.insert({t.predicate, t.subject, 1});
    }
    for (const auto &[owner, p, filler] : restriction_links) {
      if (owner == e) links.insert({p, filler, 0});
      if (filler == e) links.insert({p, owner, 1});
    }
    std::set<Term> preds;
    for (const auto &l : links) preds.insert(std::get<0>(l));
    if (!links.empty()) cov += 1;
    div += std::min(static_cast<double>(preds.size()) / 5.0, 1.0);
    rich += std::min(std::log(static_cast<double>(links.size()) + 1) / std::log(11.0), 1.0);
  }
  const double n = static_cast<double>(c.entities.size());
  r.coverage = cov / n;
  r.diversity = div / n;
  r.richness = rich / n;
  r.score = 10.0 * (0.7 * r.coverage + 0.2 * r.diversity + 0.1 * r.richness);
  return r;
}

// Longest simple path (in edges) by exhaustive enumeration; starts at the
// roots, or everywhere when there are none. Exponential: small graphs only.
inline std::size_t reference_max_depth(
    const std::vector<std::pair<int, int>> &edges) {
  std::map<int, std::set<int>> kids;
  std::set<int> nodes, children;
  for (auto [p, c] : edges) {
    if (p == c) continue;
    kids[p].insert(c);
    nodes.insert(p);
    nodes.insert(c);
    children.insert(c);
  }
  std::vector<int> starts;
  for (int n : nodes) {
    if (!children.count(n)) starts.push_back(n);
  }
  if (starts.empty()) starts.assign(nodes.begin(), nodes.end());
  std::size_t best = 0;
  std::set<int> on_path;
  std::function<void(int, std::size_t)> walk = [&](int n, std::size_t len) {
    best = std::max(best, len);
    on_path.insert(n);
    for (int c : kids[n]) {
      if (!on_path.count(c)) walk(c, len + 1);
    }
    on_path.erase(n);
  };
  for (int s : starts) walk(s, 0);
  return best;
}

// HierarchyGraph over ids taken from integers.
inline wiseowl::HierarchyGraph hierarchy_from(
    const std::vector<std::pair<int, int>> &edges) {
  std::vector<wiseowl::HierarchyEdge> out;
  for (auto [p, c] : edges) {
    out.push_back({static_cast<wiseowl::TermId>(p), static_cast<wiseowl::TermId>(c),
                   wiseowl::EdgeKind::kSubclass});
  }
  return wiseowl::HierarchyGraph(std::move(out));
}

// Turtle for a balanced tree: `depth` levels below the root, `width`
// children per inner node.
inline std::string tree_ttl(int depth, int width) {
  std::string out;
  std::vector<std::string> level = {"n"};
  for (int d = 0; d < depth; ++d) {
    std::vector<std::string> next;
    for (const auto &parent : level) {
      for (int w = 0; w < width; ++w) {
        std::string child = parent + "_" + std::to_string(w);
        out += ":" + child + " rdfs:subClassOf :" + parent + " .\n";
        next.push_back(child);
      }
    }
    level = std::move(next);
  }
  return out;
}

inline std::string chain_ttl(int edges) {
  std::string out;
  for (int i = 0; i < edges; ++i) {
    out += ":c" + std::to_string(i + 1) + " rdfs:subClassOf :c" + std::to_string(i) + " .\n";
  }
  return out;
}

}  // namespace testing
