#include <random>

#include "doctest.h"
#include "support.hpp"
#include "wiseowl/described.hpp"

using namespace wiseowl;
using testing::ex;
using testing::iri;
using testing::ttl;

namespace {

std::set<Term> terms(const TripleGraph &g, const IdSet &ids) {
  auto v = to_terms(g, ids);
  return {v.begin(), v.end()};
}

}  // namespace

TEST_SUITE("catalog") {
  TEST_CASE("extract_classes") {
    auto g1 = ttl(":A a owl:Class .");
    CHECK(terms(g1, extract_classes(g1)) == std::set<Term>{ex("A")});

    auto g2 = ttl(":B rdfs:subClassOf :C .");
    CHECK(terms(g2, extract_classes(g2)) == std::set<Term>{ex("B"), ex("C")});

    auto g3 = ttl(":B rdfs:subClassOf [ a owl:Restriction ; owl:onProperty :p ;"
                  " owl:someValuesFrom :D ] .");
    CHECK(terms(g3, extract_classes(g3)) == std::set<Term>{ex("B")});

    auto g4 = ttl(":S a skos:Concept . :R a rdfs:Class . [] a owl:Class .");
    CHECK(terms(g4, extract_classes(g4)) == std::set<Term>{ex("R"), ex("S")});

    auto empty = ttl("");
    CHECK(extract_classes(empty).empty());
  }

  TEST_CASE("extract_individuals") {
    auto g = ttl(":A a owl:Class . :x a :A . :y a owl:NamedIndividual . :z a :Unknown .");
    auto classes = extract_classes(g);
    CHECK(terms(g, extract_individuals(g, classes)) == std::set<Term>{ex("x"), ex("y")});
    auto none = ttl(":A a owl:Class .");
    CHECK(extract_individuals(none, extract_classes(none)).empty());
  }

  TEST_CASE("punning counts once") {
    auto g = ttl(":A a owl:Class . :B a owl:Class . :A a :B .");
    auto c = extract_catalog(g);
    CHECK(contains(c.classes, *g.find(ex("A"))));
    CHECK(contains(c.individuals, *g.find(ex("A"))));
    CHECK(c.entities.size() == 2);
  }

  TEST_CASE("extract_annotation_properties") {
    auto empty = ttl("");
    auto base = extract_annotation_properties(empty);
    CHECK(base.size() == 22);
    CHECK(builtin_descriptive_predicates().size() == 22);
    auto g = ttl(":note a owl:AnnotationProperty . rdfs:label a owl:AnnotationProperty .");
    auto with = extract_annotation_properties(g);
    CHECK(with.size() == 23);
    CHECK(with.count(ex("note")));
  }

  TEST_CASE("extract_object_properties") {
    auto declared = ttl(":p a owl:ObjectProperty .");
    CHECK(terms(declared, extract_catalog(declared).object_properties) ==
          std::set<Term>{ex("p")});

    auto used = ttl(":a :q :b . :a :d \"literal\" .");
    CHECK(terms(used, extract_catalog(used).object_properties) == std::set<Term>{ex("q")});

    auto structural = ttl(":A rdfs:subClassOf :B . :x a :A . :A owl:disjointWith :C .\n"
                          ":n a owl:AnnotationProperty . :A :n :B . :A rdfs:seeAlso :B .");
    CHECK(extract_catalog(structural).object_properties.empty());
  }

  TEST_CASE("catalog invariants on random graphs") {
    std::mt19937_64 rng(21);
    for (int round = 0; round < 200; ++round) {
      auto triples = testing::random_ontology(rng);
      auto g = rdf::make_graph(triples);
      auto c = extract_catalog(g);
      IdSet both;
      std::set_union(c.classes.begin(), c.classes.end(), c.individuals.begin(),
                     c.individuals.end(), std::back_inserter(both));
      CHECK(both == c.entities);
      for (auto p : c.object_properties) {
        const Term &t = g.term(p);
        CHECK_FALSE(c.annotation_properties.count(t));
        CHECK_FALSE(structural_predicates().count(t));
        CHECK(t != iri(vocab::rdf::kType));
        CHECK(t != iri(vocab::rdfs::kSubClassOf));
      }
      for (auto e : c.entities) CHECK_FALSE(g.term(e).is_literal());
      auto flat = testing::flat_catalog(triples);
      CHECK(flat.entities == terms(g, c.entities));
      CHECK(flat.object_properties == terms(g, c.object_properties));

      // Order independence.
      auto shuffled = triples;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      auto g2 = rdf::make_graph(shuffled);
      CHECK(terms(g2, extract_catalog(g2).entities) == terms(g, c.entities));
    }
  }

  TEST_CASE("vocabulary-free graph") {
    auto g = ttl(":a :p :b . :b :q \"x\" . :c rdfs:subClassOf :d .");
    auto c = extract_catalog(g);
    CHECK(terms(g, c.classes) == std::set<Term>{ex("c"), ex("d")});
    CHECK(terms(g, c.object_properties) == std::set<Term>{ex("p")});
  }

  TEST_CASE("local_name") {
    CHECK(local_name(Term::Iri("http://example.org/PlantOrgan")) == "plant organ");
    CHECK(local_name(Term::Iri("http://purl.obolibrary.org/obo/PO_0009046")) == "po 0009046");
    CHECK(local_name(Term::Iri("http://a.b/#x")) == "x");
    CHECK(local_name(Term::Iri("http://a.b/HTTPServer")) == "http server");
    CHECK(local_name(Term::Iri("http://a.b/ns/")) == "ns");
    CHECK(local_name(Term::Iri("http://a.b/has_part__of")) == "has part of");
  }
}

TEST_SUITE("described") {
  TEST_CASE("descriptive_predicates") {
    auto g = ttl("");
    CHECK(descriptive_predicates(extract_catalog(g)).size() == 22);
    auto g2 = ttl(":curatorNote a owl:AnnotationProperty . rdfs:label a owl:AnnotationProperty .");
    auto preds = descriptive_predicates(extract_catalog(g2));
    CHECK(preds.size() == 23);
    CHECK(preds.count(ex("curatorNote")));
  }

  TEST_CASE("is_described") {
    auto g = ttl(":a a owl:Class ; rdfs:label \"A\" .\n"
                 ":b a owl:Class ; skosxl:altLabel :bl .\n"
                 ":c a owl:Class .\n"
                 ":d a owl:Class ; skosxl:prefLabel [ skosxl:literalForm \"D\"@en ] .\n"
                 ":e a owl:Class ; skosxl:prefLabel [ skosxl:literalForm :notLiteral ] .\n"
                 ":f a owl:Class ; rdfs:comment :someNode .\n"
                 ":g a owl:Class ; rdfs:label \"\" .\n");
    auto preds = descriptive_predicates(extract_catalog(g));
    CHECK(is_described(g, ex("a"), preds));
    CHECK_FALSE(is_described(g, ex("b"), preds));
    CHECK_FALSE(is_described(g, ex("c"), preds));
    CHECK(is_described(g, ex("d"), preds));
    CHECK_FALSE(is_described(g, ex("e"), preds));
    CHECK(is_described(g, ex("f"), preds));
    CHECK_FALSE(is_described(g, ex("f"), preds, {.strict = true}));
    CHECK(is_described(g, ex("g"), preds));
    CHECK_FALSE(is_described(g, ex("missing"), preds));
  }

  TEST_CASE("score_described") {
    auto g = ttl(":a a owl:Class ; rdfs:label \"A\" . :b a owl:Class ; skos:definition \"B\" ."
                 ":c a owl:Class .");
    auto r = score_described(g, extract_catalog(g));
    CHECK(r.score == doctest::Approx(6.6667).epsilon(0.0005));
    CHECK(r.described_count == 2);
    CHECK(r.entity_count == 3);
    REQUIRE(r.per_entity.size() == 3);
    CHECK(r.per_entity[0].witness == iri(vocab::rdfs::kLabel));
    CHECK(r.per_entity[1].witness == iri(vocab::skos::kDefinition));
    CHECK_FALSE(r.per_entity[2].witness.has_value());

    auto all = ttl(":a a owl:Class ; rdfs:label \"A\" .");
    CHECK(score_described(all, extract_catalog(all)).score == 10.0);
    auto empty = ttl("");
    auto e = score_described(empty, extract_catalog(empty));
    CHECK(e.score == 0.0);
    CHECK(e.entity_count == 0);
  }

  TEST_CASE("custom annotation property counts") {
    auto g = ttl(":created a owl:AnnotationProperty . :a a owl:Class ; :created \"2020\" .");
    CHECK(score_described(g, extract_catalog(g)).score == 10.0);
  }

  TEST_CASE("oracle equivalence on random ontologies") {
    std::mt19937_64 rng(99);
    for (int round = 0; round < 300; ++round) {
      auto triples = testing::random_ontology(rng, {30, 60});
      auto g = rdf::make_graph(triples);
      auto r = score_described(g, extract_catalog(g));
      CHECK(r.score == doctest::Approx(testing::reference_described(triples)).epsilon(1e-12));
      std::size_t flagged = 0;
      for (const auto &row : r.per_entity) flagged += row.described ? 1 : 0;
      CHECK(flagged == r.described_count);
    }
  }

  TEST_CASE("monotone under descriptive additions, invariant under others") {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 200; ++round) {
      auto triples = testing::random_ontology(rng);
      auto g = rdf::make_graph(triples);
      auto base = score_described(g, extract_catalog(g));
      for (const auto &row : base.per_entity) {
        if (row.described) continue;
        auto more = triples;
        more.push_back({row.entity, iri(vocab::rdfs::kLabel), Term::Literal("new")});
        auto g2 = rdf::make_graph(more);
        CHECK(score_described(g2, extract_catalog(g2)).score >= base.score);
        break;
      }
      auto noise = triples;
      if (!base.per_entity.empty()) {
        noise.push_back({base.per_entity[0].entity, ex("unrelated"), Term::Literal("x")});
      }
      std::shuffle(noise.begin(), noise.end(), rng);
      auto g3 = rdf::make_graph(noise);
      CHECK(score_described(g3, extract_catalog(g3)).score == base.score);
    }
  }
}
