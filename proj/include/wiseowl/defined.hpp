#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wiseowl/catalog.hpp"
#include "wiseowl/embedding.hpp"

namespace wiseowl {

inline constexpr double kRelevanceWeight = 0.4;
inline constexpr double kAdequacyWeight = 0.6;

struct DefinedRow {
  Term entity;
  std::string label;
  bool label_from_iri = false;  // no label triple; derived from the IRI
  std::optional<std::string> definition;
  double raw_similarity = 0.0;
  double relevance = 0.0;
  double adequacy = 0.0;
  double entity_score = 0.0;
};

struct BatchStats {
  std::size_t count = 0;
  double mean = 0.0;
  double stddev = 0.0;  // population
};

struct DefinedResult {
  double score = 0.0;
  std::size_t defined_count = 0;
  std::vector<DefinedRow> per_entity;  // sorted by entity
  BatchStats batch_stats;
};

struct Label {
  std::string text;
  bool from_iri = false;
};

// skos:prefLabel, then rdfs:label; among literals of one predicate prefer
// English, then untagged, then the lexically smallest. Falls back to the
// IRI's local name.
Label collect_label(const TripleGraph &graph, TermId entity);
std::string collect_label(const TripleGraph &graph, const Term &entity);

// All literal definitions/comments, ordered by predicate then text, joined
// with ". ".
std::optional<std::string> collect_definition(const TripleGraph &graph,
                                              TermId entity);
std::optional<std::string> collect_definition(const TripleGraph &graph,
                                              const Term &entity);

// Logistic squashing around the batch mean with the population standard
// deviation as scale; a degenerate batch maps to 0.5 everywhere.
std::vector<double> sigmoid_normalize(std::span<const double> raw);
BatchStats batch_stats(std::span<const double> raw);

// Entities without a definition score 0 and do not enter the batch
// statistics, but still count in the mean. Never calls the embedder when
// no entity has a definition.
DefinedResult score_defined(const TripleGraph &graph,
                            const EntityCatalog &catalog, Embedder &embedder,
                            const EmbedConfig &config);

}  // namespace wiseowl
