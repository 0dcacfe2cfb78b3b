#include "wiseowl/defined.hpp"

#include <algorithm>
#include <cmath>

#include "wiseowl/text.hpp"
#include "wiseowl/vocab.hpp"

namespace wiseowl {

namespace {

constexpr double kDegenerateSigma = 1e-9;
// Entities embedded per round; bounds peak memory on large ontologies.
constexpr std::size_t kEntitiesPerRound = 2048;

int language_rank(const Term &literal) {
  if (!literal.language) return 1;
  const std::string &tag = *literal.language;
  if (tag == "en" || tag.starts_with("en-")) return 0;
  return 2;
}

const std::vector<std::string_view> &definition_predicates() {
  static const std::vector<std::string_view> kPreds = {
      vocab::skos::kDefinition,       vocab::rdfs::kComment,
      vocab::obo::kDefinition,        vocab::dcterms::kDescription,
      vocab::dc::kDescription,        vocab::oboinowl::kHasDefinition,
      vocab::skos::kNote,             vocab::skos::kScopeNote,
  };
  return kPreds;
}

}  // namespace

Label collect_label(const TripleGraph &graph, TermId entity) {
  for (auto iri : {vocab::skos::kPrefLabel, vocab::rdfs::kLabel}) {
    auto pred = graph.find(Term::Iri(std::string(iri)));
    if (!pred) continue;
    const Term *best = nullptr;
    for (const auto &t : graph.with_subject_predicate(entity, *pred)) {
      const Term &o = graph.term(t.o);
      if (!o.is_literal()) continue;
      if (!best || std::make_pair(language_rank(o), o) <
                       std::make_pair(language_rank(*best), *best)) {
        best = &o;
      }
    }
    if (best) return Label{best->value, false};
  }
  const Term &e = graph.term(entity);
  return Label{e.is_iri() ? local_name(e) : std::string(), true};
}

std::string collect_label(const TripleGraph &graph, const Term &entity) {
  if (auto id = graph.find(entity)) return collect_label(graph, *id).text;
  return entity.is_iri() ? local_name(entity) : std::string();
}

std::optional<std::string> collect_definition(const TripleGraph &graph,
                                              TermId entity) {
  std::vector<std::pair<TermId, std::string_view>> parts;
  for (auto iri : definition_predicates()) {
    auto pred = graph.find(Term::Iri(std::string(iri)));
    if (!pred) continue;
    for (const auto &t : graph.with_subject_predicate(entity, *pred)) {
      const Term &o = graph.term(t.o);
      if (o.is_literal()) parts.emplace_back(*pred, o.value);
    }
  }
  if (parts.empty()) return std::nullopt;
  // Ids follow term order, so this sorts by predicate IRI.
  std::sort(parts.begin(), parts.end());
  std::string joined;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) joined += ". ";
    joined += parts[i].second;
  }
  return joined;
}

std::optional<std::string> collect_definition(const TripleGraph &graph,
                                              const Term &entity) {
  auto id = graph.find(entity);
  if (!id) return std::nullopt;
  return collect_definition(graph, *id);
}

BatchStats batch_stats(std::span<const double> raw) {
  BatchStats s;
  s.count = raw.size();
  if (raw.empty()) return s;
  double sum = 0.0;
  for (double x : raw) sum += x;
  s.mean = sum / static_cast<double>(raw.size());
  double var = 0.0;
  for (double x : raw) var += (x - s.mean) * (x - s.mean);
  s.stddev = std::sqrt(var / static_cast<double>(raw.size()));
  return s;
}

std::vector<double> sigmoid_normalize(std::span<const double> raw) {
  const BatchStats s = batch_stats(raw);
  std::vector<double> out;
  out.reserve(raw.size());
  for (double x : raw) {
    if (s.stddev < kDegenerateSigma) {
      out.push_back(0.5);
    } else {
      out.push_back(1.0 / (1.0 + std::exp(-(x - s.mean) / s.stddev)));
    }
  }
  return out;
}

DefinedResult score_defined(const TripleGraph &graph,
                            const EntityCatalog &catalog, Embedder &embedder,
                            const EmbedConfig &config) {
  DefinedResult r;
  r.per_entity.reserve(catalog.entities.size());
  std::vector<std::size_t> defined;  // indexes into per_entity
  for (auto e : catalog.entities) {
    DefinedRow row;
    row.entity = graph.term(e);
    Label label = collect_label(graph, e);
    row.label = std::move(label.text);
    row.label_from_iri = label.from_iri;
    row.definition = collect_definition(graph, e);
    if (row.definition) {
      row.adequacy = adequacy(tokenize(*row.definition));
      defined.push_back(r.per_entity.size());
    }
    r.per_entity.push_back(std::move(row));
  }
  r.defined_count = defined.size();
  if (defined.empty() || r.per_entity.empty()) return r;

  std::vector<double> raw;
  raw.reserve(defined.size());
  for (std::size_t begin = 0; begin < defined.size();
       begin += kEntitiesPerRound) {
    std::size_t end = std::min(defined.size(), begin + kEntitiesPerRound);
    std::vector<std::string> texts;
    texts.reserve(2 * (end - begin));
    for (std::size_t i = begin; i < end; ++i) {
      texts.push_back(r.per_entity[defined[i]].label);
    }
    for (std::size_t i = begin; i < end; ++i) {
      texts.push_back(*r.per_entity[defined[i]].definition);
    }
    auto vectors = embed_batch(embedder, texts, config);
    const std::size_t n = end - begin;
    for (std::size_t i = 0; i < n; ++i) {
      raw.push_back(cosine(vectors[i], vectors[n + i]));
    }
  }

  r.batch_stats = batch_stats(raw);
  auto relevance = sigmoid_normalize(raw);
  double total = 0.0;
  for (std::size_t i = 0; i < defined.size(); ++i) {
    auto &row = r.per_entity[defined[i]];
    row.raw_similarity = raw[i];
    row.relevance = relevance[i];
    row.entity_score =
        kRelevanceWeight * row.relevance + kAdequacyWeight * row.adequacy;
    total += row.entity_score;
  }
  r.score = 10.0 * total / static_cast<double>(r.per_entity.size());
  return r;
}

}  // namespace wiseowl
