#include "wiseowl/described.hpp"

#include "wiseowl/vocab.hpp"

namespace wiseowl {

std::set<Term> descriptive_predicates(const EntityCatalog &catalog) {
  std::set<Term> out = catalog.annotation_properties;
  for (auto iri : builtin_descriptive_predicates()) {
    out.insert(Term::Iri(std::string(iri)));
  }
  return out;
}

DescriptivePredicates::DescriptivePredicates(const TripleGraph &graph,
                                             const std::set<Term> &preds)
    : ids_(to_ids(graph, preds)) {
  std::set<Term> xl;
  for (auto iri : {vocab::skosxl::kPrefLabel, vocab::skosxl::kAltLabel,
                   vocab::skosxl::kHiddenLabel}) {
    xl.insert(Term::Iri(std::string(iri)));
  }
  xl_labels_ = to_ids(graph, xl);
  literal_form_ = graph.find(Term::Iri(std::string(vocab::skosxl::kLiteralForm)));
}

std::optional<TermId> described_by(const TripleGraph &graph, TermId entity,
                                   const DescriptivePredicates &preds,
                                   const DescribeOptions &options) {
  for (const auto &t : graph.with_subject(entity)) {
    if (!preds.contains(t.p)) continue;
    if (preds.is_xl_label(t.p)) {
      auto form = preds.literal_form();
      if (!form) continue;
      for (const auto &f : graph.with_subject_predicate(t.o, *form)) {
        if (graph.term(f.o).is_literal()) return t.p;
      }
      continue;
    }
    if (options.strict && !graph.term(t.o).is_literal()) continue;
    return t.p;
  }
  return std::nullopt;
}

bool is_described(const TripleGraph &graph, const Term &entity,
                  const std::set<Term> &preds, const DescribeOptions &options) {
  auto id = graph.find(entity);
  if (!id) return false;
  DescriptivePredicates lookup(graph, preds);
  return described_by(graph, *id, lookup, options).has_value();
}

DescribedResult score_described(const TripleGraph &graph,
                                const EntityCatalog &catalog,
                                const DescribeOptions &options) {
  DescriptivePredicates lookup(graph, descriptive_predicates(catalog));
  DescribedResult r;
  r.entity_count = catalog.entities.size();
  r.per_entity.reserve(catalog.entities.size());
  for (auto e : catalog.entities) {
    auto witness = described_by(graph, e, lookup, options);
    DescribedRow row{graph.term(e), witness.has_value(), std::nullopt};
    if (witness) {
      row.witness = graph.term(*witness);
      ++r.described_count;
    }
    r.per_entity.push_back(std::move(row));
  }
  if (r.entity_count > 0) {
    r.score = 10.0 * static_cast<double>(r.described_count) /
              static_cast<double>(r.entity_count);
  }
  return r;
}

}  // namespace wiseowl
