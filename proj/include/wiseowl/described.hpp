#pragma once

#include <optional>
#include <set>
#include <vector>

#include "wiseowl/catalog.hpp"

namespace wiseowl {

struct DescribedRow {
  Term entity;
  bool described = false;
  // First predicate (in term order) that makes the entity described.
  std::optional<Term> witness;
};

struct DescribedResult {
  double score = 0.0;
  std::size_t described_count = 0;
  std::size_t entity_count = 0;
  std::vector<DescribedRow> per_entity;  // sorted by entity
};

struct DescribeOptions {
  // Require a literal object for non SKOS-XL predicates.
  bool strict = false;
};

// Built-in descriptive predicates plus every declared owl:AnnotationProperty.
std::set<Term> descriptive_predicates(const EntityCatalog &catalog);

// Precomputed predicate lookup for is_described.
class DescriptivePredicates {
 public:
  DescriptivePredicates(const TripleGraph &graph, const std::set<Term> &preds);

  bool contains(TermId p) const { return wiseowl::contains(ids_, p); }
  bool is_xl_label(TermId p) const { return wiseowl::contains(xl_labels_, p); }
  std::optional<TermId> literal_form() const { return literal_form_; }

 private:
  IdSet ids_;
  IdSet xl_labels_;
  std::optional<TermId> literal_form_;
};

// Returns the witnessing predicate when the entity carries a descriptive
// annotation. A SKOS-XL label counts only when its label node has a literal
// skosxl:literalForm.
std::optional<TermId> described_by(const TripleGraph &graph, TermId entity,
                                   const DescriptivePredicates &preds,
                                   const DescribeOptions &options = {});

bool is_described(const TripleGraph &graph, const Term &entity,
                  const std::set<Term> &preds,
                  const DescribeOptions &options = {});

DescribedResult score_described(const TripleGraph &graph,
                                const EntityCatalog &catalog,
                                const DescribeOptions &options = {});

}  // namespace wiseowl
