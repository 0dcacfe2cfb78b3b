#include <algorithm>
#include <cmath>

#include "wiseowl/structure.hpp"
#include "wiseowl/vocab.hpp"

namespace wiseowl {

namespace {

std::optional<TermId> iri_id(const TripleGraph &g, std::string_view iri) {
  return g.find(Term::Iri(std::string(iri)));
}

}  // namespace

const IdSet &connecting_predicates(const EntityCatalog &catalog) {
  return catalog.object_properties;
}

ConnectionIndex::ConnectionIndex(const TripleGraph &graph,
                                 const EntityCatalog &catalog)
    : graph_(graph), catalog_(catalog) {
  auto on_property = iri_id(graph, vocab::owl::kOnProperty);
  if (!on_property) return;
  std::vector<TermId> filler_preds;
  for (auto iri : {vocab::owl::kSomeValuesFrom, vocab::owl::kAllValuesFrom,
                   vocab::owl::kHasValue}) {
    if (auto id = iri_id(graph, iri)) filler_preds.push_back(*id);
  }
  for (auto iri : {vocab::rdfs::kSubClassOf, vocab::owl::kEquivalentClass}) {
    auto axiom = iri_id(graph, iri);
    if (!axiom) continue;
    for (const auto &t : graph.with_predicate(*axiom)) {
      if (!contains(catalog.entities, t.s)) continue;
      const TermId restriction = t.o;
      for (const auto &op : graph.with_subject_predicate(restriction, *on_property)) {
        if (!contains(catalog.object_properties, op.o)) continue;
        for (auto fp : filler_preds) {
          for (const auto &f : graph.with_subject_predicate(restriction, fp)) {
            if (!graph.term(f.o).is_iri()) continue;
            by_owner_.push_back({t.s, op.o, f.o});
          }
        }
      }
    }
  }
  auto key = [](const RestrictionLink &r) {
    return std::make_tuple(r.owner, r.predicate, r.filler);
  };
  std::sort(by_owner_.begin(), by_owner_.end(),
            [&](const auto &a, const auto &b) { return key(a) < key(b); });
  by_owner_.erase(std::unique(by_owner_.begin(), by_owner_.end(),
                              [&](const auto &a, const auto &b) {
                                return key(a) == key(b);
                              }),
                  by_owner_.end());
  by_filler_ = by_owner_;
  std::sort(by_filler_.begin(), by_filler_.end(),
            [](const auto &a, const auto &b) {
              return std::tie(a.filler, a.owner, a.predicate) <
                     std::tie(b.filler, b.owner, b.predicate);
            });
}

std::vector<Link> ConnectionIndex::links(TermId entity) const {
  const IdSet &preds = catalog_.object_properties;
  std::vector<Link> out;
  for (const auto &t : graph_.with_subject(entity)) {
    if (contains(preds, t.p) && !graph_.term(t.o).is_literal()) {
      out.push_back({t.p, t.o, LinkDirection::kOut});
    }
  }
  for (const auto &t : graph_.with_object(entity)) {
    if (contains(preds, t.p)) out.push_back({t.p, t.s, LinkDirection::kIn});
  }
  auto owned_lo = std::partition_point(
      by_owner_.begin(), by_owner_.end(),
      [&](const RestrictionLink &r) { return r.owner < entity; });
  for (auto it = owned_lo; it != by_owner_.end() && it->owner == entity; ++it) {
    out.push_back({it->predicate, it->filler, LinkDirection::kOut});
  }
  auto filled_lo = std::partition_point(
      by_filler_.begin(), by_filler_.end(),
      [&](const RestrictionLink &r) { return r.filler < entity; });
  for (auto it = filled_lo; it != by_filler_.end() && it->filler == entity;
       ++it) {
    out.push_back({it->predicate, it->owner, LinkDirection::kIn});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

EntityConnections entity_connections(const TripleGraph &graph,
                                     const Term &entity,
                                     const EntityCatalog &catalog) {
  EntityConnections ec;
  auto id = graph.find(entity);
  if (!id) return ec;
  ConnectionIndex index(graph, catalog);
  auto links = index.links(*id);
  ec.total = links.size();
  for (const auto &l : links) ec.distinct_predicates.insert(graph.term(l.predicate));
  return ec;
}

ConnectionResult score_connection(const TripleGraph &graph,
                                  const EntityCatalog &catalog) {
  ConnectionResult r;
  const std::size_t n = catalog.entities.size();
  if (n == 0) return r;
  ConnectionIndex index(graph, catalog);
  r.per_entity.reserve(n);
  double covered = 0.0, diversity = 0.0, richness = 0.0;
  const double log_target = std::log(kRichnessTarget + 1.0);
  for (auto e : catalog.entities) {
    auto links = index.links(e);
    std::vector<TermId> preds;
    preds.reserve(links.size());
    for (const auto &l : links) preds.push_back(l.predicate);
    std::sort(preds.begin(), preds.end());
    preds.erase(std::unique(preds.begin(), preds.end()), preds.end());

    ConnectionRow row{graph.term(e), preds.size(), links.size()};
    if (row.total_connections >= 1) covered += 1.0;
    diversity += std::min(
        static_cast<double>(row.distinct_predicates) / kDiversityTarget, 1.0);
    richness += std::min(
        std::log(static_cast<double>(row.total_connections) + 1.0) / log_target,
        1.0);
    r.per_entity.push_back(std::move(row));
  }
  const double count = static_cast<double>(n);
  r.coverage = covered / count;
  r.diversity = diversity / count;
  r.richness = richness / count;
  r.score = 10.0 * (kCoverageWeight * r.coverage +
                    kDiversityWeight * r.diversity +
                    kRichnessWeight * r.richness);
  return r;
}

}  // namespace wiseowl
