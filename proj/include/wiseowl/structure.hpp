#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "wiseowl/catalog.hpp"

namespace wiseowl {

// ---------------------------------------------------------------------------
// Connection

inline constexpr double kCoverageWeight = 0.7;
inline constexpr double kDiversityWeight = 0.2;
inline constexpr double kRichnessWeight = 0.1;
inline constexpr double kDiversityTarget = 5.0;
inline constexpr double kRichnessTarget = 10.0;

struct ConnectionRow {
  Term entity;
  std::size_t distinct_predicates = 0;
  std::size_t total_connections = 0;
};

struct ConnectionResult {
  double score = 0.0;
  double coverage = 0.0;
  double diversity = 0.0;
  double richness = 0.0;
  std::vector<ConnectionRow> per_entity;  // sorted by entity
};

enum class LinkDirection : std::uint8_t { kOut, kIn };

// One counted link of an entity: predicate, the other endpoint, direction.
struct Link {
  TermId predicate;
  TermId endpoint;
  LinkDirection direction;

  bool operator==(const Link &) const = default;
  auto operator<=>(const Link &) const = default;
};

struct EntityConnections {
  std::set<Term> distinct_predicates;
  std::size_t total = 0;
};

// The object properties of the catalog.
const IdSet &connecting_predicates(const EntityCatalog &catalog);

// Precomputes restriction-derived links (C ⊑ R or C ≡ R, R a restriction on
// a connecting property with an IRI filler F) so per-entity link sets can be
// read off directly.
class ConnectionIndex {
 public:
  ConnectionIndex(const TripleGraph &graph, const EntityCatalog &catalog);

  // Distinct links incident to `entity`, sorted.
  std::vector<Link> links(TermId entity) const;

 private:
  struct RestrictionLink {
    TermId owner;  // the restricted class
    TermId predicate;
    TermId filler;
  };

  const TripleGraph &graph_;
  const EntityCatalog &catalog_;
  std::vector<RestrictionLink> by_owner_;
  std::vector<RestrictionLink> by_filler_;
};

EntityConnections entity_connections(const TripleGraph &graph,
                                     const Term &entity,
                                     const EntityCatalog &catalog);

ConnectionResult score_connection(const TripleGraph &graph,
                                  const EntityCatalog &catalog);

// ---------------------------------------------------------------------------
// Hierarchy

inline constexpr double kDepthTarget = 5.0;
inline constexpr double kBreadthTarget = 3.0;

enum class EdgeKind : std::uint8_t {
  kSubclass,
  kRestrictionFiller,
  kIntersectionMember,
  kEquivalence,
};

struct HierarchyEdge {
  TermId parent;
  TermId child;
  EdgeKind kind;
};

// Parent -> child relation over IRI nodes. Blank class expressions are
// walked while building, never stored.
class HierarchyGraph {
 public:
  HierarchyGraph() = default;
  // Edges may contain duplicates and self-edges; both are dropped. Where an
  // edge arrives by several routes the lowest EdgeKind wins.
  explicit HierarchyGraph(std::vector<HierarchyEdge> edges);

  std::span<const HierarchyEdge> edges() const { return edges_; }
  std::span<const HierarchyEdge> children(TermId parent) const;
  const IdSet &nodes() const { return nodes_; }
  const IdSet &roots() const { return roots_; }
  bool empty() const { return edges_.empty(); }

  // owl:equivalentClass between two named classes; no edge is created.
  std::vector<std::pair<TermId, TermId>> named_equivalences;

 private:
  std::vector<HierarchyEdge> edges_;  // sorted by (parent, child)
  IdSet nodes_;
  IdSet roots_;
};

HierarchyGraph build_hierarchy(const TripleGraph &graph,
                               const EntityCatalog &catalog);

// Longest parent->child path (in edges) from any root; every node is a start
// when the graph has no root. Edges back to a node on the current path are
// skipped. Iterative.
std::size_t max_depth(const HierarchyGraph &h);

// Mean child count over nodes with at least one child.
double mean_breadth(const HierarchyGraph &h);

struct HierarchyResult {
  int score = 0;
  std::size_t max_depth = 0;
  double mean_breadth = 0.0;
  double depth_norm = 0.0;
  double breadth_norm = 0.0;
  std::size_t root_count = 0;
  std::size_t edge_count = 0;
  std::size_t node_count = 0;
  std::size_t named_equivalence_count = 0;
};

// round(10 * (depth_norm + breadth_norm) / 2), halves away from zero.
int hierarchy_score(double depth_norm, double breadth_norm);
HierarchyResult score_hierarchy(const HierarchyGraph &h);
HierarchyResult score_hierarchy(const TripleGraph &graph,
                                const EntityCatalog &catalog);

}  // namespace wiseowl
