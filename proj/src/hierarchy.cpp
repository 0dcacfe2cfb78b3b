#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "wiseowl/structure.hpp"
#include "wiseowl/vocab.hpp"

namespace wiseowl {

namespace {

// Vocabulary ids needed while walking class expressions; absent terms stay
// nullopt.
struct Vocab {
  explicit Vocab(const TripleGraph &g) {
    auto id = [&](std::string_view iri) {
      return g.find(Term::Iri(std::string(iri)));
    };
    sub_class_of = id(vocab::rdfs::kSubClassOf);
    equivalent_class = id(vocab::owl::kEquivalentClass);
    on_property = id(vocab::owl::kOnProperty);
    intersection_of = id(vocab::owl::kIntersectionOf);
    first = id(vocab::rdf::kFirst);
    rest = id(vocab::rdf::kRest);
    nil = id(vocab::rdf::kNil);
    for (auto iri : {vocab::owl::kSomeValuesFrom, vocab::owl::kAllValuesFrom,
                     vocab::owl::kHasValue}) {
      if (auto f = id(iri)) fillers.push_back(*f);
    }
  }

  std::optional<TermId> sub_class_of, equivalent_class, on_property,
      intersection_of, first, rest, nil;
  std::vector<TermId> fillers;
};

class Builder {
 public:
  Builder(const TripleGraph &g) : g_(g), v_(g) {}

  bool is_restriction(TermId node) const {
    return v_.on_property && !g_.with_subject_predicate(node, *v_.on_property).empty();
  }

  std::optional<TermId> intersection_list(TermId node) const {
    if (!v_.intersection_of) return std::nullopt;
    auto r = g_.with_subject_predicate(node, *v_.intersection_of);
    if (r.empty()) return std::nullopt;
    return r.front().o;
  }

  void add_fillers(TermId restriction, TermId child, EdgeKind kind) {
    for (auto fp : v_.fillers) {
      for (const auto &t : g_.with_subject_predicate(restriction, fp)) {
        if (g_.term(t.o).is_iri()) edges_.push_back({t.o, child, kind});
      }
    }
  }

  // Named members become parents; restriction members contribute fillers.
  void add_intersection_members(TermId list, TermId child) {
    std::unordered_set<std::uint32_t> seen;
    std::optional<TermId> cell = list;
    while (cell && cell != v_.nil && seen.insert(raw(*cell)).second) {
      if (v_.first) {
        for (const auto &t : g_.with_subject_predicate(*cell, *v_.first)) {
          const Term &member = g_.term(t.o);
          if (member.is_iri()) {
            edges_.push_back({t.o, child, EdgeKind::kIntersectionMember});
          } else if (member.is_blank() && is_restriction(t.o)) {
            add_fillers(t.o, child, EdgeKind::kIntersectionMember);
          }
        }
      }
      std::optional<TermId> next;
      if (v_.rest) {
        auto r = g_.with_subject_predicate(*cell, *v_.rest);
        if (!r.empty()) next = r.front().o;
      }
      cell = next;
    }
  }

  HierarchyGraph build() {
    if (v_.sub_class_of) {
      for (const auto &t : g_.with_predicate(*v_.sub_class_of)) {
        if (!g_.term(t.s).is_iri()) continue;
        const Term &super = g_.term(t.o);
        if (super.is_iri()) {
          edges_.push_back({t.o, t.s, EdgeKind::kSubclass});
        } else if (super.is_blank()) {
          if (is_restriction(t.o)) add_fillers(t.o, t.s, EdgeKind::kRestrictionFiller);
          if (auto list = intersection_list(t.o)) add_intersection_members(*list, t.s);
        }
      }
    }
    std::vector<std::pair<TermId, TermId>> named;
    if (v_.equivalent_class) {
      for (const auto &t : g_.with_predicate(*v_.equivalent_class)) {
        TermId cls = t.s, expr = t.o;
        if (!g_.term(cls).is_iri() && g_.term(expr).is_iri()) std::swap(cls, expr);
        if (!g_.term(cls).is_iri()) continue;
        const Term &x = g_.term(expr);
        if (x.is_iri()) {
          named.emplace_back(std::min(cls, expr), std::max(cls, expr));
        } else if (x.is_blank()) {
          if (auto list = intersection_list(expr)) add_intersection_members(*list, cls);
          if (is_restriction(expr)) add_fillers(expr, cls, EdgeKind::kEquivalence);
        }
      }
    }
    HierarchyGraph h(std::move(edges_));
    std::sort(named.begin(), named.end());
    named.erase(std::unique(named.begin(), named.end()), named.end());
    h.named_equivalences = std::move(named);
    return h;
  }

 private:
  const TripleGraph &g_;
  Vocab v_;
  std::vector<HierarchyEdge> edges_;
};

}  // namespace

HierarchyGraph::HierarchyGraph(std::vector<HierarchyEdge> edges) {
  std::erase_if(edges, [](const HierarchyEdge &e) { return e.parent == e.child; });
  std::sort(edges.begin(), edges.end(), [](const auto &a, const auto &b) {
    return std::tie(a.parent, a.child, a.kind) <
           std::tie(b.parent, b.child, b.kind);
  });
  edges.erase(std::unique(edges.begin(), edges.end(),
                          [](const auto &a, const auto &b) {
                            return a.parent == b.parent && a.child == b.child;
                          }),
              edges.end());
  edges_ = std::move(edges);

  IdSet children;
  for (const auto &e : edges_) {
    nodes_.push_back(e.parent);
    nodes_.push_back(e.child);
    children.push_back(e.child);
  }
  std::sort(nodes_.begin(), nodes_.end());
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
  std::sort(children.begin(), children.end());
  children.erase(std::unique(children.begin(), children.end()), children.end());
  std::set_difference(nodes_.begin(), nodes_.end(), children.begin(),
                      children.end(), std::back_inserter(roots_));
}

std::span<const HierarchyEdge> HierarchyGraph::children(TermId parent) const {
  auto lo = std::partition_point(edges_.begin(), edges_.end(),
                                 [&](const HierarchyEdge &e) { return e.parent < parent; });
  auto hi = std::partition_point(lo, edges_.end(),
                                 [&](const HierarchyEdge &e) { return e.parent == parent; });
  return {lo, hi};
}

HierarchyGraph build_hierarchy(const TripleGraph &graph, const EntityCatalog &) {
  return Builder(graph).build();
}

std::size_t max_depth(const HierarchyGraph &h) {
  if (h.empty()) return 0;
  const IdSet &nodes = h.nodes();
  auto index_of = [&](TermId id) {
    return static_cast<std::size_t>(
        std::lower_bound(nodes.begin(), nodes.end(), id) - nodes.begin());
  };
  enum class Mark : std::uint8_t { kWhite, kGray, kBlack };
  std::vector<Mark> mark(nodes.size(), Mark::kWhite);
  std::vector<std::size_t> depth(nodes.size(), 0);

  struct Frame {
    std::size_t node;
    std::span<const HierarchyEdge> kids;
    std::size_t next = 0;
  };
  std::vector<Frame> stack;
  std::size_t best = 0;

  const IdSet &starts = h.roots().empty() ? nodes : h.roots();
  for (TermId start : starts) {
    std::size_t s = index_of(start);
    if (mark[s] != Mark::kWhite) {
      best = std::max(best, depth[s]);
      continue;
    }
    mark[s] = Mark::kGray;
    stack.push_back({s, h.children(start)});
    while (!stack.empty()) {
      Frame &top = stack.back();
      if (top.next < top.kids.size()) {
        std::size_t c = index_of(top.kids[top.next++].child);
        if (mark[c] == Mark::kWhite) {
          mark[c] = Mark::kGray;
          stack.push_back({c, h.children(nodes[c])});
        }
        continue;
      }
      // A child still gray is an ancestor on the current path: skip it.
      std::size_t d = 0;
      for (const auto &e : top.kids) {
        std::size_t c = index_of(e.child);
        if (mark[c] == Mark::kBlack) d = std::max(d, depth[c] + 1);
      }
      depth[top.node] = d;
      mark[top.node] = Mark::kBlack;
      stack.pop_back();
    }
    best = std::max(best, depth[s]);
  }
  return best;
}

double mean_breadth(const HierarchyGraph &h) {
  std::size_t parents = 0;
  const auto edges = h.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i == 0 || edges[i].parent != edges[i - 1].parent) ++parents;
  }
  if (parents == 0) return 0.0;
  return static_cast<double>(edges.size()) / static_cast<double>(parents);
}

int hierarchy_score(double depth_norm, double breadth_norm) {
  double x = 10.0 * (depth_norm + breadth_norm) / 2.0;
  // Nudge by 1e-9 so values that are exact halves in decimal round up even
  // after binary representation error (e.g. 6.4999999999).
  long r = std::lround(x + 1e-9);
  return static_cast<int>(std::clamp(r, 0L, 10L));
}

HierarchyResult score_hierarchy(const HierarchyGraph &h) {
  HierarchyResult r;
  r.max_depth = max_depth(h);
  r.mean_breadth = mean_breadth(h);
  r.depth_norm = std::min(static_cast<double>(r.max_depth) / kDepthTarget, 1.0);
  r.breadth_norm = std::min(r.mean_breadth / kBreadthTarget, 1.0);
  r.score = h.empty() ? 0 : hierarchy_score(r.depth_norm, r.breadth_norm);
  r.root_count = h.roots().size();
  r.edge_count = h.edges().size();
  r.node_count = h.nodes().size();
  r.named_equivalence_count = h.named_equivalences.size();
  return r;
}

HierarchyResult score_hierarchy(const TripleGraph &graph,
                                const EntityCatalog &catalog) {
  return score_hierarchy(build_hierarchy(graph, catalog));
}

}  // namespace wiseowl
