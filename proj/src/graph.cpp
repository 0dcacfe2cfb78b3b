#include "wiseowl/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wiseowl::rdf {

namespace {

struct PosLess {
  bool operator()(const TripleIds &a, const TripleIds &b) const {
    if (a.p != b.p) return a.p < b.p;
    if (a.o != b.o) return a.o < b.o;
    return a.s < b.s;
  }
};

struct OspLess {
  bool operator()(const TripleIds &a, const TripleIds &b) const {
    if (a.o != b.o) return a.o < b.o;
    if (a.s != b.s) return a.s < b.s;
    return a.p < b.p;
  }
};

template <typename Key>
std::vector<std::uint32_t> offsets(const std::vector<TripleIds> &sorted,
                                   std::size_t term_count, Key key) {
  std::vector<std::uint32_t> out(term_count + 1, 0);
  for (const auto &t : sorted) ++out[raw(key(t)) + 1];
  std::partial_sum(out.begin(), out.end(), out.begin());
  return out;
}

std::span<const TripleIds> range(const std::vector<TripleIds> &v,
                                 const std::vector<std::uint32_t> &off,
                                 TermId id) {
  auto i = raw(id);
  if (i + 1 >= off.size()) return {};
  return std::span<const TripleIds>(v).subspan(off[i], off[i + 1] - off[i]);
}

}  // namespace

std::optional<TermId> TripleGraph::find(const Term &t) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), t);
  if (it == terms_.end() || !(*it == t)) return std::nullopt;
  return TermId(static_cast<std::uint32_t>(it - terms_.begin()));
}

Triple TripleGraph::materialize(const TripleIds &t) const {
  return Triple{term(t.s), term(t.p), term(t.o)};
}

std::span<const TripleIds> TripleGraph::with_subject(TermId s) const {
  return range(spo_, s_offsets_, s);
}

std::span<const TripleIds> TripleGraph::with_subject_predicate(
    TermId s, TermId p) const {
  auto r = with_subject(s);
  auto lo = std::lower_bound(r.begin(), r.end(), p,
                             [](const TripleIds &t, TermId v) { return t.p < v; });
  auto hi = std::upper_bound(lo, r.end(), p,
                             [](TermId v, const TripleIds &t) { return v < t.p; });
  return std::span<const TripleIds>(lo, hi);
}

std::span<const TripleIds> TripleGraph::with_predicate(TermId p) const {
  return range(pos_, p_offsets_, p);
}

std::span<const TripleIds> TripleGraph::with_predicate_object(TermId p,
                                                              TermId o) const {
  auto r = with_predicate(p);
  auto lo = std::lower_bound(r.begin(), r.end(), o,
                             [](const TripleIds &t, TermId v) { return t.o < v; });
  auto hi = std::upper_bound(lo, r.end(), o,
                             [](TermId v, const TripleIds &t) { return v < t.o; });
  return std::span<const TripleIds>(lo, hi);
}

std::span<const TripleIds> TripleGraph::with_object(TermId o) const {
  return range(osp_, o_offsets_, o);
}

bool TripleGraph::contains(TermId s, TermId p, TermId o) const {
  auto r = with_subject_predicate(s, p);
  return std::binary_search(
      r.begin(), r.end(), TripleIds{s, p, o});
}

std::vector<TripleIds> TripleGraph::match_ids(std::optional<TermId> s,
                                              std::optional<TermId> p,
                                              std::optional<TermId> o) const {
  std::span<const TripleIds> candidates;
  if (s && p) {
    candidates = with_subject_predicate(*s, *p);
  } else if (s) {
    candidates = with_subject(*s);
  } else if (p && o) {
    candidates = with_predicate_object(*p, *o);
  } else if (p) {
    candidates = with_predicate(*p);
  } else if (o) {
    candidates = with_object(*o);
  } else {
    candidates = spo_;
  }
  std::vector<TripleIds> out;
  for (const auto &t : candidates) {
    if ((!s || t.s == *s) && (!p || t.p == *p) && (!o || t.o == *o)) {
      out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Triple> TripleGraph::match(const std::optional<Term> &s,
                                       const std::optional<Term> &p,
                                       const std::optional<Term> &o) const {
  std::optional<TermId> sid, pid, oid;
  // A bound term absent from the dictionary cannot match anything.
  if (s && !(sid = find(*s))) return {};
  if (p && !(pid = find(*p))) return {};
  if (o && !(oid = find(*o))) return {};
  std::vector<Triple> out;
  for (const auto &t : match_ids(sid, pid, oid)) out.push_back(materialize(t));
  return out;
}

std::vector<Term> TripleGraph::objects(const Term &s, const Term &p) const {
  std::vector<Term> out;
  auto sid = find(s);
  auto pid = find(p);
  if (!sid || !pid) return out;
  for (const auto &t : with_subject_predicate(*sid, *pid)) {
    out.push_back(term(t.o));
  }
  return out;
}

std::vector<Term> TripleGraph::subjects(const Term &p, const Term &o) const {
  std::vector<Term> out;
  auto pid = find(p);
  auto oid = find(o);
  if (!pid || !oid) return out;
  for (const auto &t : with_predicate_object(*pid, *oid)) {
    out.push_back(term(t.s));
  }
  return out;
}

std::uint32_t GraphBuilder::intern(const Term &t) {
  auto [it, inserted] =
      lookup_.try_emplace(t, static_cast<std::uint32_t>(terms_.size()));
  if (inserted) {
    if (terms_.size() == UINT32_MAX) {
      throw std::length_error("term dictionary overflow");
    }
    terms_.push_back(t);
  }
  return it->second;
}

void GraphBuilder::add(const Term &s, const Term &p, const Term &o) {
  if (s.is_literal()) throw std::invalid_argument("literal subject");
  if (!p.is_iri()) throw std::invalid_argument("predicate must be an IRI");
  triples_.push_back(TripleIds{TermId(intern(s)), TermId(intern(p)),
                               TermId(intern(o))});
}

TripleGraph GraphBuilder::build() && {
  lookup_.clear();
  lookup_.rehash(0);

  const std::size_t n = terms_.size();
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return terms_[a] < terms_[b];
  });
  std::vector<std::uint32_t> remap(n);
  for (std::uint32_t i = 0; i < n; ++i) remap[order[i]] = i;

  TripleGraph g;
  g.terms_.reserve(n);
  for (auto idx : order) g.terms_.push_back(std::move(terms_[idx]));
  terms_.clear();
  terms_.shrink_to_fit();

  for (auto &t : triples_) {
    t = TripleIds{TermId(remap[raw(t.s)]), TermId(remap[raw(t.p)]),
                  TermId(remap[raw(t.o)])};
  }
  remap = {};
  order = {};
  std::sort(triples_.begin(), triples_.end());
  triples_.erase(std::unique(triples_.begin(), triples_.end()), triples_.end());
  triples_.shrink_to_fit();

  g.spo_ = std::move(triples_);
  g.pos_ = g.spo_;
  std::sort(g.pos_.begin(), g.pos_.end(), PosLess{});
  g.osp_ = g.spo_;
  std::sort(g.osp_.begin(), g.osp_.end(), OspLess{});

  g.s_offsets_ = offsets(g.spo_, n, [](const TripleIds &t) { return t.s; });
  g.p_offsets_ = offsets(g.pos_, n, [](const TripleIds &t) { return t.p; });
  g.o_offsets_ = offsets(g.osp_, n, [](const TripleIds &t) { return t.o; });
  g.prefixes_ = std::move(prefixes_);
  return g;
}

TripleGraph make_graph(const std::vector<Triple> &triples) {
  GraphBuilder b;
  for (const auto &t : triples) b.add(t);
  return std::move(b).build();
}

}  // namespace wiseowl::rdf
