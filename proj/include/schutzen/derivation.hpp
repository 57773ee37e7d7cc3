#pragma once

#include <utility>
#include <vector>

#include "schutzen/words.hpp"

namespace schutzen {

// A derivation-graph edge (alpha, r, eps, beta): one application of rule r
// with the directed side at position |alpha|. Its source is
// alpha.side(eps).beta and its target alpha.side(-eps).beta.
struct DGEdge {
  Word left;
  int rule_id = 0;
  int sign = +1;
  Word right;

  friend auto operator<=>(const DGEdge&, const DGEdge&) = default;
};

// A path in the derivation graph; `base` is the start vertex, so the empty
// edge sequence is the empty path at `base`.
struct DGPath {
  Word base;
  std::vector<DGEdge> edges;

  bool empty() const { return edges.empty(); }
  std::size_t size() const { return edges.size(); }

  friend auto operator<=>(const DGPath&, const DGPath&) = default;
};

using Rules = std::vector<Rule>;

Word edge_source(const DGEdge& e, const Rules& rules);
Word edge_target(const DGEdge& e, const Rules& rules);
std::pair<Word, Word> edge_endpoints(const DGEdge& e, const Rules& rules);

DGEdge inverse_edge(DGEdge e);
DGPath inverse_path(const DGPath& p, const Rules& rules);

inline const Word& path_source(const DGPath& p) { return p.base; }
Word path_target(const DGPath& p, const Rules& rules);
bool path_closed(const DGPath& p, const Rules& rules);

DGPath empty_path(Word at);
DGPath edge_path(const DGEdge& e, const Rules& rules);

// Two-sided free-monoid action g.e.d = (g alpha, r, eps, beta d).
DGEdge act(const Word& g, DGEdge e, const Word& d);
DGPath act(const Word& g, DGPath p, const Word& d);

// Concatenation p o q; q's start must match p's end (checked by validate).
DGPath concat(DGPath p, const DGPath& q);

// The closed defining path [E1,E2] for disjoint rule applications.
DGPath square(const DGEdge& e1, const DGEdge& e2, const Rules& rules);

// Arrow calculus: p down q = (p . source(q)) o (target(p) . q), and the
// up-variant with the roles of source and target exchanged.
DGPath arrow_down(const DGPath& p, const DGPath& q, const Rules& rules);
DGPath arrow_up(const DGPath& p, const DGPath& q, const Rules& rules);

// Checks that every edge is well-formed (rule id in range, sign +-1, directed
// side literally present) and that consecutive endpoints agree letter for
// letter, starting from `base`.
bool path_valid(const DGPath& p, const Rules& rules);

// Cancels adjacent mutually inverse edges until none remain.
DGPath cancel_inverse_pairs(DGPath p);

struct PathSearchCaps {
  int max_len = 512;
  long max_nodes = 200000;
};

// Breadth-first search over single rule applications, both directions, all
// positions; returns a shortest path from `from` to `to` with ties broken by
// (position, rule id, sign) expansion order. Throws SearchExhausted when the
// caps are hit before `to` is found.
DGPath path_search(const MonoidPresentation& pres, const Word& from,
                   const Word& to, PathSearchCaps caps = {});

}  // namespace schutzen
