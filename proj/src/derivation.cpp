#include "schutzen/derivation.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "schutzen/error.hpp"

namespace schutzen {

namespace {

const Word& directed_side(const Rule& r, int sign) {
  return sign == +1 ? r.lhs : r.rhs;
}

}  // namespace

Word edge_source(const DGEdge& e, const Rules& rules) {
  return cat(e.left, directed_side(rules.at(e.rule_id), e.sign), e.right);
}

Word edge_target(const DGEdge& e, const Rules& rules) {
  return cat(e.left, directed_side(rules.at(e.rule_id), -e.sign), e.right);
}

std::pair<Word, Word> edge_endpoints(const DGEdge& e, const Rules& rules) {
  return {edge_source(e, rules), edge_target(e, rules)};
}

DGEdge inverse_edge(DGEdge e) {
  e.sign = -e.sign;
  return e;
}

DGPath inverse_path(const DGPath& p, const Rules& rules) {
  DGPath out;
  out.base = path_target(p, rules);
  out.edges.reserve(p.edges.size());
  for (auto it = p.edges.rbegin(); it != p.edges.rend(); ++it) {
    out.edges.push_back(inverse_edge(*it));
  }
  return out;
}

Word path_target(const DGPath& p, const Rules& rules) {
  if (p.edges.empty()) {
    return p.base;
  }
  return edge_target(p.edges.back(), rules);
}

bool path_closed(const DGPath& p, const Rules& rules) {
  return path_source(p) == path_target(p, rules);
}

DGPath empty_path(Word at) { return DGPath{std::move(at), {}}; }

DGPath edge_path(const DGEdge& e, const Rules& rules) {
  return DGPath{edge_source(e, rules), {e}};
}

DGEdge act(const Word& g, DGEdge e, const Word& d) {
  e.left = cat(g, e.left);
  e.right = cat(e.right, d);
  return e;
}

DGPath act(const Word& g, DGPath p, const Word& d) {
  p.base = cat(g, p.base, d);
  for (DGEdge& e : p.edges) {
    e = act(g, std::move(e), d);
  }
  return p;
}

DGPath concat(DGPath p, const DGPath& q) {
  p.edges.insert(p.edges.end(), q.edges.begin(), q.edges.end());
  return p;
}

DGPath square(const DGEdge& e1, const DGEdge& e2, const Rules& rules) {
  const auto [i1, t1] = edge_endpoints(e1, rules);
  const auto [i2, t2] = edge_endpoints(e2, rules);
  DGPath out = empty_path(cat(i1, i2));
  out.edges.push_back(act({}, e1, i2));
  out.edges.push_back(act(t1, e2, {}));
  out.edges.push_back(act({}, inverse_edge(e1), t2));
  out.edges.push_back(act(i1, inverse_edge(e2), {}));
  return out;
}

DGPath arrow_down(const DGPath& p, const DGPath& q, const Rules& rules) {
  DGPath out = act({}, p, path_source(q));
  return concat(std::move(out), act(path_target(p, rules), q, {}));
}

DGPath arrow_up(const DGPath& p, const DGPath& q, const Rules& rules) {
  DGPath out = act(path_source(p), q, {});
  return concat(std::move(out), act({}, p, path_target(q, rules)));
}

bool path_valid(const DGPath& p, const Rules& rules) {
  Word cur = p.base;
  for (const DGEdge& e : p.edges) {
    if (e.rule_id < 0 || e.rule_id >= static_cast<int>(rules.size())) {
      return false;
    }
    if (e.sign != +1 && e.sign != -1) {
      return false;
    }
    const Rule& r = rules[e.rule_id];
    if (!occurs_at(cur, directed_side(r, e.sign), e.left.size())) {
      return false;
    }
    if (edge_source(e, rules) != cur) {
      return false;
    }
    cur = edge_target(e, rules);
  }
  return true;
}

DGPath cancel_inverse_pairs(DGPath p) {
  std::vector<DGEdge> stack;
  stack.reserve(p.edges.size());
  for (DGEdge& e : p.edges) {
    if (!stack.empty() && stack.back() == inverse_edge(e)) {
      stack.pop_back();
    } else {
      stack.push_back(std::move(e));
    }
  }
  p.edges = std::move(stack);
  return p;
}

DGPath path_search(const MonoidPresentation& pres, const Word& from,
                   const Word& to, PathSearchCaps caps) {
  if (from == to) {
    return empty_path(from);
  }
  const Rules& rules = pres.rules;
  // parent[w] = edge used to reach w
  std::map<Word, DGEdge> parent;
  std::map<Word, int> depth;
  std::deque<Word> queue;
  depth[from] = 0;
  queue.push_back(from);
  long visited = 1;
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    int d = depth[cur];
    if (d >= caps.max_len) {
      continue;
    }
    for (std::size_t pos = 0; pos <= cur.size(); ++pos) {
      for (int ri = 0; ri < static_cast<int>(rules.size()); ++ri) {
        const Rule& r = rules[ri];
        for (int sign : {+1, -1}) {
          const Word& side = sign == +1 ? r.lhs : r.rhs;
          if (!occurs_at(cur, side, pos)) {
            continue;
          }
          DGEdge e{Word(cur.begin(), cur.begin() + pos), ri, sign,
                   Word(cur.begin() + pos + side.size(), cur.end())};
          Word next = edge_target(e, rules);
          if (depth.count(next)) {
            continue;
          }
          depth[next] = d + 1;
          parent.emplace(next, std::move(e));
          if (next == to) {
            std::vector<DGEdge> rev;
            Word at = to;
            while (at != from) {
              const DGEdge& pe = parent.at(at);
              rev.push_back(pe);
              at = edge_source(pe, rules);
            }
            DGPath out = empty_path(from);
            out.edges.assign(rev.rbegin(), rev.rend());
            return out;
          }
          if (++visited > caps.max_nodes) {
            throw SearchExhausted("path search exceeded " +
                                  std::to_string(caps.max_nodes) + " nodes");
          }
          queue.push_back(std::move(next));
        }
      }
    }
  }
  throw SearchExhausted("no path found within caps");
}

}  // namespace schutzen
