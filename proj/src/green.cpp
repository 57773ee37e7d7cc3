#include "schutzen/green.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "schutzen/error.hpp"

namespace schutzen {

namespace {

// Kosaraju strong components; ids renumbered by least member.
std::vector<int> strong_components(
    int n, const std::vector<std::vector<int>>& out_edges) {
  std::vector<std::vector<int>> in_edges(n);
  for (int x = 0; x < n; ++x) {
    for (int y : out_edges[x]) {
      in_edges[y].push_back(x);
    }
  }
  std::vector<char> seen(n, 0);
  std::vector<int> order;
  order.reserve(n);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    // iterative post-order
    std::vector<std::pair<int, std::size_t>> stack{{s, 0}};
    seen[s] = 1;
    while (!stack.empty()) {
      auto& [x, k] = stack.back();
      if (k < out_edges[x].size()) {
        int y = out_edges[x][k++];
        if (!seen[y]) {
          seen[y] = 1;
          stack.emplace_back(y, 0);
        }
      } else {
        order.push_back(x);
        stack.pop_back();
      }
    }
  }
  std::vector<int> comp(n, -1);
  int next = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (comp[*it] != -1) continue;
    std::deque<int> queue{*it};
    comp[*it] = next;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int y : in_edges[x]) {
        if (comp[y] == -1) {
          comp[y] = next;
          queue.push_back(y);
        }
      }
    }
    ++next;
  }
  // renumber by least member
  std::vector<int> least(next, n);
  for (int x = 0; x < n; ++x) {
    least[comp[x]] = std::min(least[comp[x]], x);
  }
  std::vector<int> by_least(next);
  for (int c = 0; c < next; ++c) by_least[c] = c;
  std::sort(by_least.begin(), by_least.end(),
            [&](int a, int b) { return least[a] < least[b]; });
  std::vector<int> rank(next);
  for (int k = 0; k < next; ++k) rank[by_least[k]] = k;
  for (int x = 0; x < n; ++x) comp[x] = rank[comp[x]];
  return comp;
}

std::vector<std::vector<int>> collect_classes(const std::vector<int>& of) {
  int m = 0;
  for (int c : of) m = std::max(m, c + 1);
  std::vector<std::vector<int>> classes(m);
  for (int x = 0; x < static_cast<int>(of.size()); ++x) {
    classes[of[x]].push_back(x);
  }
  return classes;
}

}  // namespace

GreenStructure compute_green(const MonoidUniverse& u) {
  const int n = u.size();
  const int na = static_cast<int>(u.alphabet().size());
  std::vector<std::vector<int>> right_edges(n), left_edges(n);
  for (int x = 0; x < n; ++x) {
    for (Letter a = 0; a < na; ++a) {
      right_edges[x].push_back(u.right(x, a));
      left_edges[x].push_back(u.left(a, x));
    }
  }
  GreenStructure g;
  g.r_class_of = strong_components(n, right_edges);
  g.l_class_of = strong_components(n, left_edges);
  g.r_classes = collect_classes(g.r_class_of);
  g.l_classes = collect_classes(g.l_class_of);

  // H = R meet L; ids by least element of each intersection class.
  std::map<std::pair<int, int>, std::vector<int>> cells;
  for (int x = 0; x < n; ++x) {
    cells[{g.r_class_of[x], g.l_class_of[x]}].push_back(x);
  }
  std::vector<const std::vector<int>*> ordered;
  for (auto& [key, members] : cells) {
    ordered.push_back(&members);
  }
  std::sort(ordered.begin(), ordered.end(),
            [](auto* a, auto* b) { return a->front() < b->front(); });
  g.h_class_of.assign(n, -1);
  for (std::size_t c = 0; c < ordered.size(); ++c) {
    g.h_classes.push_back(*ordered[c]);
    for (int x : *ordered[c]) {
      g.h_class_of[x] = static_cast<int>(c);
    }
  }
  return g;
}

LambdaAction lambda_action(const MonoidUniverse& u, const GreenStructure& g,
                           int h_class_id) {
  const int rep = g.h_classes.at(h_class_id).front();
  const int r_id = g.r_class_of[rep];
  LambdaAction act;
  act.h_class_ids.push_back(h_class_id);
  std::set<int> others;
  for (int x : g.r_classes[r_id]) {
    if (g.h_class_of[x] != h_class_id) {
      others.insert(g.h_class_of[x]);
    }
  }
  act.h_class_ids.insert(act.h_class_ids.end(), others.begin(), others.end());
  std::map<int, int> lambda_of;
  for (int lam = 0; lam < act.size(); ++lam) {
    lambda_of[act.h_class_ids[lam]] = lam;
  }
  const int na = static_cast<int>(u.alphabet().size());
  act.table.assign(act.size(), std::vector<int>(na, kDead));
  for (int lam = 0; lam < act.size(); ++lam) {
    const int x = g.h_classes[act.h_class_ids[lam]].front();
    for (Letter a = 0; a < na; ++a) {
      const int y = u.right(x, a);
      if (g.r_class_of[y] == r_id) {
        act.table[lam][a] = lambda_of.at(g.h_class_of[y]);
      }
    }
  }
  return act;
}

bool StarAction::in_J(int i) const {
  return i != kDead && in_K.at(i);
}

StarAction star_action(const MonoidUniverse& u, const GreenStructure& g,
                       int h_class_id, const Word& e_word) {
  const int h_elt = g.h_classes.at(h_class_id).front();
  const int e_elt = u.element_of(e_word);
  if (u.mul(h_elt, e_elt) != h_elt) {
    throw NotPointwiseStabilizer(
        "stabilizer word does not fix the chosen element of H");
  }
  const int n_r = static_cast<int>(g.r_classes.size());
  const int na = static_cast<int>(u.alphabet().size());

  // The left action of letters on all R-classes; well-defined since R is a
  // left congruence.
  std::vector<std::vector<int>> class_act(na, std::vector<int>(n_r, -1));
  for (int c = 0; c < n_r; ++c) {
    const int x = g.r_classes[c].front();
    for (Letter a = 0; a < na; ++a) {
      class_act[a][c] = g.r_class_of[u.left(a, x)];
    }
  }

  const int omega_class = g.r_class_of[g.h_classes[h_class_id].front()];
  const int eta_class = g.r_class_of[e_elt];
  const int one_class = g.r_class_of[0];

  // I: classes from which omega_class is reachable.
  std::vector<char> in_I(n_r, 0);
  {
    std::vector<std::vector<int>> rev(n_r);
    for (Letter a = 0; a < na; ++a) {
      for (int c = 0; c < n_r; ++c) {
        rev[class_act[a][c]].push_back(c);
      }
    }
    std::deque<int> queue{omega_class};
    in_I[omega_class] = 1;
    while (!queue.empty()) {
      int c = queue.front();
      queue.pop_front();
      for (int p : rev[c]) {
        if (!in_I[p]) {
          in_I[p] = 1;
          queue.push_back(p);
        }
      }
    }
  }
  // K: classes reachable from eta_class.
  std::vector<char> reach_K(n_r, 0);
  {
    std::deque<int> queue{eta_class};
    reach_K[eta_class] = 1;
    while (!queue.empty()) {
      int c = queue.front();
      queue.pop_front();
      for (Letter a = 0; a < na; ++a) {
        int t = class_act[a][c];
        if (!reach_K[t]) {
          reach_K[t] = 1;
          queue.push_back(t);
        }
      }
    }
  }

  StarAction star;
  for (int c = 0; c < n_r; ++c) {
    if (in_I[c]) {
      star.r_class_ids.push_back(c);
    }
  }
  star.index_of_r_class.assign(n_r, kDead);
  for (int i = 0; i < star.size(); ++i) {
    star.index_of_r_class[star.r_class_ids[i]] = i;
  }
  star.in_K.assign(star.size(), 0);
  for (int i = 0; i < star.size(); ++i) {
    if (reach_K[star.r_class_ids[i]]) {
      star.in_K[i] = 1;
      star.J.push_back(i);
    }
  }
  star.table.assign(na, std::vector<int>(star.size(), kDead));
  for (Letter a = 0; a < na; ++a) {
    for (int i = 0; i < star.size(); ++i) {
      star.table[a][i] = star.index_of_r_class[class_act[a][star.r_class_ids[i]]];
    }
  }
  star.one = star.index_of_r_class[one_class];
  star.omega = star.index_of_r_class[omega_class];
  star.eta = star.index_of_r_class[eta_class];
  if (star.omega == kDead || star.eta == kDead || star.one == kDead) {
    throw InternalError("distinguished R-class missing from inverse orbit");
  }
  if (!star.in_J(star.omega)) {
    throw InternalError("omega not in J");
  }
  return star;
}

PermGroup schutz_direct(const MonoidUniverse& u, const GreenStructure& g,
                        int h_class_id) {
  PermGroup pg;
  pg.h_elements = g.h_classes.at(h_class_id);
  pg.degree = static_cast<int>(pg.h_elements.size());
  std::map<int, int> position;
  for (int k = 0; k < pg.degree; ++k) {
    position[pg.h_elements[k]] = k;
  }
  std::set<std::vector<int>> perms;
  for (int s = 0; s < u.size(); ++s) {
    std::vector<int> image(pg.degree);
    bool stays = true;
    for (int k = 0; k < pg.degree && stays; ++k) {
      const int y = u.mul(pg.h_elements[k], s);
      auto it = position.find(y);
      if (it == position.end()) {
        stays = false;
      } else {
        image[k] = it->second;
      }
    }
    if (!stays) {
      continue;
    }
    std::vector<char> hit(pg.degree, 0);
    for (int v : image) hit[v] = 1;
    if (std::find(hit.begin(), hit.end(), 0) != hit.end()) {
      throw InternalError("stabilizer element acts non-bijectively on H");
    }
    perms.insert(std::move(image));
  }
  pg.elements.assign(perms.begin(), perms.end());
  pg.generators = pg.elements;
  return pg;
}

bool h_class_in_left_ideal(const MonoidUniverse& u, const GreenStructure& g,
                           int h_class_id, int r_elt) {
  const int target = g.h_classes.at(h_class_id).front();
  std::vector<char> seen(u.size(), 0);
  std::deque<int> queue{r_elt};
  seen[r_elt] = 1;
  const int na = static_cast<int>(u.alphabet().size());
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    if (x == target) {
      return true;
    }
    for (Letter a = 0; a < na; ++a) {
      int y = u.left(a, x);
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }
  return false;
}

}  // namespace schutzen
