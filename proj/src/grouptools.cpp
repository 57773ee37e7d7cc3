#include "schutzen/grouptools.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "schutzen/error.hpp"

namespace schutzen {

FiniteGroupTable::FiniteGroupTable(MonoidUniverse universe,
                                   std::vector<std::vector<int>> mult,
                                   std::vector<int> inv)
    : universe_(std::move(universe)),
      mult_(std::move(mult)),
      inv_(std::move(inv)) {}

int FiniteGroupTable::element_order(int x) const {
  int n = 1;
  int y = x;
  while (y != 0) {
    y = mult(y, x);
    ++n;
  }
  return n;
}

FiniteGroupTable enumerate_group(const Alphabet& b_alphabet,
                                 const std::vector<Rule>& relations,
                                 GroupCaps caps) {
  if (caps.max_elements <= 0) {
    throw Error("group element cap must be positive");
  }
  MonoidPresentation pres{b_alphabet, relations};
  CompleteSystem cs = knuth_bendix(pres, caps.kb);
  MonoidUniverse u = enumerate_universe(cs, caps.max_elements);
  const int n = u.size();
  std::vector<std::vector<int>> mult(n, std::vector<int>(n, -1));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      mult[x][y] = u.mul(x, y);
    }
  }
  std::vector<int> inv(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (mult[x][y] == 0 && mult[y][x] == 0) {
        inv[x] = y;
        break;
      }
    }
    if (inv[x] == -1) {
      throw NotAGroup("element " + b_alphabet.format_word(u.word(x)) +
                      " has no two-sided inverse");
    }
  }
  return FiniteGroupTable(std::move(u), std::move(mult), std::move(inv));
}

FiniteGroupTable enumerate_group(const SchutzPresentation& q, GroupCaps caps) {
  return enumerate_group(q.b_alphabet, q.nontrivial_rules(), caps);
}

namespace {

constexpr int kIsoOrderBound = 512;

struct Table {
  int n = 0;
  std::vector<std::vector<int>> mult;
  int identity = 0;

  std::vector<int> element_orders() const {
    std::vector<int> out(n);
    for (int x = 0; x < n; ++x) {
      int ord = 1;
      int y = x;
      while (y != identity) {
        y = mult[y][x];
        ++ord;
      }
      out[x] = ord;
    }
    return out;
  }
};

Table to_table(const FiniteGroupTable& g) {
  Table t;
  t.n = g.order();
  t.mult.assign(t.n, std::vector<int>(t.n, 0));
  for (int x = 0; x < t.n; ++x) {
    for (int y = 0; y < t.n; ++y) {
      t.mult[x][y] = g.mult(x, y);
    }
  }
  return t;
}

Table to_table(const PermGroup& g) {
  Table t;
  t.n = g.order();
  std::map<std::vector<int>, int> index;
  for (int k = 0; k < t.n; ++k) {
    index[g.elements[k]] = k;
  }
  t.mult.assign(t.n, std::vector<int>(t.n, 0));
  for (int x = 0; x < t.n; ++x) {
    for (int y = 0; y < t.n; ++y) {
      // x then y, acting on the right: (p.q)(k) = q(p(k)).
      std::vector<int> comp(g.degree);
      for (int k = 0; k < g.degree; ++k) {
        comp[k] = g.elements[y][g.elements[x][k]];
      }
      t.mult[x][y] = index.at(comp);
    }
  }
  std::vector<int> ident(g.degree);
  std::iota(ident.begin(), ident.end(), 0);
  t.identity = index.at(ident);
  return t;
}

// Greedy generating sequence: extend with the least element outside the
// generated subgroup.
std::vector<int> generating_sequence(const Table& t) {
  std::vector<char> in(t.n, 0);
  std::vector<int> closure{t.identity};
  in[t.identity] = 1;
  std::vector<int> gens;
  auto close_with = [&](int g) {
    if (!in[g]) {
      in[g] = 1;
      closure.push_back(g);
    }
    for (std::size_t k = 0; k < closure.size(); ++k) {
      for (std::size_t m = 0; m < closure.size(); ++m) {
        int p = t.mult[closure[k]][closure[m]];
        if (!in[p]) {
          in[p] = 1;
          closure.push_back(p);
        }
      }
    }
  };
  for (int x = 0; x < t.n; ++x) {
    if (!in[x]) {
      gens.push_back(x);
      close_with(x);
    }
  }
  return gens;
}

// Expresses every element as identity or product of generators, recording
// one derivation (parent, generator) per element.
void span(const Table& t, const std::vector<int>& gens,
          std::vector<std::pair<int, int>>& deriv) {
  deriv.assign(t.n, {-1, -1});
  std::vector<int> order{t.identity};
  std::vector<char> seen(t.n, 0);
  seen[t.identity] = 1;
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      int y = t.mult[order[k]][gens[gi]];
      if (!seen[y]) {
        seen[y] = 1;
        deriv[y] = {order[k], static_cast<int>(gi)};
        order.push_back(y);
      }
    }
  }
  for (int x = 0; x < t.n; ++x) {
    if (!seen[x]) {
      throw InternalError("generating sequence does not span");
    }
  }
}

bool tables_isomorphic(const Table& a, const Table& b) {
  if (a.n > kIsoOrderBound || b.n > kIsoOrderBound) {
    throw OrderTooLarge("isomorphism test limited to order 512");
  }
  if (a.n != b.n) {
    return false;
  }
  std::vector<int> ord_a = a.element_orders();
  std::vector<int> ord_b = b.element_orders();
  {
    std::vector<int> sa = ord_a, sb = ord_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) {
      return false;
    }
  }
  std::vector<int> gens = generating_sequence(a);
  std::vector<std::pair<int, int>> deriv;
  span(a, gens, deriv);

  // candidates per generator, by element order
  std::vector<std::vector<int>> candidates(gens.size());
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    for (int y = 0; y < b.n; ++y) {
      if (ord_b[y] == ord_a[gens[gi]]) {
        candidates[gi].push_back(y);
      }
    }
    if (candidates[gi].empty()) {
      return false;
    }
  }

  std::vector<int> image(gens.size(), -1);
  std::vector<int> f(a.n, -1);
  auto build_and_check = [&]() -> bool {
    std::fill(f.begin(), f.end(), -1);
    f[a.identity] = b.identity;
    bool progress = true;
    while (progress) {
      progress = false;
      for (int x = 0; x < a.n; ++x) {
        if (f[x] != -1) continue;
        auto [parent, gi] = deriv[x];
        if (parent == -1 || f[parent] == -1) continue;
        f[x] = b.mult[f[parent]][image[gi]];
        progress = true;
      }
    }
    std::vector<char> used(b.n, 0);
    for (int x = 0; x < a.n; ++x) {
      if (f[x] == -1 || used[f[x]]) {
        return false;
      }
      used[f[x]] = 1;
    }
    for (int x = 0; x < a.n; ++x) {
      for (int y = 0; y < a.n; ++y) {
        if (f[a.mult[x][y]] != b.mult[f[x]][f[y]]) {
          return false;
        }
      }
    }
    return true;
  };

  // backtracking over generator images
  std::vector<std::size_t> pick(gens.size(), 0);
  std::size_t level = 0;
  if (gens.empty()) {
    return a.n == 1;
  }
  while (true) {
    if (pick[level] >= candidates[level].size()) {
      if (level == 0) {
        return false;
      }
      pick[level] = 0;
      --level;
      ++pick[level];
      continue;
    }
    image[level] = candidates[level][pick[level]];
    if (level + 1 < gens.size()) {
      ++level;
      continue;
    }
    if (build_and_check()) {
      return true;
    }
    ++pick[level];
  }
}

}  // namespace

bool isomorphic(const FiniteGroupTable& g1, const PermGroup& g2) {
  return tables_isomorphic(to_table(g1), to_table(g2));
}

bool isomorphic(const FiniteGroupTable& g1, const FiniteGroupTable& g2) {
  return tables_isomorphic(to_table(g1), to_table(g2));
}

}  // namespace schutzen
