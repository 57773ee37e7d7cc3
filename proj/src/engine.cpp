#include "schutzen/engine.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "schutzen/error.hpp"

namespace schutzen {

namespace {

// Reduce w with an explicit rule list: scan left to right, rewrite at the
// first (position, rule) match, back up past the replacement and continue.
// Any strategy reaches the same normal form once the system is complete; this
// one is also deterministic for systems mid-completion.
Word reduce_with(Word w, const std::vector<Rule>& rules) {
  if (rules.empty()) {
    return w;
  }
  std::size_t back = 0;  // new redexes start at most max-lhs letters left
  for (const Rule& r : rules) {
    back = std::max(back, r.lhs.size());
  }
  std::size_t pos = 0;
  while (pos < w.size()) {
    bool rewrote = false;
    for (const Rule& r : rules) {
      if (occurs_at(w, r.lhs, pos)) {
        Word next;
        next.reserve(w.size() - r.lhs.size() + r.rhs.size());
        next.insert(next.end(), w.begin(), w.begin() + pos);
        next.insert(next.end(), r.rhs.begin(), r.rhs.end());
        next.insert(next.end(), w.begin() + pos + r.lhs.size(), w.end());
        w = std::move(next);
        pos = pos > back ? pos - back : 0;
        rewrote = true;
        break;
      }
    }
    if (!rewrote) {
      ++pos;
    }
  }
  return w;
}

void check_lengths(const Word& u, const Word& v, const CompletionLimits& lim) {
  if (static_cast<int>(u.size()) > lim.max_word_len ||
      static_cast<int>(v.size()) > lim.max_word_len) {
    throw LimitExceeded("derived rule exceeds max word length " +
                        std::to_string(lim.max_word_len));
  }
}

}  // namespace

CompleteSystem::CompleteSystem(Alphabet alphabet,
                               std::vector<Rule> oriented_rules,
                               MonoidPresentation origin)
    : alphabet_(std::move(alphabet)),
      rules_(std::move(oriented_rules)),
      origin_(std::move(origin)) {
  for (const Rule& r : rules_) {
    if (!shortlex_less(r.rhs, r.lhs)) {
      throw InternalError("complete system rule is not shortlex oriented");
    }
  }
}

MonoidPresentation CompleteSystem::as_presentation() const {
  return MonoidPresentation{alphabet_, rules_};
}

Word CompleteSystem::reduce(Word w) const {
  return reduce_with(std::move(w), rules_);
}

bool CompleteSystem::equal(const Word& u, const Word& v) const {
  return reduce(u) == reduce(v);
}

CompleteSystem knuth_bendix(const MonoidPresentation& p,
                            CompletionLimits limits) {
  if (limits.max_rules <= 0 || limits.max_word_len <= 0) {
    throw Error("completion limits must be positive");
  }
  std::vector<Rule> rules;  // active oriented rules
  std::deque<std::pair<Word, Word>> pending;
  for (const Rule& r : p.rules) {
    pending.emplace_back(r.lhs, r.rhs);
  }

  auto orient = [&](Word u, Word v) -> Rule {
    if (shortlex_less(u, v)) {
      std::swap(u, v);
    }
    if (u == v) {
      // Distinct normal forms were checked before orienting; unreachable.
      throw InternalError("unorientable equation with identical sides");
    }
    return Rule{std::move(u), std::move(v), 0};
  };

  // Queue the critical pairs of (r1 at the left of the overlap, r2 at the
  // right or inside); both reducts of the common superposition word.
  auto queue_overlaps = [&](const Rule& r1, const Rule& r2) {
    const Word& l1 = r1.lhs;
    const Word& l2 = r2.lhs;
    // Proper overlap: a nonempty proper suffix of l1 is a prefix of l2.
    for (std::size_t k = 1; k < l1.size(); ++k) {
      std::size_t olap = l1.size() - k;
      if (olap >= l2.size()) {
        continue;  // handled as inclusion below
      }
      if (!std::equal(l1.begin() + k, l1.end(), l2.begin())) {
        continue;
      }
      Word w(l1.begin(), l1.begin() + k);
      w.insert(w.end(), l2.begin(), l2.end());
      // reduct via r1 at 0, via r2 at k
      Word a = cat(r1.rhs, Word(w.begin() + l1.size(), w.end()));
      Word b = cat(Word(w.begin(), w.begin() + k), r2.rhs);
      pending.emplace_back(std::move(a), std::move(b));
    }
    // Inclusion: l2 a factor of l1 (distinct rules only).
    if (&r1 != &r2 && l2.size() <= l1.size()) {
      for (std::size_t pos = 0; pos + l2.size() <= l1.size(); ++pos) {
        if (!occurs_at(l1, l2, pos)) {
          continue;
        }
        Word b;
        b.insert(b.end(), l1.begin(), l1.begin() + pos);
        b.insert(b.end(), r2.rhs.begin(), r2.rhs.end());
        b.insert(b.end(), l1.begin() + pos + l2.size(), l1.end());
        pending.emplace_back(r1.rhs, std::move(b));
      }
    }
  };

  while (!pending.empty()) {
    auto [u, v] = std::move(pending.front());
    pending.pop_front();
    Word nu = reduce_with(std::move(u), rules);
    Word nv = reduce_with(std::move(v), rules);
    if (nu == nv) {
      continue;
    }
    check_lengths(nu, nv, limits);
    Rule fresh = orient(std::move(nu), std::move(nv));

    // Inter-reduction: rules whose lhs the fresh rule touches are re-queued
    // as equations; surviving rhs's are re-reduced.
    std::vector<Rule> kept;
    kept.reserve(rules.size() + 1);
    for (Rule& r : rules) {
      bool lhs_reducible = false;
      for (std::size_t pos = 0; pos + fresh.lhs.size() <= r.lhs.size();
           ++pos) {
        if (occurs_at(r.lhs, fresh.lhs, pos)) {
          lhs_reducible = true;
          break;
        }
      }
      if (lhs_reducible) {
        pending.emplace_back(std::move(r.lhs), std::move(r.rhs));
      } else {
        kept.push_back(std::move(r));
      }
    }
    rules = std::move(kept);
    rules.push_back(fresh);
    if (static_cast<int>(rules.size()) > limits.max_rules) {
      throw LimitExceeded("completion exceeded max rules " +
                          std::to_string(limits.max_rules));
    }
    for (Rule& r : rules) {
      Word reduced = reduce_with(r.rhs, rules);
      r.rhs = std::move(reduced);
    }
    const Rule& added = rules.back();
    for (const Rule& r : rules) {
      queue_overlaps(added, r);
      if (&r != &added) {
        queue_overlaps(r, added);
      }
    }
  }

  std::sort(rules.begin(), rules.end(), [](const Rule& a, const Rule& b) {
    if (a.lhs != b.lhs) {
      return shortlex_less(a.lhs, b.lhs);
    }
    return shortlex_less(a.rhs, b.rhs);
  });
  for (std::size_t i = 0; i < rules.size(); ++i) {
    rules[i].id = static_cast<int>(i);
  }
  return CompleteSystem(p.alphabet, std::move(rules), p);
}

MonoidUniverse::MonoidUniverse(CompleteSystem cs, std::vector<Word> elements)
    : cs_(std::move(cs)), elements_(std::move(elements)) {
  const int n = size();
  const int na = static_cast<int>(cs_.alphabet().size());
  for (int x = 0; x < n; ++x) {
    index_.emplace(elements_[x], x);
  }
  right_.assign(n, std::vector<int>(na, -1));
  left_.assign(na, std::vector<int>(n, -1));
  for (int x = 0; x < n; ++x) {
    for (Letter a = 0; a < na; ++a) {
      Word r = elements_[x];
      r.push_back(a);
      right_[x][a] = index_.at(cs_.reduce(std::move(r)));
      Word l;
      l.push_back(a);
      l.insert(l.end(), elements_[x].begin(), elements_[x].end());
      left_[a][x] = index_.at(cs_.reduce(std::move(l)));
    }
  }
}

int MonoidUniverse::right_word(int x, const Word& w) const {
  for (Letter a : w) {
    x = right_[x][a];
  }
  return x;
}

int MonoidUniverse::left_word(const Word& w, int x) const {
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    x = left_[*it][x];
  }
  return x;
}

int MonoidUniverse::element_of(const Word& w) const {
  return index_.at(cs_.reduce(w));
}

MonoidUniverse enumerate_universe(const CompleteSystem& cs, int cap) {
  if (cap <= 0) {
    throw Error("element cap must be positive");
  }
  std::vector<Word> elements;
  std::set<Word> seen;
  elements.push_back(Word{});
  seen.insert(Word{});
  std::size_t next = 0;
  const int na = static_cast<int>(cs.alphabet().size());
  while (next < elements.size()) {
    Word cur = elements[next++];
    for (Letter a = 0; a < na; ++a) {
      Word w = cur;
      w.push_back(a);
      Word nf = cs.reduce(std::move(w));
      if (seen.insert(nf).second) {
        if (static_cast<int>(elements.size()) >= cap) {
          throw CapExceeded("more than " + std::to_string(cap) +
                            " elements found");
        }
        elements.push_back(std::move(nf));
      }
    }
  }
  return MonoidUniverse(cs, std::move(elements));
}

namespace {

// Leftmost-innermost reduction path (lowest position, then lowest rule id).
DGPath reduction_path(Word w, const Rules& rules) {
  DGPath out = empty_path(w);
  bool done = false;
  while (!done) {
    done = true;
    for (std::size_t pos = 0; pos < w.size() && done; ++pos) {
      for (int ri = 0; ri < static_cast<int>(rules.size()); ++ri) {
        if (!occurs_at(w, rules[ri].lhs, pos)) {
          continue;
        }
        DGEdge e{Word(w.begin(), w.begin() + pos), ri, +1,
                 Word(w.begin() + pos + rules[ri].lhs.size(), w.end())};
        w = edge_target(e, rules);
        out.edges.push_back(std::move(e));
        done = false;
        break;
      }
    }
  }
  return out;
}

}  // namespace

std::vector<CriticalCircuit> critical_circuits(const CompleteSystem& cs) {
  const Rules& rules = cs.rules();
  std::vector<CriticalCircuit> out;

  auto emit = [&](const Word& overlap, DGEdge e1, DGEdge e2) {
    CriticalCircuit c;
    c.left_edge = std::move(e1);
    c.right_edge = std::move(e2);
    c.left_resolution = reduction_path(edge_target(c.left_edge, rules), rules);
    c.right_resolution =
        reduction_path(edge_target(c.right_edge, rules), rules);
    if (path_target(c.left_resolution, rules) !=
        path_target(c.right_resolution, rules)) {
      throw InternalError("critical pair does not resolve: system incomplete");
    }
    DGPath branch1 =
        concat(edge_path(c.left_edge, rules), c.left_resolution);
    DGPath branch2 =
        concat(edge_path(c.right_edge, rules), c.right_resolution);
    c.closed = concat(std::move(branch1), inverse_path(branch2, rules));
    if (path_source(c.closed) != overlap) {
      throw InternalError("critical circuit base mismatch");
    }
    out.push_back(std::move(c));
  };

  for (int i = 0; i < static_cast<int>(rules.size()); ++i) {
    for (int j = 0; j < static_cast<int>(rules.size()); ++j) {
      const Word& l1 = rules[i].lhs;
      const Word& l2 = rules[j].lhs;
      // Proper overlaps of l1's suffix with l2's prefix.
      for (std::size_t k = 1; k < l1.size(); ++k) {
        std::size_t olap = l1.size() - k;
        if (olap >= l2.size()) {
          continue;
        }
        if (!std::equal(l1.begin() + k, l1.end(), l2.begin())) {
          continue;
        }
        Word w(l1.begin(), l1.begin() + k);
        w.insert(w.end(), l2.begin(), l2.end());
        DGEdge e1{{}, i, +1, Word(w.begin() + l1.size(), w.end())};
        DGEdge e2{Word(w.begin(), w.begin() + k), j, +1, {}};
        emit(w, std::move(e1), std::move(e2));
      }
      // Factor inclusions l2 inside l1 (distinct rules).
      if (i != j && l2.size() <= l1.size()) {
        for (std::size_t pos = 0; pos + l2.size() <= l1.size(); ++pos) {
          if (!occurs_at(l1, l2, pos)) {
            continue;
          }
          DGEdge e1{{}, i, +1, {}};
          DGEdge e2{Word(l1.begin(), l1.begin() + pos), j, +1,
                    Word(l1.begin() + pos + l2.size(), l1.end())};
          emit(l1, std::move(e1), std::move(e2));
        }
      }
    }
  }
  return out;
}

}  // namespace schutzen
