#pragma once

#include <vector>

#include "schutzen/green.hpp"
#include "schutzen/schutz.hpp"

namespace schutzen {

struct GroupCaps {
  int max_elements = 10000;
  CompletionLimits kb;
};

// A finite group realized as a multiplication table, with a normal-form
// representative word per element. Element 0 is the identity.
class FiniteGroupTable {
 public:
  FiniteGroupTable(MonoidUniverse universe, std::vector<std::vector<int>> mult,
                   std::vector<int> inv);

  int order() const { return static_cast<int>(mult_.size()); }
  int mult(int x, int y) const { return mult_.at(x).at(y); }
  int inv(int x) const { return inv_.at(x); }
  const Word& element_word(int x) const { return universe_.word(x); }
  int element_of(const Word& w) const { return universe_.element_of(w); }
  const MonoidUniverse& universe() const { return universe_; }

  // Multiplicative order of an element.
  int element_order(int x) const;

 private:
  MonoidUniverse universe_;
  std::vector<std::vector<int>> mult_;
  std::vector<int> inv_;
};

// Completion + enumeration over the B alphabet; asserts the group axioms
// (two-sided inverses) and throws NotAGroup otherwise.
FiniteGroupTable enumerate_group(const Alphabet& b_alphabet,
                                 const std::vector<Rule>& relations,
                                 GroupCaps caps = {});
FiniteGroupTable enumerate_group(const SchutzPresentation& q,
                                 GroupCaps caps = {});

// Multiplication-preserving bijection test: invariant fingerprint (order and
// element-order multiset), then backtracking over generator images. Throws
// OrderTooLarge above order 512.
bool isomorphic(const FiniteGroupTable& g1, const PermGroup& g2);
bool isomorphic(const FiniteGroupTable& g1, const FiniteGroupTable& g2);

}  // namespace schutzen
