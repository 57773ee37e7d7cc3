#pragma once

#include <vector>

#include "schutzen/engine.hpp"

namespace schutzen {

// R-, L- and H-class partitions of an enumerated monoid. Class ids are
// assigned in order of each class's least element index.
struct GreenStructure {
  std::vector<int> r_class_of;
  std::vector<int> l_class_of;
  std::vector<int> h_class_of;
  std::vector<std::vector<int>> r_classes;  // sorted element lists
  std::vector<std::vector<int>> l_classes;
  std::vector<std::vector<int>> h_classes;

  int h_class_of_element(int x) const { return h_class_of.at(x); }
};

GreenStructure compute_green(const MonoidUniverse& u);

constexpr int kDead = -1;  // the absorbing 0 of the partial actions

// The right action of S on the H-classes {H_lambda} inside R, over
// Lambda u {0}. Internal index 0 is H itself (the paper's lambda = 1).
struct LambdaAction {
  std::vector<int> h_class_ids;          // lambda -> h-class id
  std::vector<std::vector<int>> table;   // [lambda][letter] -> lambda' or kDead
  int size() const { return static_cast<int>(h_class_ids.size()); }
  int act(int lam, Letter a) const {
    return lam == kDead ? kDead : table.at(lam).at(a);
  }
  int act_word(int lam, const Word& w) const {
    for (Letter a : w) {
      lam = act(lam, a);
      if (lam == kDead) break;
    }
    return lam;
  }
};

LambdaAction lambda_action(const MonoidUniverse& u, const GreenStructure& g,
                           int h_class_id);

// The left action of S on the R-class index set I u {0}, restricted from the
// action on all R-classes. I is the inverse orbit of R = R_omega; K the orbit
// of R_eta; J = I n K. Words act right to left: w*i = w_1*(...*(w_k*i)).
struct StarAction {
  std::vector<int> r_class_ids;          // i -> r-class id
  std::vector<int> index_of_r_class;     // r-class id -> i or kDead
  std::vector<char> in_K;                // per i
  std::vector<int> J;                    // sorted i-indices with in_K
  std::vector<std::vector<int>> table;   // [letter][i] -> i' or kDead
  int one = kDead;    // index of the identity's R-class
  int omega = kDead;  // index of R (the R-class of H)
  int eta = kDead;    // index of the R-class of e

  int size() const { return static_cast<int>(r_class_ids.size()); }
  int act(Letter a, int i) const {
    return i == kDead ? kDead : table.at(a).at(i);
  }
  int act_word(const Word& w, int i) const {
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      i = act(*it, i);
      if (i == kDead) break;
    }
    return i;
  }
  bool in_J(int i) const;
};

// Requires e_word to represent an element of the right pointwise stabilizer
// of H; checked by the single equation h.e = h (sufficient because the
// Schutzenberger action is simply transitive).
StarAction star_action(const MonoidUniverse& u, const GreenStructure& g,
                       int h_class_id, const Word& e_word);

// The Schutzenberger group of H computed directly: the distinct permutations
// x -> x.s of H over all s with H.s = H.
struct PermGroup {
  int degree = 0;
  std::vector<int> h_elements;                 // sorted element indices of H
  std::vector<std::vector<int>> elements;      // distinct permutations, sorted
  std::vector<std::vector<int>> generators;

  int order() const { return static_cast<int>(elements.size()); }
};

PermGroup schutz_direct(const MonoidUniverse& u, const GreenStructure& g,
                        int h_class_id);

// True iff H_lambda lies inside the principal left ideal S.r_elt; tested on a
// single element of H_lambda because left ideals are unions of L-classes.
bool h_class_in_left_ideal(const MonoidUniverse& u, const GreenStructure& g,
                           int h_class_id, int r_elt);

}  // namespace schutzen
