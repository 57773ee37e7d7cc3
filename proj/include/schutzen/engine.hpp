#pragma once

#include <unordered_map>
#include <vector>

#include "schutzen/derivation.hpp"
#include "schutzen/words.hpp"

namespace schutzen {

struct CompletionLimits {
  int max_rules = 2000;
  int max_word_len = 64;
};

// A terminating, locally confluent rewriting system oriented by shortlex
// (lhs > rhs for every rule). Gives unique normal forms, hence an equality
// oracle for the presented monoid.
class CompleteSystem {
 public:
  CompleteSystem(Alphabet alphabet, std::vector<Rule> oriented_rules,
                 MonoidPresentation origin);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const MonoidPresentation& origin() const { return origin_; }
  MonoidPresentation as_presentation() const;

  // Unique irreducible descendant; shortlex-minimal in its congruence class.
  Word reduce(Word w) const;
  bool equal(const Word& u, const Word& v) const;

 private:
  Alphabet alphabet_;
  std::vector<Rule> rules_;
  MonoidPresentation origin_;
};

// Bounded Knuth-Bendix completion with shortlex orientation and FIFO pair
// processing; the result is inter-reduced and presents the same monoid.
// Throws LimitExceeded when the limits are hit.
CompleteSystem knuth_bendix(const MonoidPresentation& p,
                            CompletionLimits limits = {});

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (Letter a : w) {
      h ^= static_cast<std::size_t>(a) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// The enumerated monoid: every element as its normal form, plus total right
// and left Cayley tables. Element 0 is the identity.
class MonoidUniverse {
 public:
  MonoidUniverse(CompleteSystem cs, std::vector<Word> elements);

  int size() const { return static_cast<int>(elements_.size()); }
  const Word& word(int x) const { return elements_.at(x); }
  const CompleteSystem& system() const { return cs_; }
  const Alphabet& alphabet() const { return cs_.alphabet(); }

  int right(int x, Letter a) const { return right_.at(x).at(a); }
  int left(Letter a, int x) const { return left_.at(a).at(x); }

  // x.w and w.x evaluated through the Cayley tables.
  int right_word(int x, const Word& w) const;
  int left_word(const Word& w, int x) const;
  int mul(int x, int y) const { return right_word(x, word(y)); }

  // The element represented by an arbitrary word.
  int element_of(const Word& w) const;

 private:
  CompleteSystem cs_;
  std::vector<Word> elements_;
  std::unordered_map<Word, int, WordHash> index_;
  std::vector<std::vector<int>> right_;  // [element][letter]
  std::vector<std::vector<int>> left_;   // [letter][element]
};

// Breadth-first closure of {identity} under right multiplication by
// generators. Throws CapExceeded past `cap` elements.
MonoidUniverse enumerate_universe(const CompleteSystem& cs, int cap);

// One resolved overlap of two oriented left-hand sides: the peak edges both
// start at the overlap word, and each resolution reduces the corresponding
// reduct to the shared normal form by leftmost-innermost steps.
struct CriticalCircuit {
  DGEdge left_edge;
  DGEdge right_edge;
  DGPath left_resolution;
  DGPath right_resolution;
  // (left_edge o left_resolution) o (right_edge o right_resolution)^-1,
  // closed at the overlap word.
  DGPath closed;
};

// The classical homotopy base for a complete system: one circuit per
// proper overlap or factor inclusion of left-hand sides.
std::vector<CriticalCircuit> critical_circuits(const CompleteSystem& cs);

}  // namespace schutzen
