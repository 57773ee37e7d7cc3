#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "schutzen/green.hpp"

namespace schutzen {

// Generator b[lambda, a]; exists whenever lambda.a != 0.
struct BLetter {
  int lambda;
  Letter a;
  friend bool operator==(const BLetter&, const BLetter&) = default;
};

struct RelationTag {
  char family;       // '1'..'4'
  int lambda = -1;   // R1, R2
  int rule_id = -1;  // R1, R2
  int j = -1;        // R2
  int b = -1;        // R3
};

struct SchutzRelation {
  Word lhs;  // over B
  Word rhs;  // over B
  std::vector<RelationTag> tags;
  bool trivial() const { return lhs == rhs; }
};

// The chosen representatives and the four maps of the construction. All
// representative words are shortlex-least for their defining condition,
// found by breadth-first search over the Cayley graphs.
class SchutzData {
 public:
  SchutzData() = default;  // empty shell; assign from choose_representatives

  static SchutzData choose_representatives(const MonoidUniverse& u,
                                           const GreenStructure& g,
                                           int h_class_id, const Word& e_word,
                                           int selector_elt);

  const MonoidUniverse& universe() const { return *u_; }
  const GreenStructure& green() const { return *g_; }
  const LambdaAction& lambda() const { return lambda_; }
  const StarAction& star() const { return star_; }

  int h_class_id() const { return h_class_id_; }
  const Word& h_word() const { return h_; }
  int h_elt() const { return h_elt_; }
  const Word& e_word() const { return e_; }
  int e_elt() const { return e_elt_; }

  const Word& p(int lambda) const { return p_.at(lambda); }
  const Word& p_prime(int lambda) const { return p_prime_.at(lambda); }
  const Word& r(int i) const { return r_.at(i); }
  const Word& kappa_base(Letter a, int i) const;

  // True iff H_lambda is contained in the left ideal S.r_i.
  bool h_class_in_ideal(int lambda, int i) const;

  // The generating set B.
  int b_count() const { return static_cast<int>(b_letters_.size()); }
  const std::vector<BLetter>& b_letters() const { return b_letters_; }
  const Alphabet& b_alphabet() const { return b_alphabet_; }
  int b_index(int lambda, Letter a) const { return b_index_.at(lambda).at(a); }
  const Word& pi_base(int b) const { return pi_base_.at(b); }

  // The representation mapping b[lambda,a] -> p_lambda a p'_{lambda.a},
  // extended homomorphically.
  Word psi(const Word& w_over_b) const;
  // The rewriting mapping phi(lambda, aw) = b[lambda,a] phi(lambda.a, w);
  // throws ActionKilled when the action dies along w.
  Word phi(int lambda, const Word& w_over_a) const;
  // kappa(wa, i) = kappa(w, a*i) kappa(a, i); throws ActionKilled.
  Word kappa(const Word& w_over_a, int i) const;
  // pi extended homomorphically from pi_base.
  Word pi(const Word& w_over_b) const;

  // Test hook: makes a kappa table entry wrong at the element level so that
  // downstream verification must fail. Returns false if no entry can be
  // corrupted (no defined kappa with a breakable equation).
  bool corrupt_kappa_for_tests();

 private:
  const MonoidUniverse* u_ = nullptr;
  const GreenStructure* g_ = nullptr;
  LambdaAction lambda_;
  StarAction star_;
  int h_class_id_ = -1;
  Word h_;
  int h_elt_ = -1;
  Word e_;
  int e_elt_ = -1;
  std::vector<Word> p_, p_prime_;
  std::vector<Word> r_;
  std::vector<std::vector<std::optional<Word>>> kappa_base_;  // [letter][i]
  std::vector<std::vector<char>> ideal_;                      // [i][element]
  std::vector<BLetter> b_letters_;
  std::vector<std::vector<int>> b_index_;  // [lambda][letter] -> b or -1
  Alphabet b_alphabet_;
  std::vector<Word> pi_base_;
};

// <B|U> with its relation families; `relations` is deduplicated on ordered
// (lhs, rhs) pairs with all parameter tags retained. Trivial relations stay
// in the list (the derivation graph needs their edges) and are filtered only
// for enumeration and default output.
struct SchutzPresentation {
  Alphabet b_alphabet;
  std::vector<BLetter> b_letters;
  std::vector<SchutzRelation> relations;

  std::map<std::pair<int, int>, int> r1_index;        // (lambda, rule)
  std::map<std::tuple<int, int, int>, int> r2_index;  // (lambda, rule, j)
  std::vector<int> r3_index;                          // per b
  int r4_index = -1;

  // All relations as rewrite rules with id = relation index.
  std::vector<Rule> all_rules() const;
  // Nontrivial relations only, re-numbered 0..n-1.
  std::vector<Rule> nontrivial_rules() const;
  std::size_t nontrivial_count() const;
};

SchutzPresentation build_presentation(const SchutzData& d);

// alpha = beta holds in the Schutzenberger group iff h psi(alpha) = h
// psi(beta) holds in S.
bool verify_relation(const Word& lhs, const Word& rhs, const SchutzData& d);

std::string format_tag(const RelationTag& tag, const SchutzData& d);

}  // namespace schutzen
