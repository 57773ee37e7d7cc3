#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace schutzen {

using Letter = int;

// A word over an alphabet, stored as letter indices. The empty vector is the
// identity word, printed as "1".
using Word = std::vector<Letter>;

Word cat(const Word& u, const Word& v);
Word cat(const Word& u, const Word& v, const Word& w);

// Letters are short printable tokens; their declaration order is the total
// order used by shortlex everywhere.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> letters);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Letter a) const { return names_.at(a); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Letter> find(std::string_view token) const;
  bool all_single_char() const { return single_char_; }

  // Accepts "1" for the empty word, whitespace-separated letter tokens, and
  // contiguous single-character tokens when every letter is one character.
  Word parse_word(std::string_view text, int line = 0) const;
  std::string format_word(const Word& w) const;

 private:
  std::vector<std::string> names_;
  std::map<std::string, Letter, std::less<>> index_;
  bool single_char_ = true;
};

// Shortlex: shorter first, then lexicographic by letter index.
bool shortlex_less(const Word& u, const Word& v);

// An oriented relation pair; both sides over the same alphabet.
struct Rule {
  Word lhs;
  Word rhs;
  int id = 0;
};

struct MonoidPresentation {
  Alphabet alphabet;
  std::vector<Rule> rules;
};

// Parses the line-oriented input format:
//   # comment
//   alphabet: a b c
//   rule: <word> = <word>
MonoidPresentation parse_presentation(std::string_view text);

// Replaces the occurrence of the directed side (lhs if direction=+1, rhs if
// direction=-1) of `rule` at `pos` in `w` by the opposite side. Throws
// InternalError if the side does not occur at `pos`.
Word apply_rule_at(const Word& w, const Rule& rule, int direction,
                   std::size_t pos);

// True iff `pattern` occurs in `w` starting at `pos`.
bool occurs_at(const Word& w, const Word& pattern, std::size_t pos);

}  // namespace schutzen
