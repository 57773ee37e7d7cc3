#include "schutzen/words.hpp"

#include <algorithm>
#include <sstream>

#include "schutzen/error.hpp"

namespace schutzen {

Word cat(const Word& u, const Word& v) {
  Word out;
  out.reserve(u.size() + v.size());
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

Word cat(const Word& u, const Word& v, const Word& w) {
  Word out;
  out.reserve(u.size() + v.size() + w.size());
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  out.insert(out.end(), w.begin(), w.end());
  return out;
}

Alphabet::Alphabet(std::vector<std::string> letters)
    : names_(std::move(letters)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) {
      throw Error("empty letter token");
    }
    if (names_[i] == "1") {
      throw Error("'1' is reserved for the empty word");
    }
    auto [it, inserted] = index_.emplace(names_[i], static_cast<Letter>(i));
    if (!inserted) {
      throw Error("duplicate letter '" + names_[i] + "'");
    }
    if (names_[i].size() != 1) {
      single_char_ = false;
    }
  }
}

std::optional<Letter> Alphabet::find(std::string_view token) const {
  auto it = index_.find(token);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

Word Alphabet::parse_word(std::string_view text, int line) const {
  Word out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "1") {
      continue;  // empty-word token contributes nothing
    }
    if (auto a = find(tok)) {
      out.push_back(*a);
      continue;
    }
    if (single_char_) {
      for (char c : tok) {
        auto a = find(std::string_view(&c, 1));
        if (!a) {
          throw ParseError(line, std::string("undeclared letter '") + c + "'");
        }
        out.push_back(*a);
      }
      continue;
    }
    throw ParseError(line, "undeclared letter '" + tok + "'");
  }
  return out;
}

std::string Alphabet::format_word(const Word& w) const {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k > 0 && !single_char_) {
      out += ' ';
    }
    out += name(w[k]);
  }
  return out;
}

bool shortlex_less(const Word& u, const Word& v) {
  if (u.size() != v.size()) {
    return u.size() < v.size();
  }
  return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
}

namespace {

std::string strip(std::string s) {
  auto issp = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && issp(s.front())) s.erase(s.begin());
  while (!s.empty() && issp(s.back())) s.pop_back();
  return s;
}

}  // namespace

MonoidPresentation parse_presentation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  bool have_alphabet = false;
  Alphabet alphabet;
  std::vector<Rule> rules;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    std::string s = strip(raw);
    if (s.empty()) {
      continue;
    }
    if (s.rfind("alphabet:", 0) == 0) {
      if (have_alphabet) {
        throw ParseError(line, "second alphabet declaration");
      }
      std::istringstream ls(s.substr(9));
      std::vector<std::string> letters;
      std::string tok;
      while (ls >> tok) {
        letters.push_back(tok);
      }
      try {
        alphabet = Alphabet(std::move(letters));
      } catch (const Error& e) {
        throw ParseError(line, e.what());
      }
      have_alphabet = true;
      continue;
    }
    if (s.rfind("rule:", 0) == 0) {
      if (!have_alphabet) {
        throw ParseError(line, "rule before alphabet declaration");
      }
      std::string body = s.substr(5);
      auto eq = body.find('=');
      if (eq == std::string::npos) {
        throw ParseError(line, "rule is missing '='");
      }
      Rule r;
      r.lhs = alphabet.parse_word(body.substr(0, eq), line);
      r.rhs = alphabet.parse_word(body.substr(eq + 1), line);
      if (r.lhs == r.rhs) {
        throw ParseError(line, "rule has identical sides");
      }
      r.id = static_cast<int>(rules.size());
      rules.push_back(std::move(r));
      continue;
    }
    throw ParseError(line, "unrecognised line '" + s + "'");
  }
  if (!have_alphabet) {
    throw ParseError(line, "missing alphabet declaration");
  }
  return MonoidPresentation{std::move(alphabet), std::move(rules)};
}

bool occurs_at(const Word& w, const Word& pattern, std::size_t pos) {
  if (pos + pattern.size() > w.size()) {
    return false;
  }
  return std::equal(pattern.begin(), pattern.end(), w.begin() + pos);
}

Word apply_rule_at(const Word& w, const Rule& rule, int direction,
                   std::size_t pos) {
  const Word& from = direction == +1 ? rule.lhs : rule.rhs;
  const Word& to = direction == +1 ? rule.rhs : rule.lhs;
  if (!occurs_at(w, from, pos)) {
    throw InternalError("rule side does not occur at position " +
                        std::to_string(pos));
  }
  Word out;
  out.reserve(w.size() - from.size() + to.size());
  out.insert(out.end(), w.begin(), w.begin() + pos);
  out.insert(out.end(), to.begin(), to.end());
  out.insert(out.end(), w.begin() + pos + from.size(), w.end());
  return out;
}

}  // namespace schutzen
