#include "schutzen/schutz.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "schutzen/error.hpp"

namespace schutzen {

namespace {

// Shortlex-least word w with start.w = target (right multiplication); BFS
// layers are lengths and children are generated in letter order, so the
// first visit of an element carries its least word.
Word bfs_right(const MonoidUniverse& u, int start,
               const std::vector<char>& targets) {
  const int na = static_cast<int>(u.alphabet().size());
  if (targets.at(start)) {
    return {};
  }
  std::vector<char> seen(u.size(), 0);
  seen[start] = 1;
  std::deque<std::pair<int, Word>> queue{{start, {}}};
  while (!queue.empty()) {
    auto [x, w] = std::move(queue.front());
    queue.pop_front();
    for (Letter a = 0; a < na; ++a) {
      const int y = u.right(x, a);
      if (seen[y]) {
        continue;
      }
      seen[y] = 1;
      Word next = w;
      next.push_back(a);
      if (targets[y]) {
        return next;
      }
      queue.emplace_back(y, std::move(next));
    }
  }
  throw InternalError("representative not found (right search)");
}

Word bfs_right(const MonoidUniverse& u, int start, int target) {
  std::vector<char> targets(u.size(), 0);
  targets[target] = 1;
  return bfs_right(u, start, targets);
}

// Shortlex-least word w with w.start = target (left multiplication). Words
// grow at the front, so each layer is produced letter-major over the
// previous layer's shortlex order.
Word bfs_left(const MonoidUniverse& u, int start, int target) {
  if (start == target) {
    return {};
  }
  const int na = static_cast<int>(u.alphabet().size());
  std::vector<char> seen(u.size(), 0);
  seen[start] = 1;
  std::vector<std::pair<int, Word>> layer{{start, {}}};
  while (!layer.empty()) {
    std::vector<std::pair<int, Word>> next_layer;
    for (Letter a = 0; a < na; ++a) {
      for (const auto& [x, w] : layer) {
        const int y = u.left(a, x);
        if (seen[y]) {
          continue;
        }
        seen[y] = 1;
        Word next;
        next.reserve(w.size() + 1);
        next.push_back(a);
        next.insert(next.end(), w.begin(), w.end());
        if (y == target) {
          return next;
        }
        next_layer.emplace_back(y, std::move(next));
      }
    }
    layer = std::move(next_layer);
  }
  throw InternalError("representative not found (left search)");
}

}  // namespace

SchutzData SchutzData::choose_representatives(const MonoidUniverse& u,
                                              const GreenStructure& g,
                                              int h_class_id,
                                              const Word& e_word,
                                              int selector_elt) {
  SchutzData d;
  d.u_ = &u;
  d.g_ = &g;
  d.h_class_id_ = h_class_id;
  d.lambda_ = lambda_action(u, g, h_class_id);

  d.e_ = e_word;
  d.e_elt_ = u.element_of(e_word);

  d.h_elt_ = selector_elt;
  d.h_ = u.word(selector_elt);
  const int r_of_h = g.r_class_of.at(selector_elt);
  if (g.r_class_of.at(d.e_elt_) == r_of_h) {
    // e lies in R; in a finite monoid a pointwise stabilizer in R lies in H,
    // and taking h := e keeps r_omega = h and r_eta = e compatible.
    if (g.h_class_of.at(d.e_elt_) != h_class_id) {
      throw InternalError("stabilizer word in R(H) but not in H");
    }
    d.h_elt_ = d.e_elt_;
    d.h_ = d.e_;
  }

  d.star_ = star_action(u, g, h_class_id, e_word);

  // p_lambda: least word carrying h into H_lambda; p'_lambda: least word
  // carrying h.p_lambda back to h.
  const int n_lambda = d.lambda_.size();
  d.p_.resize(n_lambda);
  d.p_prime_.resize(n_lambda);
  for (int lam = 0; lam < n_lambda; ++lam) {
    std::vector<char> targets(u.size(), 0);
    for (int x : g.h_classes.at(d.lambda_.h_class_ids[lam])) {
      targets[x] = 1;
    }
    d.p_[lam] = bfs_right(u, d.h_elt_, targets);
    const int image = u.right_word(d.h_elt_, d.p_[lam]);
    d.p_prime_[lam] = bfs_right(u, image, d.h_elt_);
  }

  // r_i: normal form of the least element of R_i, overridden by the
  // distinguished words r_eta = e and r_omega = h (in that order, so omega
  // wins when the indices coincide; the h := e override above makes that
  // consistent).
  const int n_i = d.star_.size();
  d.r_.resize(n_i);
  for (int i = 0; i < n_i; ++i) {
    d.r_[i] = u.word(g.r_classes.at(d.star_.r_class_ids[i]).front());
  }
  d.r_[d.star_.eta] = d.e_;
  d.r_[d.star_.omega] = d.h_;

  // Left ideals S.r_i as element sets, for the (R2) condition.
  d.ideal_.assign(n_i, std::vector<char>(u.size(), 0));
  const int na = static_cast<int>(u.alphabet().size());
  for (int i = 0; i < n_i; ++i) {
    const int r_elt = u.element_of(d.r_[i]);
    std::deque<int> queue{r_elt};
    d.ideal_[i][r_elt] = 1;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (Letter a = 0; a < na; ++a) {
        int y = u.left(a, x);
        if (!d.ideal_[i][y]) {
          d.ideal_[i][y] = 1;
          queue.push_back(y);
        }
      }
    }
  }

  // kappa(a,i): least word with a.r_i = r_{a*i}.kappa(a,i) in S.
  d.kappa_base_.assign(na, std::vector<std::optional<Word>>(n_i));
  for (Letter a = 0; a < na; ++a) {
    for (int i = 0; i < n_i; ++i) {
      const int ai = d.star_.act(a, i);
      if (ai == kDead) {
        continue;
      }
      const int lhs_elt = u.left_word(Word{a}, u.element_of(d.r_[i]));
      d.kappa_base_[a][i] = bfs_right(u, u.element_of(d.r_[ai]), lhs_elt);
    }
  }

  // The generating set B and the alphabet of printable names.
  d.b_index_.assign(n_lambda, std::vector<int>(na, -1));
  std::vector<std::string> b_names;
  for (int lam = 0; lam < n_lambda; ++lam) {
    for (Letter a = 0; a < na; ++a) {
      if (d.lambda_.act(lam, a) == kDead) {
        continue;
      }
      d.b_index_[lam][a] = static_cast<int>(d.b_letters_.size());
      d.b_letters_.push_back(BLetter{lam, a});
      b_names.push_back("b[" + std::to_string(lam + 1) + "," +
                        u.alphabet().name(a) + "]");
    }
  }
  d.b_alphabet_ = Alphabet(std::move(b_names));

  // pi(b): least word with pi(b).h = h.psi(b) in S.
  d.pi_base_.resize(d.b_letters_.size());
  for (int b = 0; b < d.b_count(); ++b) {
    const int target = u.right_word(d.h_elt_, d.psi(Word{b}));
    d.pi_base_[b] = bfs_left(u, d.h_elt_, target);
  }
  return d;
}

const Word& SchutzData::kappa_base(Letter a, int i) const {
  const auto& slot = kappa_base_.at(a).at(i);
  if (!slot) {
    throw ActionKilled("kappa(" + u_->alphabet().name(a) + ", i" +
                       std::to_string(i + 1) + ") undefined: a*i = 0");
  }
  return *slot;
}

bool SchutzData::h_class_in_ideal(int lambda, int i) const {
  const int rep = g_->h_classes.at(lambda_.h_class_ids.at(lambda)).front();
  return ideal_.at(i).at(rep);
}

Word SchutzData::psi(const Word& w_over_b) const {
  Word out;
  for (int b : w_over_b) {
    const BLetter& bl = b_letters_.at(b);
    const int target = lambda_.act(bl.lambda, bl.a);
    out.insert(out.end(), p_[bl.lambda].begin(), p_[bl.lambda].end());
    out.push_back(bl.a);
    out.insert(out.end(), p_prime_[target].begin(), p_prime_[target].end());
  }
  return out;
}

Word SchutzData::phi(int lambda, const Word& w_over_a) const {
  Word out;
  out.reserve(w_over_a.size());
  for (Letter a : w_over_a) {
    const int b = b_index_.at(lambda).at(a);
    if (b < 0) {
      throw ActionKilled("phi: action of '" + u_->alphabet().name(a) +
                         "' kills lambda " + std::to_string(lambda + 1));
    }
    out.push_back(b);
    lambda = lambda_.act(lambda, a);
  }
  return out;
}

Word SchutzData::kappa(const Word& w_over_a, int i) const {
  Word out;
  for (auto it = w_over_a.rbegin(); it != w_over_a.rend(); ++it) {
    const Word& piece = kappa_base(*it, i);
    out.insert(out.begin(), piece.begin(), piece.end());
    i = star_.act(*it, i);
  }
  return out;
}

Word SchutzData::pi(const Word& w_over_b) const {
  Word out;
  for (int b : w_over_b) {
    out.insert(out.end(), pi_base_.at(b).begin(), pi_base_.at(b).end());
  }
  return out;
}

bool SchutzData::corrupt_kappa_for_tests() {
  const int na = static_cast<int>(u_->alphabet().size());
  for (Letter a = 0; a < na; ++a) {
    for (int i = 0; i < star_.size(); ++i) {
      if (!kappa_base_[a][i]) {
        continue;
      }
      const int want = u_->left_word(Word{a}, u_->element_of(r_[i]));
      for (Letter c = 0; c < na; ++c) {
        Word wrong = *kappa_base_[a][i];
        wrong.push_back(c);
        if (u_->right_word(u_->element_of(r_[star_.act(a, i)]), wrong) !=
            want) {
          kappa_base_[a][i] = std::move(wrong);
          return true;
        }
      }
    }
  }
  return false;
}

std::vector<Rule> SchutzPresentation::all_rules() const {
  std::vector<Rule> out;
  out.reserve(relations.size());
  for (std::size_t k = 0; k < relations.size(); ++k) {
    out.push_back(Rule{relations[k].lhs, relations[k].rhs,
                       static_cast<int>(k)});
  }
  return out;
}

std::vector<Rule> SchutzPresentation::nontrivial_rules() const {
  std::vector<Rule> out;
  for (const SchutzRelation& rel : relations) {
    if (!rel.trivial()) {
      out.push_back(Rule{rel.lhs, rel.rhs, static_cast<int>(out.size())});
    }
  }
  return out;
}

std::size_t SchutzPresentation::nontrivial_count() const {
  std::size_t n = 0;
  for (const SchutzRelation& rel : relations) {
    n += rel.trivial() ? 0 : 1;
  }
  return n;
}

SchutzPresentation build_presentation(const SchutzData& d) {
  SchutzPresentation q;
  q.b_alphabet = d.b_alphabet();
  q.b_letters = d.b_letters();
  q.r3_index.assign(d.b_count(), -1);

  std::map<std::pair<Word, Word>, int> seen;
  auto emit = [&](Word lhs, Word rhs, RelationTag tag) -> int {
    auto key = std::make_pair(std::move(lhs), std::move(rhs));
    auto it = seen.find(key);
    if (it != seen.end()) {
      q.relations[it->second].tags.push_back(tag);
      return it->second;
    }
    const int idx = static_cast<int>(q.relations.size());
    q.relations.push_back(SchutzRelation{key.first, key.second, {tag}});
    seen.emplace(std::move(key), idx);
    return idx;
  };

  const auto& rules = d.universe().system().rules();
  const int n_lambda = d.lambda().size();

  // (R1)  phi(lambda, u) = phi(lambda, v)  when lambda.u != 0.
  for (int lam = 0; lam < n_lambda; ++lam) {
    for (const Rule& r : rules) {
      if (d.lambda().act_word(lam, r.lhs) == kDead) {
        continue;
      }
      if (d.lambda().act_word(lam, r.rhs) == kDead) {
        throw InternalError("lambda action disagrees across a relation");
      }
      RelationTag tag{'1', lam, r.id, -1, -1};
      q.r1_index[{lam, r.id}] =
          emit(d.phi(lam, r.lhs), d.phi(lam, r.rhs), tag);
    }
  }

  // (R2)  phi(lambda, kappa(u,j)) = phi(lambda, kappa(v,j))
  //       when H_lambda is contained in S.r_{u*j}.
  for (int lam = 0; lam < n_lambda; ++lam) {
    for (const Rule& r : rules) {
      for (int j : d.star().J) {
        const int uj = d.star().act_word(r.lhs, j);
        if (uj == kDead) {
          continue;
        }
        if (uj != d.star().act_word(r.rhs, j)) {
          throw InternalError("star action disagrees across a relation");
        }
        if (!d.h_class_in_ideal(lam, uj)) {
          continue;
        }
        RelationTag tag{'2', lam, r.id, j, -1};
        q.r2_index[{lam, r.id, j}] =
            emit(d.phi(lam, d.kappa(r.lhs, j)), d.phi(lam, d.kappa(r.rhs, j)),
                 tag);
      }
    }
  }

  // (R3)  b = phi(1, kappa(pi(b), omega)).
  for (int b = 0; b < d.b_count(); ++b) {
    RelationTag tag{'3', -1, -1, -1, b};
    q.r3_index[b] =
        emit(Word{b}, d.phi(0, d.kappa(d.pi_base(b), d.star().omega)), tag);
  }

  // (R4)  1 = phi(1, kappa(h, eta)).
  q.r4_index = emit(Word{}, d.phi(0, d.kappa(d.h_word(), d.star().eta)),
                    RelationTag{'4', -1, -1, -1, -1});
  return q;
}

bool verify_relation(const Word& lhs, const Word& rhs, const SchutzData& d) {
  const auto& cs = d.universe().system();
  return cs.equal(cat(d.h_word(), d.psi(lhs)), cat(d.h_word(), d.psi(rhs)));
}

std::string format_tag(const RelationTag& tag, const SchutzData& d) {
  std::string out = "R";
  out += tag.family;
  switch (tag.family) {
    case '1':
      out += "(lambda=" + std::to_string(tag.lambda + 1) +
             ",rule=" + std::to_string(tag.rule_id) + ")";
      break;
    case '2':
      out += "(lambda=" + std::to_string(tag.lambda + 1) +
             ",rule=" + std::to_string(tag.rule_id) +
             ",j=" + std::to_string(tag.j + 1) + ")";
      break;
    case '3':
      out += "(b=" + d.b_alphabet().name(tag.b) + ")";
      break;
    default:
      break;
  }
  return out;
}

}  // namespace schutzen
