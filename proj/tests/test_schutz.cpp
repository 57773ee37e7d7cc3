#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "schutzen/error.hpp"
#include "schutzen/pipeline.hpp"

using namespace schutzen;

namespace {

std::unique_ptr<Pipeline> run(const char* text, const char* selector,
                              const char* stab = "1") {
  auto pres = parse_presentation(text);
  return Pipeline::build(pres, pres.alphabet.parse_word(selector),
                         pres.alphabet.parse_word(stab));
}

// All words over n letters with length <= max_len.
std::vector<Word> short_words(int n_letters, int max_len) {
  std::vector<Word> out{Word{}};
  std::size_t level_start = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t k = level_start; k < level_end; ++k) {
      for (Letter a = 0; a < n_letters; ++a) {
        Word w = out[k];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    }
    level_start = level_end;
  }
  return out;
}

}  // namespace

TEST_CASE("choose_representatives pinned: z3-tail, default e") {
  auto p = run("alphabet: a\nrule: aaaa = a\n", "a");
  const SchutzData& d = p->data;
  CHECK(d.h_word() == Word{0});
  CHECK(d.p(0).empty());
  CHECK(d.p_prime(0).empty());
  CHECK(d.r(d.star().one).empty());
  CHECK(d.r(d.star().omega) == Word{0});
  CHECK(d.r(d.star().eta).empty());
  // kappa(a, 1) = 1 and kappa(a, omega) = a
  CHECK(d.kappa_base(0, d.star().one).empty());
  CHECK(d.kappa_base(0, d.star().omega) == Word{0});
  // B = {b[1,a]}, pi(b[1,a]) = a
  REQUIRE(d.b_count() == 1);
  CHECK(d.b_alphabet().name(0) == "b[1,a]");
  CHECK(d.pi_base(0) == Word{0});
}

TEST_CASE("psi, phi, kappa, pi pinned: z3-tail") {
  auto p = run("alphabet: a\nrule: aaaa = a\n", "a");
  const SchutzData& d = p->data;
  CHECK(d.psi({0}) == Word{0});        // p_1 a p'_1 = a
  CHECK(d.psi({}).empty());
  CHECK(d.psi({0, 0}) == Word{0, 0});
  CHECK(d.phi(0, {0, 0, 0, 0}) == Word{0, 0, 0, 0});  // b^4
  CHECK(d.phi(0, {}).empty());
  CHECK(d.kappa({}, d.star().one).empty());
  CHECK(d.kappa({0, 0, 0, 0}, d.star().one) == Word{0, 0, 0});   // a^3
  CHECK(d.kappa({0, 0, 0, 0}, d.star().omega) == Word{0, 0, 0, 0});
  CHECK(d.pi({}).empty());
  CHECK(d.pi({0, 0}) == Word{0, 0});
}

TEST_CASE("phi throws ActionKilled on a dead prefix") {
  auto p = run("alphabet: a\nrule: aaaa = a\n", "1");
  CHECK(p->data.b_count() == 0);  // 1.a = 0, so B is empty
  CHECK_THROWS_AS(p->data.phi(0, {0}), ActionKilled);
}

TEST_CASE("representative invariants across the corpus") {
  for (const auto& [name, text] : oracle::corpus()) {
    CAPTURE(name);
    auto pres = parse_presentation(text);
    auto probe = Pipeline::build(pres, Word{}, Word{});
    const int n = probe->universe.size();
    for (int sel = 0; sel < n; ++sel) {
      auto p = Pipeline::build(pres, probe->universe.word(sel), Word{});
      const SchutzData& d = p->data;
      const MonoidUniverse& u = p->universe;
      const int h = d.h_elt();
      CHECK(u.element_of(d.h_word()) == h);
      CHECK(d.p(0).empty());
      CHECK(d.p_prime(0).empty());
      // H p_lambda = H_lambda and h p_lambda p'_lambda = h
      for (int lam = 0; lam < d.lambda().size(); ++lam) {
        const int img = u.right_word(h, d.p(lam));
        CHECK(p->green.h_class_of[img] ==
              d.lambda().h_class_ids[lam]);
        CHECK(u.right_word(img, d.p_prime(lam)) == h);
      }
      // r_1 = 1, r_omega = h, r_eta = e
      CHECK(u.element_of(d.r(d.star().one)) == 0);
      CHECK(d.r(d.star().omega) == d.h_word());
      CHECK(u.element_of(d.r(d.star().eta)) == d.e_elt());
      // a r_i = r_{a*i} kappa(a,i)
      const int na = static_cast<int>(pres.alphabet.size());
      for (Letter a = 0; a < na; ++a) {
        for (int i = 0; i < d.star().size(); ++i) {
          const int ai = d.star().act(a, i);
          if (ai == kDead) {
            continue;
          }
          Word lhs{a};
          CHECK(u.element_of(cat(lhs, d.r(i))) ==
                u.element_of(cat(d.r(ai), d.kappa_base(a, i))));
        }
      }
      // h psi(b) = pi(b) h
      for (int b = 0; b < d.b_count(); ++b) {
        CHECK(u.element_of(cat(d.h_word(), d.psi({b}))) ==
              u.element_of(cat(d.pi_base(b), d.h_word())));
      }
    }
  }
}

TEST_CASE("lemma suites 5.1-5.4 randomized and exhaustive") {
  auto rng = oracle::make_rng(21);
  for (const auto& [name, text] : oracle::corpus()) {
    CAPTURE(name);
    auto pres = parse_presentation(text);
    auto probe = Pipeline::build(pres, Word{}, Word{});
    const int n = probe->universe.size();
    const int na = static_cast<int>(pres.alphabet.size());
    for (int sel = 0; sel < n; ++sel) {
      auto p = Pipeline::build(pres, probe->universe.word(sel), Word{});
      const SchutzData& d = p->data;
      const MonoidUniverse& u = p->universe;

      // word sample: exhaustive short words for |S| <= 10, plus randoms
      std::vector<Word> sample =
          n <= 10 ? short_words(na, 6) : std::vector<Word>{};
      for (int k = 0; k < 1000; ++k) {
        sample.push_back(oracle::random_word(rng, na, 8));
      }

      for (std::size_t k = 0; k + 1 < sample.size(); k += 2) {
        const Word& w1 = sample[k];
        const Word& w2 = sample[k + 1];
        const Word w12 = cat(w1, w2);
        for (int lam = 0; lam < d.lambda().size(); ++lam) {
          if (d.lambda().act_word(lam, w12) == kDead) {
            continue;
          }
          // 5.1(i): phi(lam, w1w2) == phi(lam,w1) phi(lam.w1, w2)
          CHECK(d.phi(lam, w12) ==
                cat(d.phi(lam, w1),
                    d.phi(d.lambda().act_word(lam, w1), w2)));
        }
        for (int lam = 0; lam < d.lambda().size(); ++lam) {
          const int lw = d.lambda().act_word(lam, w1);
          if (lw == kDead) {
            continue;
          }
          // 5.1(ii): h psi(phi(lam,w)) = h p_lam w p'_{lam.w}
          CHECK(u.element_of(cat(d.h_word(), d.psi(d.phi(lam, w1)))) ==
                u.element_of(cat(cat(d.h_word(), d.p(lam)),
                                 cat(w1, d.p_prime(lw)))));
        }
        for (int j : d.star().J) {
          if (d.star().act_word(w12, j) == kDead) {
            continue;
          }
          // 5.2(i): kappa(w1w2, j) == kappa(w1, w2*j) kappa(w2, j)
          CHECK(d.kappa(w12, j) ==
                cat(d.kappa(w1, d.star().act_word(w2, j)), d.kappa(w2, j)));
        }
        for (int j : d.star().J) {
          const int wj = d.star().act_word(w1, j);
          if (wj == kDead) {
            continue;
          }
          // 5.2(ii): w r_j = r_{w*j} kappa(w,j)
          CHECK(u.element_of(cat(w1, d.r(j))) ==
                u.element_of(cat(d.r(wj), d.kappa(w1, j))));
        }
      }

      // 5.3 and 5.4 quantify over words in B*
      if (d.b_count() > 0) {
        for (int k = 0; k < 500; ++k) {
          Word wb = oracle::random_word(rng, d.b_count(), 6);
          CHECK(u.element_of(cat(d.h_word(), d.psi(wb))) ==
                u.element_of(cat(d.pi(wb), d.h_word())));
          CHECK(d.star().act_word(d.pi(wb), d.star().omega) ==
                d.star().omega);
          CHECK(d.lambda().act_word(
                    0, d.kappa(d.pi(wb), d.star().omega)) == 0);
        }
      } else {
        CHECK(u.element_of(cat(d.h_word(), d.psi({}))) ==
              u.element_of(cat(d.pi({}), d.h_word())));
      }
    }
  }
}

TEST_CASE("build_presentation pinned: the Z/3 case") {
  auto p = run("alphabet: a\nrule: aaaa = a\n", "a");
  const SchutzPresentation& q = p->q;
  REQUIRE(q.b_letters.size() == 1);
  CHECK(q.b_alphabet.name(0) == "b[1,a]");

  std::set<std::pair<Word, Word>> nontrivial;
  for (const auto& rel : q.relations) {
    if (!rel.trivial()) {
      nontrivial.insert({rel.lhs, rel.rhs});
    }
  }
  // R1 gives b^4 = b; R2 at j = 1 gives b^3 = 1; R2 at j = omega repeats
  // b^4 = b; R3 and R4 are trivial here.
  std::set<std::pair<Word, Word>> expected{
      {{0, 0, 0, 0}, {0}},
      {{0, 0, 0}, {}},
  };
  CHECK(nontrivial == expected);
  // R3: b = b, R4: 1 = 1, both present but trivial
  REQUIRE(q.r3_index.size() == 1);
  CHECK(q.relations[q.r3_index[0]].trivial());
  CHECK(q.relations[q.r4_index].trivial());
}

TEST_CASE("build_presentation pinned: idempotent H-class collapses") {
  auto p = run("alphabet: a\nrule: aa = a\n", "a");
  for (const auto& rel : p->q.relations) {
    CHECK(verify_relation(rel.lhs, rel.rhs, p->data));
  }
}

TEST_CASE("every emitted relation verifies in S (soundness)") {
  for (const auto& [name, text] : oracle::corpus()) {
    CAPTURE(name);
    auto pres = parse_presentation(text);
    auto probe = Pipeline::build(pres, Word{}, Word{});
    for (int sel = 0; sel < probe->universe.size(); ++sel) {
      auto p = Pipeline::build(pres, probe->universe.word(sel), Word{});
      for (const auto& rel : p->q.relations) {
        CHECK(verify_relation(rel.lhs, rel.rhs, p->data));
      }
    }
  }
}

TEST_CASE("verify_relation distinguishes words") {
  auto p = run("alphabet: a\nrule: aaaa = a\n", "a");
  CHECK(verify_relation({0, 0, 0, 0}, {0}, p->data));
  CHECK_FALSE(verify_relation({0}, {}, p->data));
  CHECK(verify_relation({0, 0}, {0, 0}, p->data));
}

TEST_CASE("corrupt_kappa_for_tests breaks verification") {
  auto pres = parse_presentation("alphabet: a\nrule: aaaa = a\n");
  auto p = Pipeline::build_corrupted(pres, pres.alphabet.parse_word("a"),
                                     Word{});
  bool any_failure = false;
  for (const auto& rel : p->q.relations) {
    if (!verify_relation(rel.lhs, rel.rhs, p->data)) {
      any_failure = true;
    }
  }
  CHECK(any_failure);
}

TEST_CASE("stab-word in H forces h = e") {
  auto p = run("alphabet: a\nrule: aaaa = a\n", "a", "aaa");
  CHECK(p->data.h_word() == Word{0, 0, 0});
  CHECK(p->data.star().eta == p->data.star().omega);
  for (const auto& rel : p->q.relations) {
    CHECK(verify_relation(rel.lhs, rel.rhs, p->data));
  }
}

TEST_CASE("idempotent stab-word makes R4 nontrivial and drops j=1 from J") {
  auto p = run("alphabet: a\nrule: aaaa = a\n", "a", "aaa");
  const auto& q = p->q;
  CHECK(q.relations[q.r4_index].lhs.empty());
  CHECK(q.relations[q.r4_index].rhs == Word{0, 0, 0});  // 1 = b^3
  CHECK(p->data.star().J == std::vector<int>{p->data.star().omega});
  CHECK(enumerate_group(q).order() == 3);
}

TEST_CASE("pinned: one-row Rees matrix monoid over Z/3 with two H-classes") {
  const char* text =
      "alphabet: a c\nrule: aaaa = a\nrule: cc = c\nrule: ca = a\n"
      "rule: aaac = c\n";
  auto p = run(text, "a");
  CHECK(p->universe.size() == 7);
  REQUIRE(p->data.lambda().size() == 2);
  CHECK(p->data.b_count() == 4);
  // the Schreier generators collapse: b[1,c] = 1, b[2,a] = b[1,a],
  // b[2,c] = 1 appear among the (R3) relations
  const Alphabet& b = p->q.b_alphabet;
  const int b1c = *b.find("b[1,c]");
  const int b2a = *b.find("b[2,a]");
  const int b2c = *b.find("b[2,c]");
  const int b1a = *b.find("b[1,a]");
  CHECK(p->q.relations[p->q.r3_index[b1c]].rhs.empty());
  CHECK(p->q.relations[p->q.r3_index[b2a]].rhs == Word{b1a});
  CHECK(p->q.relations[p->q.r3_index[b2c]].rhs.empty());
  auto table = enumerate_group(p->q);
  CHECK(table.order() == 3);
  CHECK(isomorphic(table, schutz_direct(p->universe, p->green,
                                        p->h_class_id)));
  // the other H-class in the same R-class gives the same group
  auto p2 = run(text, "c");
  CHECK(enumerate_group(p2->q).order() == 3);
}

TEST_CASE("Brandt monoid: idempotent stab-word with a two-element J") {
  // In B2^1 the R-classes of a and b are mutually reachable under the left
  // action, so with e = ab the set J = I n K has two members even though
  // eta = omega.
  const char* text =
      "alphabet: a b\nrule: aba = a\nrule: bab = b\nrule: aa = bb\n"
      "rule: aaa = aa\nrule: aab = aa\n";
  auto p = run(text, "ab", "ab");
  CHECK(p->universe.size() == 6);
  CHECK(p->data.star().eta == p->data.star().omega);
  CHECK(p->data.star().J.size() == 2);
  for (const auto& rel : p->q.relations) {
    CHECK(verify_relation(rel.lhs, rel.rhs, p->data));
  }
  auto table = enumerate_group(p->q);
  CHECK(table.order() == 1);
  CHECK(isomorphic(table, schutz_direct(p->universe, p->green,
                                        p->h_class_id)));
}
