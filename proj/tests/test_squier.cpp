#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "schutzen/error.hpp"
#include "schutzen/pipeline.hpp"

using namespace schutzen;

namespace {

struct Run {
  std::unique_ptr<Pipeline> p;
  FiniteGroupTable group;
  CanonicalPaths cp;

  Run(const char* text, const char* selector, const char* stab = "1")
      : p([&] {
          auto pres = parse_presentation(text);
          return Pipeline::build(pres, pres.alphabet.parse_word(selector),
                                 pres.alphabet.parse_word(stab));
        }()),
        group(enumerate_group(p->q)),
        cp(CanonicalPaths::build(p->ctx, group)) {}

  const SquierContext& ctx() const { return p->ctx; }
  const SchutzData& d() const { return p->data; }
};

DGEdge random_q_edge(std::mt19937_64& rng, const SquierContext& ctx,
                     int max_dress) {
  std::uniform_int_distribution<int> pick_rule(
      0, static_cast<int>(ctx.q_pres.rules.size()) - 1);
  std::uniform_int_distribution<int> pick_sign(0, 1);
  DGEdge e;
  e.rule_id = pick_rule(rng);
  e.sign = pick_sign(rng) ? +1 : -1;
  const int nb = static_cast<int>(ctx.q_pres.alphabet.size());
  e.left = oracle::random_word(rng, nb, max_dress);
  e.right = oracle::random_word(rng, nb, max_dress);
  return e;
}

std::vector<Word> words_up_to(int n_letters, int max_len) {
  std::vector<Word> out{Word{}};
  std::size_t start = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t k = start; k < end; ++k) {
      for (Letter a = 0; a < n_letters; ++a) {
        Word w = out[k];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    }
    start = end;
  }
  return out;
}

}  // namespace

TEST_CASE("edge endpoints and inverses") {
  Rules rules{{{0, 0, 0, 0}, {0}, 0}};  // aaaa -> a
  DGEdge e{{}, 0, +1, {}};
  CHECK(edge_source(e, rules) == Word{0, 0, 0, 0});
  CHECK(edge_target(e, rules) == Word{0});
  DGEdge dressed{{0}, 0, +1, {0}};
  CHECK(edge_source(dressed, rules) == Word(6, 0));
  CHECK(edge_target(dressed, rules) == Word(3, 0));
  DGEdge inv = inverse_edge(dressed);
  CHECK(edge_source(inv, rules) == Word(3, 0));
  CHECK(edge_target(inv, rules) == Word(6, 0));
}

TEST_CASE("act is the two-sided free-monoid action") {
  Rules rules{{{0, 0, 0, 0}, {0}, 0}};
  DGEdge e{{}, 0, +1, {}};
  DGPath p = edge_path(e, rules);
  CHECK(act({}, p, {}) == p);
  DGPath shifted = act({0}, p, {});
  CHECK(path_source(shifted) == Word(5, 0));
  CHECK(shifted.edges[0].left == Word{0});
  // action distributes over concatenation
  DGPath two = concat(p, edge_path(DGEdge{{}, 0, -1, {}}, rules));
  CHECK(act({0}, two, {0}).edges.size() == 2);
  CHECK(path_valid(act({0}, two, {0}), rules));
}

TEST_CASE("square is a closed 4-edge path") {
  Rules rules{{{0, 0, 0, 0}, {0}, 0}, {{1, 1}, {1}, 1}};
  DGEdge e1{{}, 0, +1, {}};
  DGEdge e2{{}, 1, +1, {}};
  DGPath sq = square(e1, e2, rules);
  CHECK(sq.size() == 4);
  CHECK(path_valid(sq, rules));
  CHECK(path_closed(sq, rules));
  CHECK(path_source(sq) ==
        cat(edge_source(e1, rules), edge_source(e2, rules)));
  DGPath self = square(e1, e1, rules);
  CHECK(path_closed(self, rules));
}

TEST_CASE("arrow calculus identities") {
  Rules rules{{{0, 0, 0, 0}, {0}, 0}, {{1, 1}, {1}, 1}};
  auto edge = [&](int rule, int sign, Word l, Word r) {
    return edge_path(DGEdge{std::move(l), rule, sign, std::move(r)}, rules);
  };
  DGPath p = edge(0, +1, {}, {});
  DGPath q = edge(1, +1, {}, {});
  DGPath a = edge(0, -1, {1}, {});
  DGPath b = act({}, a, {});  // copy
  // unit laws
  CHECK(arrow_down(p, empty_path({1}), rules) == act({}, p, {1}));
  CHECK(arrow_down(empty_path({1}), q, rules) == act({1}, q, {}));
  // target of p down q
  DGPath pq = arrow_down(p, q, rules);
  CHECK(path_valid(pq, rules));
  CHECK(path_target(pq, rules) ==
        cat(path_target(p, rules), path_target(q, rules)));
  // (i) p down (a o b') = (p down a) o (target(p).b')
  DGPath ab = concat(a, edge(1, -1, cat(path_target(a, rules), Word{}), {}));
  // build a composable pair over the same vertex instead
  DGPath a2 = edge(0, +1, {}, {});
  DGPath b2 = edge(0, -1, {}, {});
  DGPath comp = concat(a2, b2);
  REQUIRE(path_valid(comp, rules));
  CHECK(arrow_down(p, comp, rules) ==
        concat(arrow_down(p, a2, rules),
               act(path_target(p, rules), b2, {})));
  // (ii) (a o b) down p = (a . source(p)) o (b down p)
  CHECK(arrow_down(comp, p, rules) ==
        concat(act({}, a2, path_source(p)), arrow_down(b2, p, rules)));
  // (iv) (p down q)^-1 = p^-1 up q^-1
  CHECK(inverse_path(arrow_down(p, q, rules), rules) ==
        arrow_up(inverse_path(p, rules), inverse_path(q, rules), rules));
  // (iii) p down (a o b) down q
  DGPath lhs = arrow_down(arrow_down(p, comp, rules), q, rules);
  DGPath rhs = concat(
      act({}, arrow_down(p, a2, rules), path_source(q)),
      act(path_target(p, rules), arrow_down(b2, q, rules), {}));
  CHECK(lhs == rhs);
}

TEST_CASE("cancel_inverse_pairs") {
  Rules rules{{{0, 0, 0, 0}, {0}, 0}};
  DGEdge e{{}, 0, +1, {}};
  DGPath p = edge_path(e, rules);
  p = concat(p, edge_path(inverse_edge(e), rules));
  CHECK(cancel_inverse_pairs(p).empty());
  DGPath q = concat(edge_path(e, rules), concat(edge_path(inverse_edge(e), rules), edge_path(e, rules)));
  CHECK(cancel_inverse_pairs(q).size() == 1);
}

TEST_CASE("path_search pinned") {
  auto pres = parse_presentation("alphabet: a\nrule: aaaa = a\n");
  // a^4 -> a: one positive edge
  DGPath p1 = path_search(pres, Word(4, 0), Word{0});
  CHECK(p1.size() == 1);
  CHECK(p1.edges[0].sign == +1);
  // a^7 -> a: two edges
  DGPath p2 = path_search(pres, Word(7, 0), Word{0});
  CHECK(p2.size() == 2);
  CHECK(path_valid(p2, pres.rules));
  CHECK(path_target(p2, pres.rules) == Word{0});
  // same word: empty path
  CHECK(path_search(pres, Word{0, 0}, Word{0, 0}).empty());
  // a^2 and a are not equal: caps exhaust
  CHECK_THROWS_AS(path_search(pres, Word{0, 0}, Word{0}, {12, 400}),
                  SearchExhausted);
}

TEST_CASE("phi_edge pinned: the Z/3 example") {
  Run r("alphabet: a\nrule: aaaa = a\n", "a");
  const auto& star = r.d().star();
  DGEdge f{{}, 0, +1, {}};

  DGEdge at_one = phi_edge(0, f, star.one, r.ctx());
  CHECK(edge_source(at_one, r.ctx().q_pres.rules) == Word{0, 0, 0});  // b^3
  CHECK(edge_target(at_one, r.ctx().q_pres.rules).empty());           // 1

  DGEdge at_omega = phi_edge(0, f, star.omega, r.ctx());
  CHECK(edge_source(at_omega, r.ctx().q_pres.rules) == Word{0, 0, 0, 0});
  CHECK(edge_target(at_omega, r.ctx().q_pres.rules) == Word{0});
}

TEST_CASE("phi_edge precondition failures carry the clause") {
  // clause (i): in the H = {1} case the star action dies
  Run r1("alphabet: a\nrule: aaaa = a\n", "1");
  DGEdge f{{}, 0, +1, {}};
  try {
    phi_edge(0, f, r1.d().star().one, r1.ctx());
    FAIL("expected PreconditionViolated");
  } catch (const PreconditionViolated& e) {
    CHECK(e.clause == 1);
  }
  // clause (iii): right-zero monoid, lambda = H_b, ideal S.a misses it
  Run r2("alphabet: a b\nrule: aa = a\nrule: bb = b\nrule: ab = b\nrule: ba = a\n",
         "a");
  REQUIRE(r2.d().lambda().size() == 2);
  try {
    phi_edge(1, DGEdge{{}, 0, +1, {}}, r2.d().star().omega, r2.ctx());
    FAIL("expected PreconditionViolated");
  } catch (const PreconditionViolated& e) {
    CHECK(e.clause == 3);
  }
}

TEST_CASE("phi_edge endpoint identities, exhaustively on small monoids") {
  for (const auto& [name, text] : oracle::corpus()) {
    CAPTURE(name);
    auto pres = parse_presentation(text);
    auto probe = Pipeline::build(pres, Word{}, Word{});
    if (probe->universe.size() > 10) {
      continue;
    }
    const int na = static_cast<int>(pres.alphabet.size());
    auto dressings = words_up_to(na, 2);
    for (int sel = 0; sel < probe->universe.size(); ++sel) {
      Run r(text, pres.alphabet.format_word(probe->universe.word(sel)).c_str());
      const auto& prules = r.ctx().p_pres.rules;
      const auto& qrules = r.ctx().q_pres.rules;
      for (const Word& alpha : dressings) {
        for (const Word& beta : dressings) {
          for (int ri = 0; ri < static_cast<int>(prules.size()); ++ri) {
            for (int sign : {+1, -1}) {
              DGEdge f{alpha, ri, sign, beta};
              for (int lam = 0; lam < r.d().lambda().size(); ++lam) {
                for (int j : r.d().star().J) {
                  const Word src = edge_source(f, prules);
                  const int sj = r.d().star().act_word(src, j);
                  if (sj == kDead || !r.d().h_class_in_ideal(lam, sj)) {
                    continue;
                  }
                  DGEdge img = phi_edge(lam, f, j, r.ctx());
                  // endpoints match phi(lambda, kappa(... , j))
                  CHECK(edge_source(img, qrules) ==
                        r.d().phi(lam, r.d().kappa(src, j)));
                  CHECK(edge_target(img, qrules) ==
                        r.d().phi(lam,
                                  r.d().kappa(edge_target(f, prules), j)));
                  // inverse-compatibility
                  CHECK(inverse_edge(img) ==
                        phi_edge(lam, inverse_edge(f), j, r.ctx()));
                }
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("phi_path pinned and inverse-compatible") {
  Run r("alphabet: a\nrule: aaaa = a\n", "a");
  auto pres = r.ctx().p_pres;
  DGPath p = path_search(pres, Word(7, 0), Word{0});
  REQUIRE(p.size() == 2);
  DGPath img = phi_path(0, p, r.d().star().omega, r.ctx());
  CHECK(img.size() == 2);
  CHECK(path_valid(img, r.ctx().q_pres.rules));
  CHECK(phi_path(0, inverse_path(p, pres.rules), r.d().star().omega,
                 r.ctx()) ==
        inverse_path(img, r.ctx().q_pres.rules));
  // empty path maps to empty path
  DGPath trivial = phi_path(empty_path(r.d().h_word()), r.ctx());
  CHECK(trivial.empty());
}

TEST_CASE("theta endpoints (lem_thetaimage)") {
  auto rng = oracle::make_rng(31);
  for (const char* setup : {"z3", "rz", "nr"}) {
    const char* text = setup[0] == 'z'
                           ? "alphabet: a\nrule: aaaa = a\n"
                           : (setup[0] == 'r'
                                  ? "alphabet: a b\nrule: aa = a\nrule: bb = "
                                    "b\nrule: ab = b\nrule: ba = a\n"
                                  : "alphabet: g t\nrule: gg = 1\nrule: tg = "
                                    "gt\nrule: ttt = tt\n");
    const char* sel = setup[0] == 'n' ? "t" : "a";
    CAPTURE(setup);
    Run r(text, sel);
    for (int trial = 0; trial < 60; ++trial) {
      DGEdge e = random_q_edge(rng, r.ctx(), 3);
      DGPath th = theta(e, r.cp, r.ctx());
      CHECK(path_valid(th, r.ctx().p_pres.rules));
      const Word iota = edge_source(e, r.ctx().q_pres.rules);
      const Word tau = edge_target(e, r.ctx().q_pres.rules);
      CHECK(path_source(th) == cat(r.d().pi(iota), r.d().h_word()));
      CHECK(path_target(th, r.ctx().p_pres.rules) ==
            cat(r.d().pi(tau), r.d().h_word()));
    }
    // theta of an inverse edge is the inverse path
    DGEdge e = random_q_edge(rng, r.ctx(), 2);
    CHECK(theta(inverse_edge(e), r.cp, r.ctx()) ==
          inverse_path(theta(e, r.cp, r.ctx()), r.ctx().p_pres.rules));
  }
}

TEST_CASE("lambda_path endpoints (lem_Lambda), |w| <= 4") {
  Run r("alphabet: a\nrule: aaaa = a\n", "a");
  const auto& qrules = r.ctx().q_pres.rules;
  for (const Word& w : words_up_to(r.d().b_count(), 4)) {
    DGPath lw = lambda_path(w, r.ctx());
    CHECK(path_valid(lw, qrules));
    CHECK(path_source(lw) == w);
    CHECK(path_target(lw, qrules) ==
          r.d().phi(0, r.d().kappa(cat(r.d().pi(w), r.d().h_word()),
                                   r.d().star().eta)));
    DGPath lpw = lambda_path_primed(w, r.ctx());
    CHECK(path_valid(lpw, qrules));
    CHECK(path_source(lpw) == w);
    CHECK(path_target(lpw, qrules) == phi_omega_pi(w, r.ctx()));
    CHECK(lw.size() == w.size() + 1);
    CHECK(lpw.size() == w.size());
  }
}

TEST_CASE("phi_omega multiplicativity") {
  auto rng = oracle::make_rng(32);
  Run r("alphabet: a b\nrule: aa = a\nrule: bb = b\nrule: ab = b\nrule: ba = a\n",
        "a");
  if (r.d().b_count() > 0) {
    for (int trial = 0; trial < 200; ++trial) {
      Word w1 = oracle::random_word(rng, r.d().b_count(), 4);
      Word w2 = oracle::random_word(rng, r.d().b_count(), 4);
      CHECK(phi_omega_pi(cat(w1, w2), r.ctx()) ==
            cat(phi_omega_pi(w1, r.ctx()), phi_omega_pi(w2, r.ctx())));
    }
  }
}

TEST_CASE("W and inverse paths pinned: Z/3") {
  Run r("alphabet: a\nrule: aaaa = a\n", "a");
  REQUIRE(r.cp.W().size() == 2);
  CHECK(r.cp.W()[0].empty());      // from j = 1: kappa(a, 1) = 1
  CHECK(r.cp.W()[1] == Word{0});   // from j = omega: b
  const int yb = r.cp.w_index(Word{0});
  REQUIRE(yb >= 0);
  CHECK(r.cp.hat(yb) == Word{0, 0});  // inverse of b in Z/3 is b^2
  CHECK(r.cp.D(yb).size() == 1);      // bbb -> 1 in one step
  const auto& qrules = r.ctx().q_pres.rules;
  CHECK(path_source(r.cp.D(yb)) == Word{0, 0, 0});
  CHECK(path_target(r.cp.D(yb), qrules).empty());
  const int y1 = r.cp.w_index(Word{});
  REQUIRE(y1 >= 0);
  CHECK(r.cp.hat(y1).empty());
  CHECK(r.cp.D(y1).empty());
}

TEST_CASE("Y families: sizes, validity, closedness") {
  for (const auto& [name, text] : oracle::corpus()) {
    CAPTURE(name);
    auto pres = parse_presentation(text);
    auto probe = Pipeline::build(pres, Word{}, Word{});
    for (int sel = 0; sel < probe->universe.size(); ++sel) {
      auto selector = probe->universe.word(sel);
      Run r(text, pres.alphabet.format_word(selector).c_str());
      auto art = build_homotopy(*r.p);
      const auto& qrules = r.ctx().q_pres.rules;
      CHECK(art.y2.size() == r.cp.W().size());
      for (const auto* family : {&art.y1, &art.y2, &art.y3}) {
        for (const DGPath& member : *family) {
          CHECK(path_valid(member, qrules));
          CHECK(path_closed(member, qrules));
        }
      }
      // Y1 from an empty base is empty
      CHECK(build_Y1({}, r.ctx()).empty());
      // Y2 members are closed at y
      for (std::size_t wi = 0; wi < r.cp.W().size(); ++wi) {
        CHECK(path_source(art.y2[wi]) == r.cp.W()[wi]);
      }
      // |Y1| <= |X|.|Lambda|.|J|
      CHECK(art.y1.size() <= art.x.size() * r.d().lambda().size() *
                                 r.d().star().J.size());
    }
  }
}

TEST_CASE("z_path closed on 100 random edges") {
  auto rng = oracle::make_rng(33);
  Run r("alphabet: a\nrule: aaaa = a\n", "a");
  const auto& qrules = r.ctx().q_pres.rules;
  for (int trial = 0; trial < 100; ++trial) {
    DGEdge e = random_q_edge(rng, r.ctx(), 3);
    DGPath z = z_path(e, r.cp, r.ctx());
    CHECK(path_valid(z, qrules));
    CHECK(path_closed(z, qrules));
    CHECK(path_source(z) == edge_source(e, qrules));
  }
}

TEST_CASE("reachable_j contains eta") {
  Run r("alphabet: a\nrule: aaaa = a\n", "a");
  auto js = reachable_j(r.ctx());
  CHECK(std::find(js.begin(), js.end(), r.d().star().eta) != js.end());
}

TEST_CASE("theta pinned: elementary edges map to P[u,v]") {
  Run r("alphabet: a\nrule: aaaa = a\n", "a");
  const auto& qrules = r.ctx().q_pres.rules;
  for (int rel = 0; rel < static_cast<int>(qrules.size()); ++rel) {
    DGEdge e{{}, rel, +1, {}};
    CHECK(theta(e, r.cp, r.ctx()) == r.cp.p_rel(rel));
  }
  // the R1 relation b^4 = b: theta runs from pi(b^4)h = a^5 to pi(b)h = a^2
  const int rel_b4 = r.p->q.r1_index.at({0, 0});
  DGPath th = theta(DGEdge{{}, rel_b4, +1, {}}, r.cp, r.ctx());
  CHECK(path_source(th) == Word(5, 0));
  CHECK(path_target(th, r.ctx().p_pres.rules) == Word(2, 0));
}

TEST_CASE("W is no larger than J") {
  for (const auto& [name, text] : oracle::corpus()) {
    CAPTURE(name);
    auto pres = parse_presentation(text);
    auto probe = Pipeline::build(pres, Word{}, Word{});
    for (int sel = 0; sel < probe->universe.size(); ++sel) {
      Run r(text, pres.alphabet.format_word(probe->universe.word(sel)).c_str());
      CHECK(r.cp.W().size() <= r.d().star().J.size());
    }
  }
}
