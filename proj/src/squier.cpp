#include "schutzen/squier.hpp"

#include <algorithm>
#include <set>

#include "schutzen/error.hpp"

namespace schutzen {

SquierContext make_squier_context(const SchutzData& d,
                                  const SchutzPresentation& q,
                                  MonoidPresentation p_pres,
                                  PathSearchCaps caps) {
  SquierContext ctx;
  ctx.universe = &d.universe();
  ctx.data = &d;
  ctx.q = &q;
  ctx.p_pres = std::move(p_pres);
  ctx.q_pres = MonoidPresentation{q.b_alphabet, q.all_rules()};
  ctx.caps = caps;
  return ctx;
}

DGEdge phi_edge(int lambda, const DGEdge& f, int j, const SquierContext& ctx) {
  const SchutzData& d = *ctx.data;
  const StarAction& star = d.star();
  const Rule& rule = ctx.p_pres.rules.at(f.rule_id);
  const Word& side_in = f.sign == +1 ? rule.lhs : rule.rhs;

  const Word source = edge_source(f, ctx.p_pres.rules);
  const int src_j = star.act_word(source, j);
  if (src_j == kDead) {
    throw PreconditionViolated(1, "source(F)*j = 0");
  }
  if (!d.h_class_in_ideal(lambda, src_j)) {
    throw PreconditionViolated(3, "H_lambda not inside S.r_{source(F)*j}");
  }
  if (ctx.lambda().act_word(lambda, d.kappa(source, j)) == kDead) {
    throw PreconditionViolated(2, "lambda.kappa(source(F), j) = 0");
  }

  const int j_beta = star.act_word(f.right, j);           // beta*j
  const int j_mid = star.act_word(side_in, j_beta);       // side.beta*j
  const Word kap_left = d.kappa(f.left, j_mid);
  const int lam_mid = ctx.lambda().act_word(lambda, kap_left);
  const Word left_word = d.phi(lambda, kap_left);

  auto it = ctx.q->r2_index.find({lam_mid, f.rule_id, j_beta});
  if (it == ctx.q->r2_index.end()) {
    throw InternalError("missing (R2) relation for phi_edge");
  }

  const int lam_right =
      ctx.lambda().act_word(lambda, d.kappa(cat(f.left, side_in), j_beta));
  const Word right_word = d.phi(lam_right, d.kappa(f.right, j));
  return DGEdge{left_word, it->second, f.sign, right_word};
}

DGPath phi_path(int lambda, const DGPath& p, int j, const SquierContext& ctx) {
  const SchutzData& d = *ctx.data;
  const int src_j = d.star().act_word(p.base, j);
  if (src_j == kDead) {
    throw PreconditionViolated(1, "source(P)*j = 0");
  }
  if (!d.h_class_in_ideal(lambda, src_j)) {
    throw PreconditionViolated(3, "H_lambda not inside S.r_{source(P)*j}");
  }
  DGPath out = empty_path(d.phi(lambda, d.kappa(p.base, j)));
  for (const DGEdge& f : p.edges) {
    out.edges.push_back(phi_edge(lambda, f, j, ctx));
  }
  return out;
}

DGPath phi_path(const DGPath& p, const SquierContext& ctx) {
  return phi_path(0, p, ctx.data->star().eta, ctx);
}

Word phi_omega_pi(const Word& w_over_b, const SquierContext& ctx) {
  const SchutzData& d = *ctx.data;
  return d.phi(0, d.kappa(d.pi(w_over_b), d.star().omega));
}

DGEdge h_edge(const SquierContext& ctx) {
  return DGEdge{{}, ctx.q->r4_index, +1, {}};
}

DGEdge b_edge(int b, const SquierContext& ctx) {
  return DGEdge{{}, ctx.q->r3_index.at(b), +1, {}};
}

DGPath lambda_path_primed(const Word& w_over_b, const SquierContext& ctx) {
  DGPath acc = empty_path(Word{});
  for (int b : w_over_b) {
    acc = arrow_down(acc, edge_path(b_edge(b, ctx), ctx.q_pres.rules),
                     ctx.q_pres.rules);
  }
  return acc;
}

DGPath lambda_path(const Word& w_over_b, const SquierContext& ctx) {
  return arrow_down(lambda_path_primed(w_over_b, ctx),
                    edge_path(h_edge(ctx), ctx.q_pres.rules),
                    ctx.q_pres.rules);
}

namespace {

DGPath search_named(const char* what, const MonoidPresentation& pres,
                    const Word& from, const Word& to, PathSearchCaps caps) {
  try {
    return path_search(pres, from, to, caps);
  } catch (const SearchExhausted& e) {
    throw SearchExhausted(std::string(what) + ": " + e.what());
  }
}

}  // namespace

CanonicalPaths CanonicalPaths::build(const SquierContext& ctx,
                                     const FiniteGroupTable& group) {
  const SchutzData& d = *ctx.data;
  CanonicalPaths cp;
  for (int b = 0; b < d.b_count(); ++b) {
    cp.p_b_.push_back(search_named(
        "canonical path P[b]", ctx.p_pres, cat(d.pi_base(b), d.h_word()),
        cat(d.h_word(), d.psi(Word{b})), ctx.caps));
  }
  for (const SchutzRelation& rel : ctx.q->relations) {
    cp.p_rel_.push_back(search_named(
        "canonical path P[u,v]", ctx.p_pres, cat(d.pi(rel.lhs), d.h_word()),
        cat(d.pi(rel.rhs), d.h_word()), ctx.caps));
  }
  for (int j : d.star().J) {
    if (d.star().act_word(d.h_word(), j) == kDead) {
      continue;
    }
    Word y = d.phi(0, d.kappa(d.h_word(), j));
    if (std::find(cp.w_.begin(), cp.w_.end(), y) != cp.w_.end()) {
      continue;
    }
    const int y_elt = group.element_of(y);
    Word y_hat = group.element_word(group.inv(y_elt));
    cp.d_.push_back(search_named("inverse path D_y", ctx.q_pres,
                                 cat(y, y_hat), Word{}, ctx.caps));
    cp.d_star_.push_back(search_named("inverse path D_y*", ctx.q_pres,
                                      cat(y_hat, y), Word{}, ctx.caps));
    cp.w_.push_back(std::move(y));
    cp.hat_.push_back(std::move(y_hat));
  }
  return cp;
}

int CanonicalPaths::w_index(const Word& y) const {
  auto it = std::find(w_.begin(), w_.end(), y);
  return it == w_.end() ? -1 : static_cast<int>(it - w_.begin());
}

DGPath CanonicalPaths::p_word(const Word& w_over_b,
                              const SquierContext& ctx) const {
  const SchutzData& d = *ctx.data;
  if (w_over_b.empty()) {
    return empty_path(d.h_word());
  }
  auto it = p_word_memo_.find(w_over_b);
  if (it != p_word_memo_.end()) {
    return it->second;
  }
  Word prefix(w_over_b.begin(), w_over_b.end() - 1);
  const int b = w_over_b.back();
  // P[w'b] = (pi(w') . P[b]) o (P[w'] . psi(b))
  DGPath path = concat(act(d.pi(prefix), p_b_.at(b), {}),
                       act({}, p_word(prefix, ctx), d.psi(Word{b})));
  p_word_memo_.emplace(w_over_b, path);
  return path;
}

DGPath theta(const DGEdge& e_over_b, const CanonicalPaths& cp,
             const SquierContext& ctx) {
  if (e_over_b.sign == -1) {
    DGEdge positive = e_over_b;
    positive.sign = +1;
    return inverse_path(theta(positive, cp, ctx), ctx.p_pres.rules);
  }
  const SchutzData& d = *ctx.data;
  const Rule& rel = ctx.q_pres.rules.at(e_over_b.rule_id);
  const DGPath pw2 = cp.p_word(e_over_b.right, ctx);
  DGPath inner = act(d.pi(rel.lhs), pw2, {});
  inner = concat(std::move(inner),
                 act({}, cp.p_rel(e_over_b.rule_id), d.psi(e_over_b.right)));
  inner = concat(std::move(inner),
                 act(d.pi(rel.rhs), inverse_path(pw2, ctx.p_pres.rules), {}));
  return act(d.pi(e_over_b.left), std::move(inner), {});
}

DGPath z_path(const DGEdge& e_over_b, const CanonicalPaths& cp,
              const SquierContext& ctx) {
  const Rules& qrules = ctx.q_pres.rules;
  DGPath out = edge_path(e_over_b, qrules);
  out = concat(std::move(out), lambda_path(edge_target(e_over_b, qrules), ctx));
  out = concat(std::move(out),
               inverse_path(phi_path(theta(e_over_b, cp, ctx), ctx), qrules));
  out = concat(std::move(out),
               inverse_path(lambda_path(edge_source(e_over_b, qrules), ctx),
                            qrules));
  return out;
}

std::vector<int> reachable_j(const SquierContext& ctx) {
  const SchutzData& d = *ctx.data;
  std::set<int> seen{d.star().eta};
  std::vector<int> work{d.star().eta};
  while (!work.empty()) {
    int j = work.back();
    work.pop_back();
    for (int b = 0; b < d.b_count(); ++b) {
      const int next = d.star().act_word(d.psi(Word{b}), j);
      if (next == kDead) {
        throw InternalError("psi(b)*j died on a reachable j");
      }
      if (seen.insert(next).second) {
        work.push_back(next);
      }
    }
  }
  return std::vector<int>(seen.begin(), seen.end());
}

std::vector<DGPath> build_Y1(const std::vector<DGPath>& X,
                             const SquierContext& ctx) {
  const SchutzData& d = *ctx.data;
  std::vector<DGPath> out;
  std::set<DGPath> dedup;
  // The member phi(lambda.kappa(alpha, source beta*j), kappa(P, beta*j))
  // depends on (alpha, beta, lambda, j) only through the pair
  // (lambda' , j') = (lambda.kappa(alpha, source*j'), beta*j), and the
  // realizable pairs are exactly those with H_{lambda'} inside
  // S.r_{source*j'}; so the family is enumerated directly over them.
  for (const DGPath& p : X) {
    for (int j : d.star().J) {
      const int src_j = d.star().act_word(p.base, j);
      if (src_j == kDead) {
        continue;
      }
      for (int lam = 0; lam < d.lambda().size(); ++lam) {
        if (!d.h_class_in_ideal(lam, src_j)) {
          continue;
        }
        DGPath member = phi_path(lam, p, j, ctx);
        if (dedup.insert(member).second) {
          out.push_back(std::move(member));
        }
      }
    }
  }
  return out;
}

std::vector<DGPath> build_Y2(const CanonicalPaths& cp,
                             const SquierContext& ctx) {
  const Rules& qrules = ctx.q_pres.rules;
  std::vector<DGPath> out;
  for (std::size_t wi = 0; wi < cp.W().size(); ++wi) {
    const Word& y = cp.W()[wi];
    DGPath member = act({}, inverse_path(cp.D(wi), qrules), y);
    member = concat(std::move(member), act(y, cp.D_star(wi), {}));
    out.push_back(std::move(member));
  }
  return out;
}

std::vector<DGPath> build_Y3(const CanonicalPaths& cp,
                             const SquierContext& ctx) {
  const SchutzData& d = *ctx.data;
  const Rules& qrules = ctx.q_pres.rules;
  std::vector<DGPath> out;
  std::set<DGPath> dedup;
  const std::vector<int> js = reachable_j(ctx);
  for (int rel = 0; rel < static_cast<int>(qrules.size()); ++rel) {
    const Word& u = qrules[rel].lhs;
    const Word& v = qrules[rel].rhs;
    for (int sign : {+1, -1}) {
      const Word& in_word = sign == +1 ? u : v;
      const Word& out_word = sign == +1 ? v : u;
      for (int j : js) {
        const Word y = d.phi(0, d.kappa(d.h_word(), j));
        const int wi = cp.w_index(y);
        if (wi < 0) {
          throw InternalError("Y3 word missing from W");
        }
        // P[u,v]^{-sign} mapped through phi(1, kappa(. , j)), then dressed
        // with y-hat; the D_y conjugations close the circuit.
        DGPath quv = cp.p_rel(rel);
        if (sign == +1) {
          quv = inverse_path(quv, ctx.p_pres.rules);
        }
        DGPath member =
            inverse_path(lambda_path_primed(in_word, ctx), qrules);
        member = concat(std::move(member),
                        edge_path(DGEdge{{}, rel, sign, {}}, qrules));
        member = concat(std::move(member), lambda_path_primed(out_word, ctx));
        member = concat(std::move(member),
                        act(phi_omega_pi(out_word, ctx),
                            inverse_path(cp.D(wi), qrules), {}));
        member = concat(std::move(member),
                        act({}, phi_path(0, quv, j, ctx), cp.hat(wi)));
        member = concat(std::move(member),
                        act(phi_omega_pi(in_word, ctx), cp.D(wi), {}));
        if (dedup.insert(member).second) {
          out.push_back(std::move(member));
        }
      }
    }
  }
  return out;
}

}  // namespace schutzen
