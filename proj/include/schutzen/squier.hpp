#pragma once

#include <map>
#include <vector>

#include "schutzen/grouptools.hpp"
#include "schutzen/schutz.hpp"

namespace schutzen {

// Everything the path construction needs: the presentation P over A whose
// derivation graph carries the homotopy base X, the output presentation Q
// over B (with every relation present as a rule, trivial ones included, so
// that the (R3) and (R4) edges exist), and the chosen representatives.
struct SquierContext {
  const MonoidUniverse* universe = nullptr;
  const SchutzData* data = nullptr;
  const SchutzPresentation* q = nullptr;
  MonoidPresentation p_pres;  // over A
  MonoidPresentation q_pres;  // over B, rule id = relation index
  PathSearchCaps caps;

  const LambdaAction& lambda() const { return data->lambda(); }
  const StarAction& star() const { return data->star(); }
};

SquierContext make_squier_context(const SchutzData& d,
                                  const SchutzPresentation& q,
                                  MonoidPresentation p_pres,
                                  PathSearchCaps caps = {});

// phi(lambda, kappa(F, j)) on an edge F of the derivation graph over A:
// an edge over B whose rule is the (R2) relation of (lambda', F's rule, j')
// dressed with phi/kappa words on both sides. Preconditions (i)-(iii):
// source(F)*j != 0, lambda.kappa(source(F), j) != 0, and H_lambda inside
// S.r_{source(F)*j}; throws PreconditionViolated with the failing clause.
DGEdge phi_edge(int lambda, const DGEdge& f, int j, const SquierContext& ctx);

// Edge-wise image of a path, same (lambda, j) for every edge.
DGPath phi_path(int lambda, const DGPath& p, int j, const SquierContext& ctx);

// Shorthand phi(P) = phi(1, kappa(P, eta)); defined whenever source(P)
// represents an element of H.
DGPath phi_path(const DGPath& p, const SquierContext& ctx);

// phi_omega(pi(w)) = phi(1, kappa(pi(w), omega)) as a word over B.
Word phi_omega_pi(const Word& w_over_b, const SquierContext& ctx);

// The (R4) edge 1 -> phi(1, kappa(h, eta)) and the (R3) edges
// b -> phi(1, kappa(pi(b), omega)).
DGEdge h_edge(const SquierContext& ctx);
DGEdge b_edge(int b, const SquierContext& ctx);

// Lambda_w = B_{b_1} down ... down B_{b_k} down H, a path over B from w to
// phi(1, kappa(pi(w) h, eta)); the primed variant omits the trailing H edge
// and ends at phi_omega(pi(w)).
DGPath lambda_path(const Word& w_over_b, const SquierContext& ctx);
DGPath lambda_path_primed(const Word& w_over_b, const SquierContext& ctx);

// Fixed canonical paths: P[b] from pi(b)h to h psi(b) over A, P[u,v] from
// pi(u)h to pi(v)h per relation of Q, the word set W = {phi(1,kappa(h,j))},
// inverse words y-hat, and paths D_y: y y-hat -> 1, D_y*: y-hat y -> 1.
class CanonicalPaths {
 public:
  static CanonicalPaths build(const SquierContext& ctx,
                              const FiniteGroupTable& group);

  const DGPath& p_b(int b) const { return p_b_.at(b); }
  const DGPath& p_rel(int rel) const { return p_rel_.at(rel); }
  // P[w], built inductively from P[b]; P[1] is the empty path at h.
  DGPath p_word(const Word& w_over_b, const SquierContext& ctx) const;

  const std::vector<Word>& W() const { return w_; }
  int w_index(const Word& y) const;
  const Word& hat(int wi) const { return hat_.at(wi); }
  const DGPath& D(int wi) const { return d_.at(wi); }
  const DGPath& D_star(int wi) const { return d_star_.at(wi); }

 private:
  std::vector<DGPath> p_b_;
  std::vector<DGPath> p_rel_;
  std::vector<Word> w_;
  std::vector<Word> hat_;
  std::vector<DGPath> d_;
  std::vector<DGPath> d_star_;
  mutable std::map<Word, DGPath> p_word_memo_;
};

// theta maps an edge of the derivation graph over B to a path over A from
// pi(source)h to pi(target)h.
DGPath theta(const DGEdge& e_over_b, const CanonicalPaths& cp,
             const SquierContext& ctx);

// The closed path E o Lambda_{target E} o phi(theta(E))^-1 o
// Lambda_{source E}^-1, based at source(E).
DGPath z_path(const DGEdge& e_over_b, const CanonicalPaths& cp,
              const SquierContext& ctx);

// J-indices of the form psi(w2)*eta: the closure of {eta} under the letter
// actions of the words psi(b).
std::vector<int> reachable_j(const SquierContext& ctx);

// The three families of the homotopy base for Q. Members are deduplicated
// and every member is closed.
std::vector<DGPath> build_Y1(const std::vector<DGPath>& X,
                             const SquierContext& ctx);
std::vector<DGPath> build_Y2(const CanonicalPaths& cp,
                             const SquierContext& ctx);
std::vector<DGPath> build_Y3(const CanonicalPaths& cp,
                             const SquierContext& ctx);

}  // namespace schutzen
