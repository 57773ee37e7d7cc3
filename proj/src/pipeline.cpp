#include "schutzen/pipeline.hpp"

#include "schutzen/error.hpp"

namespace schutzen {

Pipeline::Pipeline(const MonoidPresentation& in, const PipelineOptions& o)
    : input(in),
      opts(o),
      cs(knuth_bendix(in, o.kb)),
      universe(enumerate_universe(cs, o.max_elements)),
      green(compute_green(universe)) {}

std::unique_ptr<Pipeline> Pipeline::build_impl(const MonoidPresentation& input,
                                               const Word& selector,
                                               const Word& e_word,
                                               const PipelineOptions& opts,
                                               bool corrupt) {
  std::unique_ptr<Pipeline> p(new Pipeline(input, opts));
  p->selector_word = selector;
  p->selector_elt = p->universe.element_of(selector);
  p->h_class_id = p->green.h_class_of.at(p->selector_elt);
  p->e_word = e_word;
  p->data = SchutzData::choose_representatives(p->universe, p->green,
                                               p->h_class_id, e_word,
                                               p->selector_elt);
  if (corrupt && !p->data.corrupt_kappa_for_tests()) {
    throw InternalError("no corruptible kappa entry found");
  }
  p->q = build_presentation(p->data);
  p->ctx = make_squier_context(p->data, p->q, p->cs.as_presentation(),
                               opts.path);
  return p;
}

std::unique_ptr<Pipeline> Pipeline::build(const MonoidPresentation& input,
                                          const Word& selector,
                                          const Word& e_word,
                                          const PipelineOptions& opts) {
  return build_impl(input, selector, e_word, opts, false);
}

std::unique_ptr<Pipeline> Pipeline::build_corrupted(
    const MonoidPresentation& input, const Word& selector, const Word& e_word,
    const PipelineOptions& opts) {
  return build_impl(input, selector, e_word, opts, true);
}

void Pipeline::use_original_presentation() {
  ctx = make_squier_context(data, q, input, opts.path);
}

HomotopyArtifacts build_homotopy(Pipeline& p,
                                 std::optional<std::vector<DGPath>> user_x) {
  std::vector<DGPath> x;
  if (user_x) {
    x = std::move(*user_x);
  } else {
    for (CriticalCircuit& c : critical_circuits(p.cs)) {
      x.push_back(std::move(c.closed));
    }
  }
  HomotopyArtifacts out{std::move(x), enumerate_group(p.q, p.opts.group),
                        CanonicalPaths{},
                        {},
                        {},
                        {}};
  out.cp = CanonicalPaths::build(p.ctx, out.group);
  out.y1 = build_Y1(out.x, p.ctx);
  out.y2 = build_Y2(out.cp, p.ctx);
  out.y3 = build_Y3(out.cp, p.ctx);
  return out;
}

}  // namespace schutzen
