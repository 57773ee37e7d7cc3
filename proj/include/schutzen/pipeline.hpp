#pragma once

#include <memory>
#include <optional>

#include "schutzen/squier.hpp"

namespace schutzen {

struct PipelineOptions {
  int max_elements = 5000;
  CompletionLimits kb;
  PathSearchCaps path;
  GroupCaps group;
};

// One full run for a chosen H-class: completion, enumeration, Green's
// structure, representatives and <B|U>. Heap-allocate and do not move; the
// later stages point into the earlier ones.
class Pipeline {
 public:
  static std::unique_ptr<Pipeline> build(const MonoidPresentation& input,
                                         const Word& selector,
                                         const Word& e_word,
                                         const PipelineOptions& opts = {});

  // Variant used by tests to tamper with the kappa table between
  // choose_representatives and build_presentation.
  static std::unique_ptr<Pipeline> build_corrupted(
      const MonoidPresentation& input, const Word& selector,
      const Word& e_word, const PipelineOptions& opts = {});

  MonoidPresentation input;
  PipelineOptions opts;
  CompleteSystem cs;
  MonoidUniverse universe;
  GreenStructure green;
  Word selector_word;
  int selector_elt = -1;
  int h_class_id = -1;
  Word e_word;
  SchutzData data;
  SchutzPresentation q;

  // Derivation-graph context over the completed presentation; replaced by
  // with_original_presentation() when a user-supplied homotopy base for the
  // original presentation is in play.
  SquierContext ctx;
  void use_original_presentation();

  Pipeline(const Pipeline&) = delete;
  Pipeline& operator=(const Pipeline&) = delete;

 private:
  Pipeline(const MonoidPresentation& in, const PipelineOptions& o);
  static std::unique_ptr<Pipeline> build_impl(const MonoidPresentation& input,
                                              const Word& selector,
                                              const Word& e_word,
                                              const PipelineOptions& opts,
                                              bool corrupt);
};

// The homotopy base X over ctx.p_pres plus the derived Y families.
struct HomotopyArtifacts {
  std::vector<DGPath> x;
  FiniteGroupTable group;
  CanonicalPaths cp;
  std::vector<DGPath> y1, y2, y3;
};

// X defaults to the critical circuits of the completed system; a user base
// (over the original presentation) can be passed instead.
HomotopyArtifacts build_homotopy(Pipeline& p,
                                 std::optional<std::vector<DGPath>> user_x =
                                     std::nullopt);

}  // namespace schutzen
