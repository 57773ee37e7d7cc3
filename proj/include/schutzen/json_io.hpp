#pragma once

#include <array>
#include <string>
#include <vector>

#include "schutzen/derivation.hpp"
#include "schutzen/words.hpp"

namespace schutzen {

// Relation triple [lhs, rhs, tag] with words already formatted.
using RelationTriple = std::array<std::string, 3>;

// The machine-readable <B|U> document.
struct PresentationDoc {
  std::vector<std::string> alphabet;
  std::vector<std::array<std::string, 2>> input_rules;
  std::vector<std::array<std::string, 2>> completed_rules;
  std::string h_class;
  std::string h_word;
  std::string stab_word;
  std::vector<std::string> generators;
  std::vector<RelationTriple> relations;          // nontrivial
  std::vector<RelationTriple> trivial_relations;  // emitted verbosely
  long verified = 0;
  long failures = 0;

  friend bool operator==(const PresentationDoc&,
                         const PresentationDoc&) = default;
};

std::string emit_presentation_doc(const PresentationDoc& doc);
PresentationDoc parse_presentation_doc(const std::string& text);

// The Y1/Y2/Y3 document. Paths are serialized as
// {base, edges:[{left, rule, sign, right}]} with words over b_alphabet.
struct HomotopyBaseDoc {
  std::vector<std::string> b_alphabet;
  std::vector<RelationTriple> relations;  // all, rule id = position
  std::size_t x_size = 0;
  std::vector<DGPath> y1, y2, y3;
  long closed_checked = 0;
  long closed_failures = 0;

  friend bool operator==(const HomotopyBaseDoc&,
                         const HomotopyBaseDoc&) = default;
};

std::string emit_homotopy_doc(const HomotopyBaseDoc& doc);
HomotopyBaseDoc parse_homotopy_doc(const std::string& text);

// A user-supplied homotopy base: {"paths": [...]} over the given alphabet.
std::string emit_x_file(const std::vector<DGPath>& paths, const Alphabet& a);
std::vector<DGPath> parse_x_file(const std::string& text, const Alphabet& a);

}  // namespace schutzen
