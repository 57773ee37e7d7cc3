#include "schutzen/json_io.hpp"

#include <json.hpp>

#include "schutzen/error.hpp"

namespace schutzen {

using json = nlohmann::ordered_json;

namespace {

json path_to_json(const DGPath& p, const Alphabet& a) {
  json edges = json::array();
  for (const DGEdge& e : p.edges) {
    edges.push_back(json{{"left", a.format_word(e.left)},
                         {"rule", e.rule_id},
                         {"sign", e.sign},
                         {"right", a.format_word(e.right)}});
  }
  return json{{"base", a.format_word(p.base)}, {"edges", std::move(edges)}};
}

DGPath path_from_json(const json& j, const Alphabet& a) {
  DGPath p;
  p.base = a.parse_word(j.at("base").get<std::string>());
  for (const json& je : j.at("edges")) {
    DGEdge e;
    e.left = a.parse_word(je.at("left").get<std::string>());
    e.rule_id = je.at("rule").get<int>();
    e.sign = je.at("sign").get<int>();
    e.right = a.parse_word(je.at("right").get<std::string>());
    p.edges.push_back(std::move(e));
  }
  return p;
}

json triples_to_json(const std::vector<RelationTriple>& triples) {
  json out = json::array();
  for (const auto& t : triples) {
    out.push_back(json::array({t[0], t[1], t[2]}));
  }
  return out;
}

std::vector<RelationTriple> triples_from_json(const json& j) {
  std::vector<RelationTriple> out;
  for (const json& t : j) {
    out.push_back({t.at(0).get<std::string>(), t.at(1).get<std::string>(),
                   t.at(2).get<std::string>()});
  }
  return out;
}

json parse_or_throw(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw ParseError(0, "invalid JSON document");
  }
  return j;
}

}  // namespace

std::string emit_presentation_doc(const PresentationDoc& doc) {
  json j;
  j["alphabet"] = doc.alphabet;
  json input_rules = json::array();
  for (const auto& r : doc.input_rules) {
    input_rules.push_back(json::array({r[0], r[1]}));
  }
  j["input_rules"] = std::move(input_rules);
  json completed = json::array();
  for (const auto& r : doc.completed_rules) {
    completed.push_back(json::array({r[0], r[1]}));
  }
  j["completed_rules"] = std::move(completed);
  j["h_class"] = doc.h_class;
  j["h_word"] = doc.h_word;
  j["stab_word"] = doc.stab_word;
  j["generators"] = doc.generators;
  j["relations"] = triples_to_json(doc.relations);
  j["trivial_relations"] = triples_to_json(doc.trivial_relations);
  j["verification"] = json{{"checked", doc.verified},
                           {"failures", doc.failures}};
  return j.dump(2) + "\n";
}

PresentationDoc parse_presentation_doc(const std::string& text) {
  json j = parse_or_throw(text);
  PresentationDoc doc;
  doc.alphabet = j.at("alphabet").get<std::vector<std::string>>();
  for (const json& r : j.at("input_rules")) {
    doc.input_rules.push_back(
        {r.at(0).get<std::string>(), r.at(1).get<std::string>()});
  }
  for (const json& r : j.at("completed_rules")) {
    doc.completed_rules.push_back(
        {r.at(0).get<std::string>(), r.at(1).get<std::string>()});
  }
  doc.h_class = j.at("h_class").get<std::string>();
  doc.h_word = j.at("h_word").get<std::string>();
  doc.stab_word = j.at("stab_word").get<std::string>();
  doc.generators = j.at("generators").get<std::vector<std::string>>();
  doc.relations = triples_from_json(j.at("relations"));
  doc.trivial_relations = triples_from_json(j.at("trivial_relations"));
  doc.verified = j.at("verification").at("checked").get<long>();
  doc.failures = j.at("verification").at("failures").get<long>();
  return doc;
}

std::string emit_homotopy_doc(const HomotopyBaseDoc& doc) {
  Alphabet b(doc.b_alphabet);
  json j;
  j["b_alphabet"] = doc.b_alphabet;
  j["relations"] = triples_to_json(doc.relations);
  j["x_size"] = doc.x_size;
  for (const char* key : {"y1", "y2", "y3"}) {
    const std::vector<DGPath>& family =
        key[1] == '1' ? doc.y1 : (key[1] == '2' ? doc.y2 : doc.y3);
    json arr = json::array();
    for (const DGPath& p : family) {
      arr.push_back(path_to_json(p, b));
    }
    j[key] = std::move(arr);
  }
  j["sizes"] = json{{"B", doc.b_alphabet.size()},
                    {"U", doc.relations.size()},
                    {"X", doc.x_size},
                    {"Y1", doc.y1.size()},
                    {"Y2", doc.y2.size()},
                    {"Y3", doc.y3.size()}};
  j["closedness"] = json{{"checked", doc.closed_checked},
                         {"failures", doc.closed_failures}};
  return j.dump(2) + "\n";
}

HomotopyBaseDoc parse_homotopy_doc(const std::string& text) {
  json j = parse_or_throw(text);
  HomotopyBaseDoc doc;
  doc.b_alphabet = j.at("b_alphabet").get<std::vector<std::string>>();
  Alphabet b(doc.b_alphabet);
  doc.relations = triples_from_json(j.at("relations"));
  doc.x_size = j.at("x_size").get<std::size_t>();
  for (const json& p : j.at("y1")) doc.y1.push_back(path_from_json(p, b));
  for (const json& p : j.at("y2")) doc.y2.push_back(path_from_json(p, b));
  for (const json& p : j.at("y3")) doc.y3.push_back(path_from_json(p, b));
  doc.closed_checked = j.at("closedness").at("checked").get<long>();
  doc.closed_failures = j.at("closedness").at("failures").get<long>();
  return doc;
}

std::string emit_x_file(const std::vector<DGPath>& paths, const Alphabet& a) {
  json arr = json::array();
  for (const DGPath& p : paths) {
    arr.push_back(path_to_json(p, a));
  }
  json j;
  j["paths"] = std::move(arr);
  return j.dump(2) + "\n";
}

std::vector<DGPath> parse_x_file(const std::string& text, const Alphabet& a) {
  json j = parse_or_throw(text);
  std::vector<DGPath> out;
  for (const json& p : j.at("paths")) {
    out.push_back(path_from_json(p, a));
  }
  return out;
}

}  // namespace schutzen
