#include "dmm/json_io.hpp"

#include <fstream>
#include <map>
#include <stdexcept>

namespace dmm {

namespace {

std::vector<std::string> string_list(const json& arr, const char* what) {
  if (!arr.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& item : arr) {
    if (!item.is_string()) throw std::invalid_argument(std::string(what) + " entries must be strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

json to_json(const DeltaMatroid& d) {
  json doc;
  doc["elements"] = d.elements();
  json sets = json::array();
  for (Mask f : d.feasible()) sets.push_back(d.system().labels_of(f));
  doc["feasible"] = sets;
  return doc;
}

DeltaMatroid delta_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("elements") || !doc.contains("feasible"))
    throw std::invalid_argument("delta-matroid document needs \"elements\" and \"feasible\"");
  auto elements = string_list(doc.at("elements"), "elements");
  SetSystem probe(elements, {0});  // label validation
  std::vector<Mask> feasible;
  if (!doc.at("feasible").is_array())
    throw std::invalid_argument("feasible must be an array of label arrays");
  for (const auto& set : doc.at("feasible"))
    feasible.push_back(probe.mask_of(string_list(set, "feasible set")));
  std::sort(feasible.begin(), feasible.end());
  if (std::adjacent_find(feasible.begin(), feasible.end()) != feasible.end())
    throw std::invalid_argument("duplicate feasible set in document");
  return DeltaMatroid(std::move(elements), std::move(feasible));
}

json to_json(const Multimatroid& q) {
  json doc;
  doc["classes"] = q.partition().class_labels();
  json bases = json::array();
  for (Mask b : q.bases()) bases.push_back(q.partition().labels_of(b));
  doc["bases"] = bases;
  return doc;
}

Multimatroid mm_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("classes") || !doc.contains("bases"))
    throw std::invalid_argument("multimatroid document needs \"classes\" and \"bases\"");
  if (!doc.at("classes").is_array())
    throw std::invalid_argument("classes must be an array of label arrays");
  std::vector<std::vector<std::string>> classes;
  for (const auto& cls : doc.at("classes")) classes.push_back(string_list(cls, "class"));
  SkewPartition partition(std::move(classes));
  std::vector<Mask> bases;
  if (!doc.at("bases").is_array())
    throw std::invalid_argument("bases must be an array of label arrays");
  for (const auto& b : doc.at("bases"))
    bases.push_back(partition.mask_of(string_list(b, "basis")));
  return Multimatroid(std::move(partition), std::move(bases));
}

json to_json(const RibbonGraph& g) {
  json doc;
  auto name = [](int h) { return "h" + std::to_string(h); };
  json vertices = json::array();
  for (const auto& rot : g.rotations()) {
    json seq = json::array();
    for (int h : rot) seq.push_back(name(h));
    vertices.push_back(seq);
  }
  doc["vertices"] = vertices;
  json edges = json::object();
  for (int e = 0; e < g.edge_count(); ++e) {
    edges[g.edge_labels()[e]] = {{"halves", {name(2 * e), name(2 * e + 1)}},
                                 {"twisted", g.edge_twisted(e)}};
  }
  doc["edges"] = edges;
  return doc;
}

RibbonGraph ribbon_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
    throw std::invalid_argument("ribbon graph document needs \"vertices\" and \"edges\"");
  if (!doc.at("edges").is_object())
    throw std::invalid_argument("edges must be an object keyed by label");
  std::vector<std::string> labels;
  std::vector<bool> twists;
  std::map<std::string, int> half_ids;
  for (const auto& [label, spec] : doc.at("edges").items()) {
    int e = static_cast<int>(labels.size());
    labels.push_back(label);
    if (!spec.is_object() || !spec.contains("halves") || !spec.contains("twisted"))
      throw std::invalid_argument("edge " + label + " needs \"halves\" and \"twisted\"");
    auto halves = string_list(spec.at("halves"), "halves");
    if (halves.size() != 2 || halves[0] == halves[1])
      throw std::invalid_argument("edge " + label + " must own exactly two distinct half-edges");
    for (int i = 0; i < 2; ++i)
      if (!half_ids.emplace(halves[i], 2 * e + i).second)
        throw std::invalid_argument("half-edge " + halves[i] + " owned by two edges");
    if (!spec.at("twisted").is_boolean())
      throw std::invalid_argument("edge " + label + ": \"twisted\" must be a boolean");
    twists.push_back(spec.at("twisted").get<bool>());
  }
  if (!doc.at("vertices").is_array())
    throw std::invalid_argument("vertices must be an array of half-edge arrays");
  std::vector<std::vector<int>> rotations;
  for (const auto& rot : doc.at("vertices")) {
    std::vector<int> row;
    for (const auto& h : string_list(rot, "vertex rotation")) {
      auto it = half_ids.find(h);
      if (it == half_ids.end())
        throw std::invalid_argument("rotation names unknown half-edge " + h);
      row.push_back(it->second);
    }
    rotations.push_back(std::move(row));
  }
  return RibbonGraph(std::move(labels), std::move(twists), std::move(rotations));
}

DocKind detect_kind(const json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("structure document must be a JSON object");
  if (doc.contains("elements") && doc.contains("feasible")) return DocKind::Delta;
  if (doc.contains("classes") && doc.contains("bases")) return DocKind::Multimatroid;
  if (doc.contains("vertices") && doc.contains("edges")) return DocKind::Ribbon;
  throw std::invalid_argument("unrecognized document: expected a delta-matroid, multimatroid or ribbon graph");
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json doc;
  in >> doc;
  return doc;
}

}  // namespace dmm
