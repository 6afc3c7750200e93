#include "klr/quiver_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace klr {

using nlohmann::json;

Quiver parse_quiver_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("quiver file: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidInput("quiver file: top level must be an object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw InvalidInput("quiver file: field 'vertices' must be an array of strings");

  std::vector<std::string> names;
  for (size_t k = 0; k < doc["vertices"].size(); ++k) {
    const auto& v = doc["vertices"][k];
    if (!v.is_string()) throw InvalidInput("quiver file: vertices[" + std::to_string(k) + "] is not a string");
    names.push_back(v.get<std::string>());
  }
  auto find = [&](const json& v, const std::string& where) {
    if (!v.is_string()) throw InvalidInput("quiver file: " + where + " is not a vertex name");
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == v.get<std::string>()) return static_cast<int>(i);
    throw InvalidInput("quiver file: " + where + " names unknown vertex " + v.get<std::string>());
  };

  std::vector<std::pair<int, int>> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw InvalidInput("quiver file: field 'edges' must be an array");
    for (size_t k = 0; k < doc["edges"].size(); ++k) {
      const auto& e = doc["edges"][k];
      std::string where = "edges[" + std::to_string(k) + "]";
      if (!e.is_array() || e.size() != 2) throw InvalidInput("quiver file: " + where + " must be [source, target]");
      edges.emplace_back(find(e[0], where + "[0]"), find(e[1], where + "[1]"));
    }
  }
  Quiver q(names, edges);

  if (doc.contains("weights")) {
    if (!doc["weights"].is_object()) throw InvalidInput("quiver file: field 'weights' must be an object");
    for (auto& [wname, wval] : doc["weights"].items()) {
      std::string where = "weights." + wname;
      if (!wval.is_object()) throw InvalidInput("quiver file: " + where + " must map vertices to integers");
      Weight w(q.size(), 0);
      for (auto& [vname, c] : wval.items()) {
        if (!c.is_number_integer()) throw InvalidInput("quiver file: " + where + "." + vname + " is not an integer");
        w[find(json(vname), where)] = c.get<int>();
      }
      q.named_weights[wname] = w;
    }
  }
  return q;
}

Quiver load_quiver(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open quiver file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_quiver_json(ss.str());
}

std::string quiver_to_json(const Quiver& q) {
  json doc;
  doc["vertices"] = json::array();
  for (int i = 0; i < q.size(); ++i) doc["vertices"].push_back(q.name(i));
  doc["edges"] = json::array();
  for (auto [s, t] : q.edge_list()) doc["edges"].push_back({q.name(s), q.name(t)});
  doc["weights"] = json::object();
  for (auto& [name, w] : q.named_weights) {
    json m = json::object();
    for (int i = 0; i < q.size(); ++i)
      if (w[i] != 0) m[q.name(i)] = w[i];
    doc["weights"][name] = m;
  }
  return doc.dump(2);
}

Weight resolve_weight(const Quiver& q, const std::string& spec) {
  if (auto it = q.named_weights.find(spec); it != q.named_weights.end()) return it->second;
  Weight w = parse_csv_ints(spec);
  if (static_cast<int>(w.size()) != q.size())
    throw InvalidInput("weight " + spec + " has " + std::to_string(w.size()) + " entries, quiver has " +
                       std::to_string(q.size()) + " vertices");
  return w;
}

}  // namespace klr
