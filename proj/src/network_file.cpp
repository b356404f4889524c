#include "ksplit/network_file.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace ksplit {

namespace {

using nlohmann::json;

std::vector<std::string> string_list(const json& doc, const char* key) {
  if (!doc.contains(key)) throw std::invalid_argument(std::string("network file is missing \"") + key + "\"");
  const json& arr = doc.at(key);
  if (!arr.is_array()) throw std::invalid_argument(std::string("\"") + key + "\" must be an array");
  std::vector<std::string> out;
  for (const auto& item : arr) {
    if (!item.is_string()) throw std::invalid_argument(std::string("\"") + key + "\" must hold strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::string required_string(const json& obj, const char* key) {
  if (!obj.contains(key) || !obj.at(key).is_string()) {
    throw std::invalid_argument(std::string("edge entry needs a string \"") + key + "\"");
  }
  return obj.at(key).get<std::string>();
}

Rational probability(const json& value, const std::string& edge) {
  Rational p;
  if (value.is_string()) {
    p = parse_rational(value.get<std::string>());
  } else if (value.is_number_integer()) {
    p = Rational(value.dump());
  } else if (value.is_number_float()) {
    // Re-read the shortest decimal form so 0.1 stays 1/10.
    p = parse_rational(value.dump());
  } else {
    throw std::invalid_argument("edge '" + edge + "' needs a probability \"p\"");
  }
  if (p < 0 || p > 1) throw std::invalid_argument("probability of edge '" + edge + "' is outside [0,1]");
  return p;
}

}  // namespace

KGraph NetworkFile::kgraph() const {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (const auto& e : edges) es.push_back({e.id, e.u, e.v});
  return KGraph(Multigraph(vertices, std::move(es)), terminals);
}

ProbabilityMap NetworkFile::probabilities() const {
  ProbabilityMap out;
  for (const auto& e : edges) out.emplace(e.id, e.p);
  return out;
}

KNetwork NetworkFile::network() const { return KNetwork(kgraph(), probabilities()); }

NetworkFile parse_network_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("network file must be a JSON object");

  NetworkFile file;
  file.vertices = string_list(doc, "vertices");
  file.terminals = string_list(doc, "terminals");
  if (!doc.contains("edges") || !doc.at("edges").is_array()) throw std::invalid_argument("network file needs an \"edges\" array");
  for (const auto& e : doc.at("edges")) {
    if (!e.is_object()) throw std::invalid_argument("edge entries must be objects");
    NetworkFile::EdgeSpec spec;
    spec.id = required_string(e, "id");
    spec.u = required_string(e, "u");
    spec.v = required_string(e, "v");
    if (!e.contains("p")) throw std::invalid_argument("edge '" + spec.id + "' needs a probability \"p\"");
    spec.p = probability(e.at("p"), spec.id);
    file.edges.push_back(std::move(spec));
  }
  if (doc.contains("separator")) file.separator = string_list(doc, "separator");
  if (doc.contains("side_assignment")) {
    const json& sides = doc.at("side_assignment");
    if (!sides.is_object()) throw std::invalid_argument("\"side_assignment\" must be an object");
    for (const auto& [vertex, side] : sides.items()) {
      if (!side.is_number_integer() || (side.get<int>() != 1 && side.get<int>() != 2)) {
        throw std::invalid_argument("side of '" + vertex + "' must be 1 or 2");
      }
      file.side_assignment.emplace(vertex, side.get<int>());
    }
  }

  if (std::set<std::string>(file.terminals.begin(), file.terminals.end()).size() < 2) {
    throw std::invalid_argument("a network needs at least two distinct terminals");
  }
  // Structural checks (unique ids, endpoints, loops, terminals).
  file.kgraph();
  if (file.separator) {
    for (const auto& x : *file.separator) {
      if (std::find(file.vertices.begin(), file.vertices.end(), x) == file.vertices.end()) {
        throw std::invalid_argument("separator vertex '" + x + "' is not a vertex");
      }
    }
  }
  return file;
}

NetworkFile load_network_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open network file '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_network_json(buffer.str());
}

std::string render_network_json(const NetworkFile& file) {
  json doc;
  doc["vertices"] = file.vertices;
  doc["edges"] = json::array();
  for (const auto& e : file.edges) {
    doc["edges"].push_back({{"id", e.id}, {"u", e.u}, {"v", e.v}, {"p", to_string(e.p)}});
  }
  doc["terminals"] = file.terminals;
  if (file.separator) doc["separator"] = *file.separator;
  if (!file.side_assignment.empty()) {
    json sides = json::object();
    for (const auto& [vertex, side] : file.side_assignment) sides[vertex] = side;
    doc["side_assignment"] = sides;
  }
  return doc.dump(2) + "\n";
}

NetworkFile to_network_file(const KNetwork& net, std::optional<std::vector<std::string>> separator,
                            SideAssignment assignment) {
  NetworkFile file;
  file.vertices = net.graph().vertices();
  for (const auto& e : net.graph().edges()) file.edges.push_back({e.id, e.u, e.v, net.prob(e.id)});
  file.terminals = net.terminals();
  file.separator = std::move(separator);
  file.side_assignment = std::move(assignment);
  return file;
}

}  // namespace ksplit
