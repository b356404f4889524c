#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ksplit/graph.hpp"
#include "ksplit/reliability.hpp"

namespace ksplit {

/// JSON network description:
///
///   {
///     "vertices": ["a", "x", "b"],
///     "edges": [{"id": "e1", "u": "a", "v": "x", "p": "1/2"}, ...],
///     "terminals": ["a", "b"],
///     "separator": ["x"],              // optional
///     "side_assignment": {"a": 1}      // optional
///   }
///
/// "p" is a string ("3/4" or "0.75") or a JSON number; either way it is
/// converted exactly.
struct NetworkFile {
  struct EdgeSpec {
    std::string id;
    std::string u;
    std::string v;
    Rational p;

    friend bool operator==(const EdgeSpec&, const EdgeSpec&) = default;
  };

  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
  std::vector<std::string> terminals;
  std::optional<std::vector<std::string>> separator;
  SideAssignment side_assignment;

  KGraph kgraph() const;
  ProbabilityMap probabilities() const;
  KNetwork network() const;

  friend bool operator==(const NetworkFile&, const NetworkFile&) = default;
};

/// Parses and validates; throws std::invalid_argument with a readable message.
NetworkFile parse_network_json(std::string_view text);
NetworkFile load_network_file(const std::filesystem::path& path);
std::string render_network_json(const NetworkFile& file);

/// Builds a NetworkFile from a network (and optional separator data).
NetworkFile to_network_file(const KNetwork& net, std::optional<std::vector<std::string>> separator = std::nullopt,
                            SideAssignment assignment = {});

}  // namespace ksplit
