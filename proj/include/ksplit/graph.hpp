#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ksplit/labelled_partition.hpp"

namespace ksplit {

struct Edge {
  std::string id;
  std::string u;
  std::string v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected multigraph. Parallel edges are allowed, loops are not.
/// Vertices are kept in natural order; edges keep their insertion order.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(std::vector<std::string> vertices, std::vector<Edge> edges);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::optional<std::size_t> vertex_index(std::string_view id) const;
  std::size_t require_vertex(std::string_view id) const;
  bool has_vertex(std::string_view id) const { return vertex_index(id).has_value(); }
  std::optional<std::size_t> edge_index(std::string_view id) const;

  /// Same vertices, only the listed edges.
  Multigraph spanning_subgraph(std::span<const std::string> edge_ids) const;

  /// Same vertex set and the same edges (compared by id and endpoints,
  /// ignoring order).
  friend bool operator==(const Multigraph& a, const Multigraph& b);

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, std::size_t> vertex_index_;
  std::unordered_map<std::string, std::size_t> edge_index_;
};

/// A graph with a terminal set. Top-level inputs need two terminals; merged
/// pieces of a splitting may carry fewer.
struct KGraph {
  KGraph() = default;
  KGraph(Multigraph graph, std::vector<std::string> terminals);

  Multigraph graph;
  std::vector<std::string> terminals;  // natural order, unique

  friend bool operator==(const KGraph&, const KGraph&) = default;
};

/// Two edge-disjoint pieces of a K-graph glued along `separator`.
struct KSplitting {
  KGraph side1;
  KGraph side2;
  std::vector<std::string> separator;  // natural order

  const KGraph& side(int i) const { return i == 1 ? side1 : side2; }
  /// Terminals lying in the separator.
  std::vector<std::string> separator_terminals() const;
};

/// Connected components as blocks; a block is labelled iff it holds a terminal.
LabelledPartition induced_partition(const Multigraph& graph, std::span<const std::string> terminals);

/// induced_partition restricted to `boundary`.
LabelledPartition boundary_partition(const Multigraph& graph, std::span<const std::string> terminals,
                                     std::span<const std::string> boundary);

/// Name of the vertex that replaces a block when merging. Singleton blocks
/// keep their vertex id; larger blocks become "x+y+z".
std::string block_vertex_name(const LabelledPartition& pi, std::size_t block);

/// Identifies the vertices of each block of `pi` (labels are ignored). Edges
/// inside a block disappear; parallel edges survive.
Multigraph merge(const Multigraph& graph, const LabelledPartition& pi);

/// Merged K-graph of one side for a state `pi` of the separator: terminals
/// are the side's terminals off the separator plus every block that is
/// labelled or holds a terminal.
KGraph merged_kgraph(const KGraph& side, const LabelledPartition& pi);

/// Whole separator merged into one terminal vertex.
KGraph x_merged_kgraph(const KGraph& side, std::span<const std::string> separator);

/// True iff all terminals share a component. Vacuously true for at most one
/// terminal.
bool k_connected(const Multigraph& graph, std::span<const std::string> terminals);

/// Maps a vertex off the separator to side 1 or 2; its whole component of
/// G - X follows it.
using SideAssignment = std::map<std::string, int>;

/// Splits `whole` at `separator`. Components of G - X go to the side named in
/// `assignment`; the rest are spread greedily by edge count after making sure
/// both sides receive a terminal. Edges with both ends in X go to side 1.
KSplitting split_by_separator(const KGraph& whole, std::span<const std::string> separator,
                              const SideAssignment& assignment = {});

/// Union of both sides.
KGraph reassemble(const KSplitting& split);

/// Throws std::invalid_argument unless `split` is a valid splitting of `whole`.
void validate_splitting(const KGraph& whole, const KSplitting& split);

}  // namespace ksplit
