#include "ksplit/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "detail.hpp"

namespace ksplit {

namespace {

std::vector<std::string> sorted_unique(std::vector<std::string> ids, const char* what) {
  std::sort(ids.begin(), ids.end(), [](const auto& a, const auto& b) { return natural_less(a, b); });
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
    throw std::invalid_argument(std::string("duplicate ") + what + " id");
  }
  return ids;
}

std::vector<std::size_t> component_roots(const Multigraph& g) {
  detail::UnionFind uf(g.vertex_count());
  for (const auto& e : g.edges()) uf.unite(g.require_vertex(e.u), g.require_vertex(e.v));
  std::vector<std::size_t> roots(g.vertex_count());
  for (std::size_t i = 0; i < roots.size(); ++i) roots[i] = uf.find(i);
  return roots;
}

bool contains(std::span<const std::string> ids, std::string_view id) {
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

}  // namespace

Multigraph::Multigraph(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(sorted_unique(std::move(vertices), "vertex")), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) vertex_index_.emplace(vertices_[i], i);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.id.empty()) throw std::invalid_argument("edge without an id");
    if (!edge_index_.emplace(e.id, i).second) throw std::invalid_argument("duplicate edge id '" + e.id + "'");
    if (!has_vertex(e.u) || !has_vertex(e.v)) {
      throw std::invalid_argument("edge '" + e.id + "' has an endpoint outside the vertex set");
    }
    if (e.u == e.v) throw std::invalid_argument("edge '" + e.id + "' is a loop");
  }
}

std::optional<std::size_t> Multigraph::vertex_index(std::string_view id) const {
  auto it = vertex_index_.find(std::string(id));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Multigraph::require_vertex(std::string_view id) const {
  auto idx = vertex_index(id);
  if (!idx) throw std::invalid_argument("unknown vertex '" + std::string(id) + "'");
  return *idx;
}

std::optional<std::size_t> Multigraph::edge_index(std::string_view id) const {
  auto it = edge_index_.find(std::string(id));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

Multigraph Multigraph::spanning_subgraph(std::span<const std::string> edge_ids) const {
  std::vector<Edge> kept;
  kept.reserve(edge_ids.size());
  for (const auto& id : edge_ids) {
    auto idx = edge_index(id);
    if (!idx) throw std::invalid_argument("unknown edge '" + id + "'");
    kept.push_back(edges_[*idx]);
  }
  return Multigraph(vertices_, std::move(kept));
}

bool operator==(const Multigraph& a, const Multigraph& b) {
  if (a.vertices_ != b.vertices_ || a.edges_.size() != b.edges_.size()) return false;
  auto normalized = [](const Multigraph& g) {
    std::vector<Edge> out = g.edges_;
    for (auto& e : out) {
      if (natural_less(e.v, e.u)) std::swap(e.u, e.v);
    }
    std::sort(out.begin(), out.end(), [](const Edge& x, const Edge& y) { return x.id < y.id; });
    return out;
  };
  return normalized(a) == normalized(b);
}

KGraph::KGraph(Multigraph g, std::vector<std::string> k)
    : graph(std::move(g)), terminals(sorted_unique(std::move(k), "terminal")) {
  for (const auto& t : terminals) {
    if (!graph.has_vertex(t)) throw std::invalid_argument("terminal '" + t + "' is not a vertex");
  }
}

std::vector<std::string> KSplitting::separator_terminals() const {
  std::vector<std::string> out;
  for (const auto& x : separator) {
    if (contains(side1.terminals, x)) out.push_back(x);
  }
  return out;
}

LabelledPartition induced_partition(const Multigraph& graph, std::span<const std::string> terminals) {
  return boundary_partition(graph, terminals, graph.vertices());
}

LabelledPartition boundary_partition(const Multigraph& graph, std::span<const std::string> terminals,
                                     std::span<const std::string> boundary) {
  if (boundary.empty()) throw std::invalid_argument("boundary set is empty");
  auto ground = make_ground(std::vector<std::string>(boundary.begin(), boundary.end()));
  auto roots = component_roots(graph);

  std::vector<bool> labelled_root(graph.vertex_count(), false);
  for (const auto& t : terminals) labelled_root[roots[graph.require_vertex(t)]] = true;

  std::map<std::size_t, Block> by_root;
  for (std::size_t i = 0; i < ground->size(); ++i) {
    auto v = graph.vertex_index((*ground)[i]);
    if (!v) throw std::invalid_argument("boundary vertex '" + (*ground)[i] + "' is not in the graph");
    Block& b = by_root[roots[*v]];
    b.members |= ElementMask{1} << i;
    b.labelled = labelled_root[roots[*v]];
  }
  std::vector<Block> blocks;
  for (auto& [root, b] : by_root) blocks.push_back(b);
  return LabelledPartition(std::move(ground), std::move(blocks));
}

std::string block_vertex_name(const LabelledPartition& pi, std::size_t block) {
  std::string name;
  for (ElementMask m = pi.blocks()[block].members; m != 0; m &= m - 1) {
    if (!name.empty()) name += '+';
    name += pi.ground()[detail::lowest(m)];
  }
  return name;
}

Multigraph merge(const Multigraph& graph, const LabelledPartition& pi) {
  const Ground& x = pi.ground();
  std::vector<std::string> names(pi.block_count());
  for (std::size_t b = 0; b < names.size(); ++b) names[b] = block_vertex_name(pi, b);

  // Vertex -> replacement name, for vertices in X.
  std::unordered_map<std::string, std::size_t> block_of;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!graph.has_vertex(x[i])) throw std::invalid_argument("merge: '" + x[i] + "' is not a vertex");
    block_of.emplace(x[i], pi.block_of(i));
  }

  std::vector<std::string> vertices;
  for (const auto& v : graph.vertices()) {
    if (block_of.count(v) == 0) vertices.push_back(v);
  }
  for (const auto& n : names) {
    if (block_of.count(n) == 0 && graph.has_vertex(n)) {
      throw std::invalid_argument("merged vertex name '" + n + "' collides with an existing vertex");
    }
    vertices.push_back(n);
  }

  auto image = [&](const std::string& v) -> const std::string& {
    auto it = block_of.find(v);
    return it == block_of.end() ? v : names[it->second];
  };
  std::vector<Edge> edges;
  for (const auto& e : graph.edges()) {
    const auto& u = image(e.u);
    const auto& v = image(e.v);
    if (u != v) edges.push_back({e.id, u, v});
  }
  return Multigraph(std::move(vertices), std::move(edges));
}

KGraph merged_kgraph(const KGraph& side, const LabelledPartition& pi) {
  const Ground& x = pi.ground();
  ElementMask terminal_mask = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (contains(side.terminals, x[i])) terminal_mask |= ElementMask{1} << i;
  }
  auto base = LabelledPartition::finest(pi.ground_ptr(), terminal_mask);
  if (!refines(base, pi) || pi.labelled_count() == 0) {
    throw std::invalid_argument("state " + pi.to_string() + " is not above " + base.to_string() +
                                " with a labelled block");
  }

  std::vector<std::string> terminals;
  for (const auto& t : side.terminals) {
    if (!x.index_of(t)) terminals.push_back(t);
  }
  for (std::size_t b = 0; b < pi.block_count(); ++b) {
    const Block& block = pi.blocks()[b];
    if (block.labelled || (block.members & terminal_mask) != 0) terminals.push_back(block_vertex_name(pi, b));
  }
  return KGraph(merge(side.graph, pi), std::move(terminals));
}

KGraph x_merged_kgraph(const KGraph& side, std::span<const std::string> separator) {
  if (separator.empty()) throw std::invalid_argument("separator is empty");
  auto whole = LabelledPartition::coarsest(make_ground({separator.begin(), separator.end()}), true);
  std::vector<std::string> terminals;
  for (const auto& t : side.terminals) {
    if (!contains(separator, t)) terminals.push_back(t);
  }
  terminals.push_back(block_vertex_name(whole, 0));
  return KGraph(merge(side.graph, whole), std::move(terminals));
}

bool k_connected(const Multigraph& graph, std::span<const std::string> terminals) {
  if (terminals.size() <= 1) return true;
  auto roots = component_roots(graph);
  const std::size_t first = roots[graph.require_vertex(terminals.front())];
  return std::all_of(terminals.begin(), terminals.end(),
                     [&](const std::string& t) { return roots[graph.require_vertex(t)] == first; });
}

KSplitting split_by_separator(const KGraph& whole, std::span<const std::string> separator_ids,
                              const SideAssignment& assignment) {
  const Multigraph& g = whole.graph;
  if (separator_ids.empty()) throw std::invalid_argument("separator is empty");
  auto separator = sorted_unique({separator_ids.begin(), separator_ids.end()}, "separator");
  std::vector<bool> in_x(g.vertex_count(), false);
  for (const auto& x : separator) in_x[g.require_vertex(x)] = true;

  // Components of G - X.
  detail::UnionFind uf(g.vertex_count());
  for (const auto& e : g.edges()) {
    auto u = g.require_vertex(e.u);
    auto v = g.require_vertex(e.v);
    if (!in_x[u] && !in_x[v]) uf.unite(u, v);
  }
  std::map<std::size_t, std::size_t> component_of_root;
  std::vector<std::size_t> component(g.vertex_count(), SIZE_MAX);
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    if (in_x[i]) continue;
    auto [it, fresh] = component_of_root.emplace(uf.find(i), component_of_root.size());
    component[i] = it->second;
  }
  const std::size_t count = component_of_root.size();

  std::vector<std::size_t> edge_total(count, 0);
  std::vector<bool> has_terminal(count, false);
  for (const auto& e : g.edges()) {
    auto u = g.require_vertex(e.u);
    auto v = g.require_vertex(e.v);
    if (!in_x[u]) ++edge_total[component[u]];
    else if (!in_x[v]) ++edge_total[component[v]];
  }
  bool terminal_in_x = false;
  for (const auto& t : whole.terminals) {
    auto i = g.require_vertex(t);
    if (in_x[i]) terminal_in_x = true;
    else has_terminal[component[i]] = true;
  }

  std::vector<int> side(count, 0);
  for (const auto& [vertex, s] : assignment) {
    if (s != 1 && s != 2) throw std::invalid_argument("side assignment must be 1 or 2");
    auto i = g.require_vertex(vertex);
    if (in_x[i]) throw std::invalid_argument("cannot assign separator vertex '" + vertex + "' to a side");
    int& slot = side[component[i]];
    if (slot != 0 && slot != s) throw std::invalid_argument("conflicting side assignment for the component of '" + vertex + "'");
    slot = s;
  }
  if (assignment.empty() && count < 2) {
    throw std::invalid_argument("separator does not disconnect the graph and no side assignment was given");
  }

  auto side_has_terminal = [&](int s) {
    if (terminal_in_x) return true;
    for (std::size_t c = 0; c < count; ++c) {
      if (side[c] == s && has_terminal[c]) return true;
    }
    return false;
  };
  for (int s : {1, 2}) {
    if (side_has_terminal(s)) continue;
    for (std::size_t c = 0; c < count; ++c) {
      if (side[c] == 0 && has_terminal[c]) {
        side[c] = s;
        break;
      }
    }
  }

  std::size_t load[3] = {0, 0, 0};
  for (std::size_t c = 0; c < count; ++c) {
    if (side[c] != 0) load[side[c]] += edge_total[c];
  }
  std::vector<std::size_t> pending;
  for (std::size_t c = 0; c < count; ++c) {
    if (side[c] == 0) pending.push_back(c);
  }
  std::stable_sort(pending.begin(), pending.end(), [&](auto a, auto b) { return edge_total[a] > edge_total[b]; });
  for (auto c : pending) {
    side[c] = load[2] < load[1] ? 2 : 1;
    load[side[c]] += edge_total[c];
  }

  std::vector<std::string> vertices[3];
  std::vector<Edge> edges[3];
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    if (in_x[i]) {
      vertices[1].push_back(g.vertices()[i]);
      vertices[2].push_back(g.vertices()[i]);
    } else {
      vertices[side[component[i]]].push_back(g.vertices()[i]);
    }
  }
  for (const auto& e : g.edges()) {
    auto u = g.require_vertex(e.u);
    auto v = g.require_vertex(e.v);
    int s = !in_x[u] ? side[component[u]] : (!in_x[v] ? side[component[v]] : 1);
    edges[s].push_back(e);
  }

  auto side_terminals = [&](const std::vector<std::string>& vs) {
    std::vector<std::string> out;
    for (const auto& t : whole.terminals) {
      if (std::find(vs.begin(), vs.end(), t) != vs.end()) out.push_back(t);
    }
    return out;
  };
  KSplitting split;
  split.separator = separator;
  split.side1 = KGraph(Multigraph(vertices[1], edges[1]), side_terminals(vertices[1]));
  split.side2 = KGraph(Multigraph(vertices[2], edges[2]), side_terminals(vertices[2]));
  if (split.side1.terminals.empty() || split.side2.terminals.empty()) {
    throw std::invalid_argument("separator cannot give both sides a terminal");
  }
  return split;
}

KGraph reassemble(const KSplitting& split) {
  std::set<std::string> vertices(split.side1.graph.vertices().begin(), split.side1.graph.vertices().end());
  vertices.insert(split.side2.graph.vertices().begin(), split.side2.graph.vertices().end());
  std::vector<Edge> edges = split.side1.graph.edges();
  edges.insert(edges.end(), split.side2.graph.edges().begin(), split.side2.graph.edges().end());
  std::set<std::string> terminals(split.side1.terminals.begin(), split.side1.terminals.end());
  terminals.insert(split.side2.terminals.begin(), split.side2.terminals.end());
  return KGraph(Multigraph({vertices.begin(), vertices.end()}, std::move(edges)), {terminals.begin(), terminals.end()});
}

void validate_splitting(const KGraph& whole, const KSplitting& split) {
  const auto& v1 = split.side1.graph.vertices();
  const auto& v2 = split.side2.graph.vertices();
  std::vector<std::string> common;
  std::set_intersection(v1.begin(), v1.end(), v2.begin(), v2.end(), std::back_inserter(common),
                        [](const auto& a, const auto& b) { return natural_less(a, b); });
  if (common != split.separator) throw std::invalid_argument("sides do not intersect exactly in the separator");
  for (int s : {1, 2}) {
    const KGraph& piece = split.side(s);
    std::vector<std::string> expected;
    for (const auto& t : whole.terminals) {
      if (piece.graph.has_vertex(t)) expected.push_back(t);
    }
    if (expected != piece.terminals) throw std::invalid_argument("side terminals are not the restriction of K");
    if (piece.terminals.empty()) throw std::invalid_argument("a side of the splitting has no terminal");
  }
  // Edge-disjointness is enforced by the duplicate-id check in Multigraph.
  KGraph rebuilt = reassemble(split);
  if (!(rebuilt.graph == whole.graph) || rebuilt.terminals != whole.terminals) {
    throw std::invalid_argument("sides do not reassemble into the original graph");
  }
}

}  // namespace ksplit
