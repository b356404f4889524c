#include "ksplit/random_instances.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace ksplit {

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

const std::array<const char*, 13> kProbabilities = {"1/2", "1/3", "2/3", "1/4", "3/4", "2/5", "9/10",
                                                     "1/7", "5/6", "3/8", "7/10", "1",   "0"};

}  // namespace

KSplitting RandomInstance::split() const { return split_by_separator(network.kgraph(), separator, assignment); }

RandomInstance random_instance(std::mt19937_64& rng, const RandomSplitOptions& options) {
  if (options.min_separator == 0 || options.min_separator > options.max_separator || options.max_side_vertices == 0) {
    throw std::invalid_argument("invalid random instance options");
  }
  const std::size_t sep = uniform(rng, options.min_separator, options.max_separator);
  std::vector<std::string> separator;
  for (std::size_t i = 1; i <= sep; ++i) separator.push_back("x" + std::to_string(i));

  std::vector<std::string> vertices = separator;
  std::vector<Edge> edges;
  std::vector<std::string> private_vertices[3];
  SideAssignment assignment;
  std::size_t next_edge = 1;
  auto add_edge = [&](const std::string& u, const std::string& v) {
    edges.push_back({"e" + std::to_string(next_edge++), u, v});
  };

  for (int side : {1, 2}) {
    const char prefix = side == 1 ? 'a' : 'b';
    const std::size_t tree_edges_cap = options.max_side_edges >= sep ? options.max_side_edges - sep + 1 : 1;
    const std::size_t count = uniform(rng, 1, std::max<std::size_t>(1, std::min(options.max_side_vertices, tree_edges_cap)));
    auto& own = private_vertices[side];
    for (std::size_t i = 1; i <= count; ++i) {
      own.push_back(std::string(1, prefix) + std::to_string(i));
      vertices.push_back(own.back());
      assignment.emplace(own.back(), side);
    }
    // Spanning tree: private vertices among themselves, then every separator
    // vertex hangs off a private vertex. No separator-separator edges here.
    std::size_t used = 0;
    for (std::size_t i = 1; i < own.size(); ++i, ++used) add_edge(own[i], own[uniform(rng, 0, i - 1)]);
    for (const auto& x : separator) {
      add_edge(x, own[uniform(rng, 0, own.size() - 1)]);
      ++used;
    }
    if (used > options.max_side_edges) throw std::invalid_argument("max_side_edges too small for a spanning tree");

    std::vector<std::string> pool = own;
    pool.insert(pool.end(), separator.begin(), separator.end());
    const std::size_t extra = uniform(rng, 0, options.max_side_edges - used);
    for (std::size_t i = 0; i < extra; ++i) {
      const auto& u = own[uniform(rng, 0, own.size() - 1)];
      std::string v = pool[uniform(rng, 0, pool.size() - 1)];
      // Side 1 may also carry separator-separator edges.
      if (side == 1 && sep >= 2 && rng() % 4 == 0) {
        std::size_t i1 = uniform(rng, 0, sep - 1);
        std::size_t i2 = uniform(rng, 0, sep - 2);
        if (i2 >= i1) ++i2;
        add_edge(separator[i1], separator[i2]);
        continue;
      }
      if (u == v) continue;
      add_edge(u, v);
    }
  }

  std::vector<std::string> terminals;
  for (const auto& v : vertices) {
    const bool in_x = std::find(separator.begin(), separator.end(), v) != separator.end();
    if (in_x && !options.terminals_in_separator) continue;
    if (rng() % 3 == 0) terminals.push_back(v);
  }
  auto has_terminal_on = [&](int side) {
    for (const auto& t : terminals) {
      if (std::find(separator.begin(), separator.end(), t) != separator.end()) return true;
      if (std::find(private_vertices[side].begin(), private_vertices[side].end(), t) != private_vertices[side].end()) return true;
    }
    return false;
  };
  for (int side : {1, 2}) {
    if (!has_terminal_on(side)) {
      const auto& own = private_vertices[side];
      terminals.push_back(own[uniform(rng, 0, own.size() - 1)]);
    }
  }
  if (terminals.size() < 2) {
    for (const auto& v : private_vertices[1 + rng() % 2]) {
      if (std::find(terminals.begin(), terminals.end(), v) == terminals.end()) {
        terminals.push_back(v);
        break;
      }
    }
  }
  if (terminals.size() < 2) {
    for (const auto& v : vertices) {
      if (std::find(terminals.begin(), terminals.end(), v) == terminals.end()) {
        terminals.push_back(v);
        break;
      }
    }
  }

  ProbabilityMap prob;
  for (const auto& e : edges) prob.emplace(e.id, parse_rational(kProbabilities[rng() % kProbabilities.size()]));

  return RandomInstance{KNetwork(KGraph(Multigraph(vertices, edges), terminals), std::move(prob)), separator,
                        std::move(assignment)};
}

}  // namespace ksplit
