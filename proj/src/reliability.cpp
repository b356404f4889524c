#include "ksplit/reliability.hpp"

#include <algorithm>
#include <utility>

#include "detail.hpp"

namespace ksplit {

namespace {

// Edge states are enumerated depth first over the edge list with running
// products of integer weights: an edge with p = a/d contributes a when it
// operates and d - a when it fails, and every state shares the denominator
// prod d. Branches with weight zero are skipped.
class EdgeStates {
 public:
  EdgeStates(const KNetwork& net, EnumerationLimit limit) : graph_(net.graph()) {
    const auto& edges = graph_.edges();
    if (edges.size() > limit.max_edges || edges.size() >= 64) {
      throw LimitExceeded("network has " + std::to_string(edges.size()) + " edges, enumeration limit is " +
                          std::to_string(limit.max_edges));
    }
    denominator_ = 1;
    for (const auto& e : edges) {
      const Rational& p = net.prob(e.id);
      ends_.emplace_back(graph_.require_vertex(e.u), graph_.require_vertex(e.v));
      up_.push_back(p.get_num());
      down_.push_back(p.get_den() - p.get_num());
      denominator_ *= p.get_den();
    }
    partial_.resize(edges.size() + 1);
  }

  const BigInt& denominator() const { return denominator_; }
  std::size_t vertex_count() const { return graph_.vertex_count(); }
  const std::vector<std::pair<std::size_t, std::size_t>>& ends() const { return ends_; }

  /// visit(mask, weight) for every state of nonzero weight.
  template <typename Visit>
  void for_each(Visit&& visit) {
    partial_[0] = 1;
    descend(0, 0, visit);
  }

  /// Union-find over the operating edges of `mask`.
  void connect(std::uint64_t mask, detail::UnionFind& uf) const {
    uf.reset();
    for (std::size_t i = 0; i < ends_.size(); ++i) {
      if ((mask >> i) & 1U) uf.unite(ends_[i].first, ends_[i].second);
    }
  }

 private:
  template <typename Visit>
  void descend(std::size_t depth, std::uint64_t mask, Visit& visit) {
    if (depth == ends_.size()) {
      visit(mask, partial_[depth]);
      return;
    }
    if (down_[depth] != 0) {
      partial_[depth + 1] = partial_[depth] * down_[depth];
      descend(depth + 1, mask, visit);
    }
    if (up_[depth] != 0) {
      partial_[depth + 1] = partial_[depth] * up_[depth];
      descend(depth + 1, mask | (std::uint64_t{1} << depth), visit);
    }
  }

  const Multigraph& graph_;
  std::vector<std::pair<std::size_t, std::size_t>> ends_;
  std::vector<BigInt> up_;
  std::vector<BigInt> down_;
  std::vector<BigInt> partial_;
  BigInt denominator_;
};

std::vector<std::size_t> vertex_indices(const Multigraph& g, std::span<const std::string> ids) {
  std::vector<std::size_t> out;
  out.reserve(ids.size());
  for (const auto& id : ids) out.push_back(g.require_vertex(id));
  return out;
}

}  // namespace

KNetwork::KNetwork(KGraph kgraph, ProbabilityMap prob) : kgraph_(std::move(kgraph)), prob_(std::move(prob)) {
  for (const auto& e : kgraph_.graph.edges()) {
    auto it = prob_.find(e.id);
    if (it == prob_.end()) throw std::invalid_argument("edge '" + e.id + "' has no probability");
    if (it->second < 0 || it->second > 1) {
      throw std::invalid_argument("probability of edge '" + e.id + "' is outside [0,1]");
    }
  }
}

const Rational& KNetwork::prob(const std::string& edge_id) const {
  auto it = prob_.find(edge_id);
  if (it == prob_.end()) throw std::invalid_argument("edge '" + edge_id + "' has no probability");
  return it->second;
}

Rational subgraph_prob(const KNetwork& net, std::span<const std::string> present) {
  std::vector<bool> on(net.graph().edge_count(), false);
  for (const auto& id : present) {
    auto idx = net.graph().edge_index(id);
    if (!idx) throw std::invalid_argument("unknown edge '" + id + "'");
    on[*idx] = true;
  }
  Rational out = 1;
  for (std::size_t i = 0; i < on.size(); ++i) {
    const Rational& p = net.prob(net.graph().edges()[i].id);
    out *= on[i] ? p : Rational(1 - p);
  }
  return out;
}

Rational reliability_bruteforce(const KNetwork& net, EnumerationLimit limit) {
  EdgeStates states(net, limit);
  const auto terminals = vertex_indices(net.graph(), net.terminals());
  if (terminals.size() <= 1) return 1;

  detail::UnionFind uf(states.vertex_count());
  BigInt total = 0;
  states.for_each([&](std::uint64_t mask, const BigInt& weight) {
    states.connect(mask, uf);
    const auto root = uf.find(terminals.front());
    for (auto t : terminals) {
      if (uf.find(t) != root) return;
    }
    total += weight;
  });
  Rational out(total, states.denominator());
  out.canonicalize();
  return out;
}

ProbabilityVector partition_vector(const KNetwork& side, const StateSpace& space, EnumerationLimit limit) {
  const Multigraph& g = side.graph();
  const Ground& x = *space.ground();
  std::vector<std::size_t> x_vertex(x.size());
  std::vector<bool> in_x(g.vertex_count(), false);
  for (std::size_t i = 0; i < x.size(); ++i) {
    x_vertex[i] = g.require_vertex(x[i]);
    in_x[x_vertex[i]] = true;
  }
  const auto terminals = vertex_indices(g, side.terminals());
  if (terminals.empty()) throw std::invalid_argument("side has no terminal");

  EdgeStates states(side, limit);
  detail::UnionFind uf(states.vertex_count());
  std::vector<BigInt> sums(space.size(), 0);
  std::vector<bool> labelled_root(g.vertex_count());
  std::vector<bool> reaches_x(g.vertex_count());
  std::vector<Block> blocks;

  states.for_each([&](std::uint64_t mask, const BigInt& weight) {
    states.connect(mask, uf);
    std::fill(reaches_x.begin(), reaches_x.end(), false);
    for (auto v : x_vertex) reaches_x[uf.find(v)] = true;
    std::fill(labelled_root.begin(), labelled_root.end(), false);
    for (auto t : terminals) {
      auto root = uf.find(t);
      if (!reaches_x[root]) return;  // the X-merged side is not K-connected
      labelled_root[root] = true;
    }
    blocks.clear();
    std::vector<std::size_t> block_root;
    for (std::size_t i = 0; i < x.size(); ++i) {
      auto root = uf.find(x_vertex[i]);
      auto it = std::find(block_root.begin(), block_root.end(), root);
      if (it == block_root.end()) {
        block_root.push_back(root);
        blocks.push_back({ElementMask{1} << i, labelled_root[root]});
      } else {
        blocks[static_cast<std::size_t>(it - block_root.begin())].members |= ElementMask{1} << i;
      }
    }
    auto idx = space.index_of(LabelledPartition(space.ground(), blocks));
    if (!idx) throw std::logic_error("boundary partition outside the state space");
    sums[*idx] += weight;
  });

  ProbabilityVector out;
  out.reserve(sums.size());
  for (auto& s : sums) {
    Rational q(s, states.denominator());
    q.canonicalize();
    out.push_back(std::move(q));
  }
  return out;
}

Rational partition_probability(const KNetwork& side, std::span<const std::string> separator,
                               const LabelledPartition& pi, EnumerationLimit limit) {
  std::vector<std::string> trace;
  for (const auto& x : separator) {
    if (std::find(side.terminals().begin(), side.terminals().end(), x) != side.terminals().end()) trace.push_back(x);
  }
  StateSpace space({separator.begin(), separator.end()}, trace);
  auto idx = space.index_of(pi);
  if (!idx) throw std::invalid_argument("partition " + pi.to_string() + " is not a state of the separator");
  return partition_vector(side, space, limit)[*idx];
}

ProbabilityVector reliability_vector(const KNetwork& side, const StateSpace& space, EnumerationLimit limit) {
  ProbabilityVector out;
  out.reserve(space.size());
  for (const auto& state : space.states()) {
    KNetwork merged(merged_kgraph(side.kgraph(), state), side.prob());
    out.push_back(reliability_bruteforce(merged, limit));
  }
  return out;
}

ProbabilityVector reduced_entries(const StateSpace& space, std::span<const Rational> full) {
  if (full.size() != space.size()) throw std::invalid_argument("vector length does not match the state space");
  ProbabilityVector out;
  out.reserve(space.reduced_size());
  for (auto i : space.reduced()) out.push_back(full[i]);
  return out;
}

}  // namespace ksplit
