#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ksplit/graph.hpp"
#include "ksplit/rational.hpp"
#include "ksplit/state_space.hpp"

namespace ksplit {

/// Edge id -> probability that the edge is operational.
using ProbabilityMap = std::map<std::string, Rational>;

/// One exact rational per state of a StateSpace (or per reduced state).
using ProbabilityVector = std::vector<Rational>;

struct EnumerationLimit {
  std::size_t max_edges = 24;
};

class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// K-graph with an operating probability in [0, 1] for each edge. The map may
/// carry extra entries, which lets both sides of a splitting share one map.
class KNetwork {
 public:
  KNetwork(KGraph kgraph, ProbabilityMap prob);

  const KGraph& kgraph() const { return kgraph_; }
  const Multigraph& graph() const { return kgraph_.graph; }
  const std::vector<std::string>& terminals() const { return kgraph_.terminals; }
  const ProbabilityMap& prob() const { return prob_; }
  const Rational& prob(const std::string& edge_id) const;

 private:
  KGraph kgraph_;
  ProbabilityMap prob_;
};

/// Probability that exactly the edges in `present` operate.
Rational subgraph_prob(const KNetwork& net, std::span<const std::string> present);

/// Sum over all 2^|E| edge states of [terminals connected] * Pr(state).
Rational reliability_bruteforce(const KNetwork& net, EnumerationLimit limit = {});

/// Vector of partition probabilities of one side in the order of `space`:
/// entry pi is the probability that the side's operating edges induce `pi`
/// on the separator while every side terminal reaches the separator.
ProbabilityVector partition_vector(const KNetwork& side, const StateSpace& space, EnumerationLimit limit = {});

/// Single entry of partition_vector.
Rational partition_probability(const KNetwork& side, std::span<const std::string> separator,
                               const LabelledPartition& pi, EnumerationLimit limit = {});

/// Reliabilities of the merged K-graphs of one side, in the order of `space`.
ProbabilityVector reliability_vector(const KNetwork& side, const StateSpace& space, EnumerationLimit limit = {});

/// Keeps the entries of the reduced states.
ProbabilityVector reduced_entries(const StateSpace& space, std::span<const Rational> full);

}  // namespace ksplit
