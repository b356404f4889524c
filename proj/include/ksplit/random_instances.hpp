#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ksplit/graph.hpp"
#include "ksplit/reliability.hpp"

namespace ksplit {

struct RandomSplitOptions {
  std::size_t min_separator = 1;
  std::size_t max_separator = 3;
  std::size_t max_side_vertices = 3;  ///< vertices off the separator, per side
  std::size_t max_side_edges = 8;
  bool terminals_in_separator = true;
};

/// A connected random multigraph built from two sides glued along a
/// separator, with terminals and exact edge probabilities.
struct RandomInstance {
  KNetwork network;
  std::vector<std::string> separator;
  SideAssignment assignment;

  KSplitting split() const;
};

/// Deterministic for a given engine state. Only raw engine output is used, so
/// a seed produces the same instance with every standard library.
RandomInstance random_instance(std::mt19937_64& rng, const RandomSplitOptions& options = {});

}  // namespace ksplit
