#pragma once

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ksplit/labelled_partition.hpp"

namespace ksplit {

/// States of a separator: every labelled partition above the base partition
/// (separator elements labelled iff they are terminals) with at least one
/// labelled block, in a fixed linear extension of the order.
///
/// Order key: more blocks first, then fewer labelled blocks, then the
/// canonical string. sigma < pi forces either fewer blocks in pi or the same
/// blocks with more labels, so the key never puts pi before sigma.
class StateSpace {
 public:
  StateSpace(std::vector<std::string> separator, std::vector<std::string> terminal_trace);

  const GroundPtr& ground() const { return ground_; }
  const LabelledPartition& base() const { return base_; }
  std::size_t terminal_count() const { return base_.labelled_count(); }

  std::span<const LabelledPartition> states() const { return states_; }
  const LabelledPartition& state(std::size_t i) const { return states_[i]; }
  std::size_t size() const { return states_.size(); }

  /// Indices (into states()) of the states with nonzero lambda, ascending.
  std::span<const std::size_t> reduced() const { return reduced_; }
  std::size_t reduced_size() const { return reduced_.size(); }

  std::optional<std::size_t> index_of(const LabelledPartition& pi) const;
  /// Position of state `index` within reduced(), if it is reduced.
  std::optional<std::size_t> reduced_position(std::size_t index) const;

  std::vector<std::string> labels() const;
  std::vector<std::string> reduced_labels() const;

 private:
  GroundPtr ground_;
  LabelledPartition base_;
  std::vector<LabelledPartition> states_;
  std::vector<std::size_t> reduced_;
  std::vector<std::optional<std::size_t>> reduced_position_;
  std::unordered_map<LabelledPartition, std::size_t> index_;
};

/// Builds the state space of separator X with terminals `terminal_trace` (a
/// subset of X).
StateSpace enumerate_states(std::vector<std::string> separator, std::vector<std::string> terminal_trace);

}  // namespace ksplit
