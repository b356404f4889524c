#include "ksplit/state_space.hpp"

#include <algorithm>
#include <stdexcept>

namespace ksplit {

namespace {

LabelledPartition make_base(const GroundPtr& ground, const std::vector<std::string>& trace) {
  return LabelledPartition::finest(ground, ground->mask_of(trace));
}

GroundPtr checked_ground(std::vector<std::string> separator) {
  if (separator.empty()) throw std::invalid_argument("state space of an empty separator");
  return make_ground(std::move(separator));
}

}  // namespace

StateSpace::StateSpace(std::vector<std::string> separator, std::vector<std::string> terminal_trace)
    : ground_(checked_ground(std::move(separator))), base_(make_base(ground_, terminal_trace)) {
  for (auto& tau : coarsenings(base_)) {
    if (tau.labelled_count() > 0) states_.push_back(std::move(tau));
  }
  std::vector<std::string> keys;
  std::vector<std::size_t> order(states_.size());
  keys.reserve(states_.size());
  for (std::size_t i = 0; i < states_.size(); ++i) {
    keys.push_back(states_[i].to_string());
    order[i] = i;
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = states_[a];
    const auto& y = states_[b];
    if (x.block_count() != y.block_count()) return x.block_count() > y.block_count();
    if (x.labelled_count() != y.labelled_count()) return x.labelled_count() < y.labelled_count();
    return keys[a] < keys[b];
  });
  std::vector<LabelledPartition> sorted;
  sorted.reserve(states_.size());
  for (auto i : order) sorted.push_back(std::move(states_[i]));
  states_ = std::move(sorted);

  reduced_position_.assign(states_.size(), std::nullopt);
  for (std::size_t i = 0; i < states_.size(); ++i) {
    index_.emplace(states_[i], i);
    if (lambda_value(states_[i]) != 0) {
      reduced_position_[i] = reduced_.size();
      reduced_.push_back(i);
    }
  }
}

std::optional<std::size_t> StateSpace::index_of(const LabelledPartition& pi) const {
  auto it = index_.find(pi);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> StateSpace::reduced_position(std::size_t index) const {
  return reduced_position_.at(index);
}

std::vector<std::string> StateSpace::labels() const {
  std::vector<std::string> out;
  out.reserve(states_.size());
  for (const auto& s : states_) out.push_back(s.to_string());
  return out;
}

std::vector<std::string> StateSpace::reduced_labels() const {
  std::vector<std::string> out;
  out.reserve(reduced_.size());
  for (auto i : reduced_) out.push_back(states_[i].to_string());
  return out;
}

StateSpace enumerate_states(std::vector<std::string> separator, std::vector<std::string> terminal_trace) {
  return StateSpace(std::move(separator), std::move(terminal_trace));
}

}  // namespace ksplit
