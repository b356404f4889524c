#include <algorithm>
#include <stdexcept>

#include "detail.hpp"
#include "ksplit/labelled_partition.hpp"

namespace ksplit {

std::int64_t moebius(const LabelledPartition& sigma, const LabelledPartition& pi) {
  if (!refines(sigma, pi)) throw std::invalid_argument("moebius: " + sigma.to_string() + " is not below " + pi.to_string());
  std::int64_t value = 1;
  for (const auto& host : pi.blocks()) {
    // The interval factors over the blocks of pi; inside one block only the
    // number of sigma-blocks and how many of them carry the label matter.
    std::size_t atoms = 0;
    std::size_t labelled = 0;
    for (const auto& b : sigma.blocks()) {
      if ((b.members & host.members) == 0) continue;
      ++atoms;
      if (b.labelled) ++labelled;
    }
    std::int64_t factor = 0;
    if (!host.labelled || labelled == atoms) {
      factor = detail::signed_factorial(atoms);
    } else if (labelled == 0) {
      factor = -detail::signed_factorial(atoms);
    } else {
      return 0;
    }
    value = detail::checked_mul(value, factor);
  }
  return value;
}

std::int64_t moebius_bruteforce(const LabelledPartition& sigma, const LabelledPartition& pi) {
  if (!refines(sigma, pi)) {
    throw std::invalid_argument("moebius_bruteforce: " + sigma.to_string() + " is not below " + pi.to_string());
  }
  std::vector<LabelledPartition> interval;
  for (auto& tau : coarsenings(sigma)) {
    if (refines(tau, pi)) interval.push_back(std::move(tau));
  }
  std::stable_sort(interval.begin(), interval.end(), [](const auto& a, const auto& b) {
    if (a.block_count() != b.block_count()) return a.block_count() > b.block_count();
    return a.labelled_count() < b.labelled_count();
  });

  std::vector<std::int64_t> mu(interval.size(), 0);
  for (std::size_t t = 0; t < interval.size(); ++t) {
    if (interval[t] == sigma) {
      mu[t] = 1;
      continue;
    }
    std::int64_t sum = 0;
    for (std::size_t r = 0; r < t; ++r) {
      if (mu[r] != 0 && refines(interval[r], interval[t])) sum = detail::checked_add(sum, mu[r]);
    }
    mu[t] = -sum;
  }
  for (std::size_t t = 0; t < interval.size(); ++t) {
    if (interval[t] == pi) return mu[t];
  }
  throw std::logic_error("moebius_bruteforce: upper end missing from its own interval");
}

std::int64_t lambda_value(const LabelledPartition& pi) {
  const std::size_t labelled = pi.labelled_count();
  if (labelled == 0) throw std::invalid_argument("lambda of a partition without labelled blocks");
  if (pi.unlabelled_count() >= 2) return 0;
  return detail::signed_factorial(labelled);
}

}  // namespace ksplit
