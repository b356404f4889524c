#include "ksplit/transfer.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "detail.hpp"

namespace ksplit {

namespace {

IntMatrix diagonal(const std::vector<std::int64_t>& d) {
  IntMatrix out(d.size(), d.size(), 0);
  for (std::size_t i = 0; i < d.size(); ++i) out(i, i) = d[i];
  return out;
}

// M0^-1 = sum_k (row k of Z0^-1)^T (row k of Z0^-1) / lambda_k, accumulated
// over a common denominator so the inner loop stays in 64-bit integers.
RationalMatrix reduced_inverse(const IntMatrix& zinv, const std::vector<std::int64_t>& lambda) {
  const std::size_t n = zinv.rows();
  std::int64_t common = 1;
  for (auto l : lambda) common = std::lcm(common, l < 0 ? -l : l);

  IntMatrix numer(n, n, 0);
  std::vector<std::pair<std::size_t, std::int64_t>> support;
  for (std::size_t k = 0; k < n; ++k) {
    support.clear();
    for (std::size_t i = k; i < n; ++i) {
      if (zinv(k, i) != 0) support.emplace_back(i, zinv(k, i));
    }
    const std::int64_t w = common / lambda[k];
    for (auto [i, a] : support) {
      const std::int64_t aw = detail::checked_mul(a, w);
      for (auto [j, b] : support) numer(i, j) = detail::checked_add(numer(i, j), detail::checked_mul(aw, b));
    }
  }
  RationalMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational q(numer(i, j), common);
      q.canonicalize();
      out(i, j) = std::move(q);
    }
  }
  return out;
}

}  // namespace

IntMatrix TransferBundle::lambda_matrix() const { return diagonal(lambda); }
IntMatrix TransferBundle::reduced_lambda_matrix() const { return diagonal(reduced_lambda); }

IntMatrix unit_upper_inverse(const IntMatrix& z) {
  const std::size_t n = z.rows();
  if (z.cols() != n) throw std::invalid_argument("unit_upper_inverse: matrix is not square");
  std::vector<std::vector<std::size_t>> above(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (z(i, i) != 1) throw std::invalid_argument("unit_upper_inverse: diagonal entry is not 1");
    for (std::size_t j = 0; j < n; ++j) {
      if (j < i && z(i, j) != 0) throw std::invalid_argument("unit_upper_inverse: matrix is not upper triangular");
      if (j > i && z(i, j) != 0) above[i].push_back(j);
    }
  }
  IntMatrix inv(n, n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    inv(j, j) = 1;
    for (std::size_t i = j; i-- > 0;) {
      std::int64_t sum = 0;
      for (auto k : above[i]) {
        if (k > j) break;
        if (inv(k, j) != 0) sum = detail::checked_add(sum, detail::checked_mul(z(i, k), inv(k, j)));
      }
      inv(i, j) = -sum;
    }
  }
  return inv;
}

TransferBundle build_bundle(StateSpace space) {
  const std::size_t n = space.size();
  if (n == 0) throw std::invalid_argument("empty state space");
  TransferBundle b{std::move(space), {}, {}, {}, {}, {}, {}, {}, {}};
  const auto states = b.space.states();

  b.zeta = IntMatrix(n, n, 0);
  b.transfer = IntMatrix(n, n, 0);
  b.lambda.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    b.lambda[i] = lambda_value(states[i]);
    for (std::size_t j = 0; j < n; ++j) {
      b.zeta(i, j) = refines(states[i], states[j]) ? 1 : 0;
      b.transfer(i, j) = j < i ? b.transfer(j, i) : m_indicator(join(states[i], states[j]));
    }
  }

  // Internal guard: m(state) = sum over states above it of lambda. Together
  // with join-closure of the state space this is exactly M = Z Lambda Z^T.
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t sum = 0;
    for (std::size_t k = i; k < n; ++k) {
      if (b.zeta(i, k) != 0) sum = detail::checked_add(sum, b.lambda[k]);
    }
    if (sum != m_indicator(states[i])) {
      throw std::logic_error("transfer factorization fails at state " + states[i].to_string());
    }
  }

  const auto keep = b.space.reduced();
  b.reduced_zeta = b.zeta.submatrix(keep);
  b.reduced_transfer = b.transfer.submatrix(keep);
  for (auto i : keep) b.reduced_lambda.push_back(b.lambda[i]);
  b.reduced_zeta_inverse = unit_upper_inverse(b.reduced_zeta);
  b.reduced_transfer_inverse = reduced_inverse(b.reduced_zeta_inverse, b.reduced_lambda);
  return b;
}

bool is_invertible_full(const StateSpace& space) { return space.size() == space.reduced_size(); }

std::shared_ptr<const TransferBundle> BundleCache::get(const std::vector<std::string>& separator,
                                                       const std::vector<std::string>& terminal_trace) {
  std::vector<std::string> x = separator;
  std::vector<std::string> k = terminal_trace;
  std::sort(x.begin(), x.end(), [](const auto& a, const auto& b) { return natural_less(a, b); });
  std::sort(k.begin(), k.end(), [](const auto& a, const auto& b) { return natural_less(a, b); });
  auto key = std::make_pair(x, k);
  {
    std::lock_guard lock(mutex_);
    if (auto it = bundles_.find(key); it != bundles_.end()) return it->second;
  }
  auto bundle = std::make_shared<const TransferBundle>(build_bundle(StateSpace(x, k)));
  std::lock_guard lock(mutex_);
  return bundles_.emplace(std::move(key), std::move(bundle)).first->second;
}

std::size_t BundleCache::size() const {
  std::lock_guard lock(mutex_);
  return bundles_.size();
}

}  // namespace ksplit
