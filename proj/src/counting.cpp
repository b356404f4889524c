#include "ksplit/counting.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace ksplit {

namespace {

void check_args(unsigned n, unsigned k) {
  if (k > n) throw std::invalid_argument("k=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
  if (n == 0) throw std::invalid_argument("state counts need a non-empty separator");
}

}  // namespace

BigInt binomial(unsigned n, unsigned k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt bell(unsigned n) {
  // Bell triangle.
  std::vector<BigInt> row{1};
  for (unsigned i = 0; i < n; ++i) {
    std::vector<BigInt> next{row.back()};
    for (const auto& v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

BigInt stirling2(unsigned n, unsigned k) {
  if (k > n) return 0;
  // S(i, j) = j S(i-1, j) + S(i-1, j-1)
  std::vector<BigInt> prev(k + 1, 0);
  prev[0] = 1;
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<BigInt> cur(k + 1, 0);
    for (unsigned j = 1; j <= std::min(i, k); ++j) cur[j] = BigInt(j) * prev[j] + prev[j - 1];
    prev = std::move(cur);
  }
  return prev[k];
}

BigInt count_states(unsigned n, unsigned k) {
  check_args(n, k);
  BigInt total = 0;
  // j of the n-k unlabelled singletons join the labelled side.
  for (unsigned j = (k == 0 ? 1U : 0U); j <= n - k; ++j) {
    total += binomial(n - k, j) * bell(k + j) * bell(n - k - j);
  }
  return total;
}

BigInt count_reduced_states(unsigned n, unsigned k) {
  check_args(n, k);
  BigInt total = 0;
  // j unlabelled singletons form the (possibly absent) unlabelled block.
  const unsigned top = (k == 0) ? n - 1 : n - k;
  for (unsigned j = 0; j <= top; ++j) total += binomial(n - k, j) * bell(n - j);
  return total;
}

}  // namespace ksplit
