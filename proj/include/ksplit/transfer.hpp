#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "ksplit/matrix.hpp"
#include "ksplit/state_space.hpp"

namespace ksplit {

/// Transfer matrix of a state space together with its factorization
/// M = Z Lambda Z^T and the inverse of the reduced matrix M0.
struct TransferBundle {
  StateSpace space;

  IntMatrix zeta;                 ///< z(i,j) = [state i <= state j]
  std::vector<std::int64_t> lambda;
  IntMatrix transfer;             ///< m(state i v state j)

  IntMatrix reduced_zeta;
  std::vector<std::int64_t> reduced_lambda;
  IntMatrix reduced_transfer;
  IntMatrix reduced_zeta_inverse;  ///< Möbius function of the reduced subposet
  RationalMatrix reduced_transfer_inverse;

  IntMatrix lambda_matrix() const;
  IntMatrix reduced_lambda_matrix() const;
};

/// Builds every matrix of the bundle. M0^-1 is assembled as
/// Z0^-T Lambda0^-1 Z0^-1. Throws std::logic_error if the factorization
/// does not reproduce M.
TransferBundle build_bundle(StateSpace space);

/// Exact inverse of a unit upper-triangular integer matrix (back substitution).
IntMatrix unit_upper_inverse(const IntMatrix& z);

/// True iff every state is reduced, i.e. M itself is invertible.
bool is_invertible_full(const StateSpace& space);

/// Thread-safe memo of bundles keyed by separator and terminal trace.
class BundleCache {
 public:
  std::shared_ptr<const TransferBundle> get(const std::vector<std::string>& separator,
                                            const std::vector<std::string>& terminal_trace);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::map<std::pair<std::vector<std::string>, std::vector<std::string>>, std::shared_ptr<const TransferBundle>> bundles_;
};

}  // namespace ksplit
