#pragma once

#include "ksplit/rational.hpp"

namespace ksplit {

BigInt binomial(unsigned n, unsigned k);
/// Number of set partitions of an n-set.
BigInt bell(unsigned n);
/// Number of set partitions of an n-set into k blocks.
BigInt stirling2(unsigned n, unsigned k);

/// Size of the state space of an n-element separator holding k terminals.
BigInt count_states(unsigned n, unsigned k);
/// Size of the reduced (nonzero lambda) state space.
BigInt count_reduced_states(unsigned n, unsigned k);

}  // namespace ksplit
