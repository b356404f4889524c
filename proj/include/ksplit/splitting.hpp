#pragma once

#include <string>
#include <vector>

#include "ksplit/graph.hpp"
#include "ksplit/reliability.hpp"
#include "ksplit/transfer.hpp"

namespace ksplit {

/// State space of the separator of `split` (terminal trace K ∩ X).
StateSpace separator_space(const KSplitting& split);

KNetwork side_network(const KSplitting& split, int side, const ProbabilityMap& prob);

/// R(G,K) = p(G1)^T M p(G2).
Rational reliability_via_p(const KSplitting& split, const ProbabilityMap& prob, EnumerationLimit limit = {},
                           const TransferBundle* bundle = nullptr);

/// R(G,K) = r0(G1)^T M0^-1 r0(G2). Entry (sigma, pi) of M0^-1 is the
/// coefficient of R(G1_sigma) R(G2_pi) in the expansion.
Rational reliability_via_r(const KSplitting& split, const ProbabilityMap& prob, EnumerationLimit limit = {},
                           const TransferBundle* bundle = nullptr);

/// The reduced contraction r0_1^T M0^-1 r0_2 on precomputed vectors.
Rational contract_reduced(const TransferBundle& bundle, std::span<const Rational> r0_first,
                          std::span<const Rational> r0_second);

/// Both sides of the reduced lemmas, exactly:
///  - R(G,K) = [Z^T p(G1)]_0^T Lambda0 [Z^T p(G2)]_0
///  - [Z^T p(Gi)]_0 = Lambda0^-1 Z0^-1 r0(Gi)
///  - [Z^-1 r(Gi)]_0 = Z0^-1 r0(Gi)
struct LemmaReport {
  Rational reliability;      ///< brute force, or p(G1)^T M p(G2) beyond the limit
  Rational reduced_p_value;  ///< [Z^T p1]_0^T Lambda0 [Z^T p2]_0
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

LemmaReport check_reduced_lemmas(const KSplitting& split, const ProbabilityMap& prob, EnumerationLimit limit = {});

/// Checks, for every pair of edge states of the two sides, that the whole
/// subgraph is K-connected exactly when both X-merged sides are and the
/// double sum of D(H1,s1) m(s1 v s2) D(H2,s2) over states equals one.
struct IndicatorReport {
  std::size_t checked = 0;
  std::size_t mismatches = 0;
};

IndicatorReport check_indicator_identity(const KSplitting& split, std::size_t max_edges = 12);

}  // namespace ksplit
