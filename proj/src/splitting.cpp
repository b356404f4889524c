#include "ksplit/splitting.hpp"

#include <algorithm>
#include <optional>

namespace ksplit {

namespace {

std::vector<Rational> from_ints(const std::vector<std::int64_t>& v) { return {v.begin(), v.end()}; }

std::optional<TransferBundle> own_bundle(const KSplitting& split, const TransferBundle* bundle) {
  if (bundle != nullptr) {
    if (bundle->space.ground()->ids() != split.separator ||
        bundle->space.base() != LabelledPartition::finest(bundle->space.ground(),
                                                          bundle->space.ground()->mask_of(split.separator_terminals()))) {
      throw std::invalid_argument("transfer bundle does not belong to this separator");
    }
    return std::nullopt;
  }
  return build_bundle(separator_space(split));
}

std::vector<std::string> edge_ids(const Multigraph& g, std::uint64_t mask) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if ((mask >> i) & 1U) out.push_back(g.edges()[i].id);
  }
  return out;
}

std::string describe(const std::string& what, int side) { return what + " (side " + std::to_string(side) + ")"; }

}  // namespace

StateSpace separator_space(const KSplitting& split) { return StateSpace(split.separator, split.separator_terminals()); }

KNetwork side_network(const KSplitting& split, int side, const ProbabilityMap& prob) {
  return KNetwork(split.side(side), prob);
}

Rational reliability_via_p(const KSplitting& split, const ProbabilityMap& prob, EnumerationLimit limit,
                           const TransferBundle* bundle) {
  auto owned = own_bundle(split, bundle);
  const TransferBundle& b = owned ? *owned : *bundle;
  auto p1 = partition_vector(side_network(split, 1, prob), b.space, limit);
  auto p2 = partition_vector(side_network(split, 2, prob), b.space, limit);
  return bilinear<std::int64_t>(p1, b.transfer, p2);
}

Rational contract_reduced(const TransferBundle& bundle, std::span<const Rational> r0_first,
                          std::span<const Rational> r0_second) {
  return bilinear<Rational>(r0_first, bundle.reduced_transfer_inverse, r0_second);
}

Rational reliability_via_r(const KSplitting& split, const ProbabilityMap& prob, EnumerationLimit limit,
                           const TransferBundle* bundle) {
  auto owned = own_bundle(split, bundle);
  const TransferBundle& b = owned ? *owned : *bundle;
  auto r1 = reduced_entries(b.space, reliability_vector(side_network(split, 1, prob), b.space, limit));
  auto r2 = reduced_entries(b.space, reliability_vector(side_network(split, 2, prob), b.space, limit));
  return contract_reduced(b, r1, r2);
}

LemmaReport check_reduced_lemmas(const KSplitting& split, const ProbabilityMap& prob, EnumerationLimit limit) {
  const TransferBundle b = build_bundle(separator_space(split));
  const IntMatrix zeta_inverse = unit_upper_inverse(b.zeta);
  const auto reduced_lambda = from_ints(b.reduced_lambda);

  LemmaReport report;
  std::vector<Rational> zp[3];
  for (int s : {1, 2}) {
    KNetwork side = side_network(split, s, prob);
    auto p = partition_vector(side, b.space, limit);
    auto r = reliability_vector(side, b.space, limit);
    auto r0 = reduced_entries(b.space, r);

    zp[s] = reduced_entries(b.space, multiply_transposed(b.zeta, p));

    auto moebius_r0 = multiply(b.reduced_zeta_inverse, r0);
    std::vector<Rational> rhs(moebius_r0.size());
    for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] = moebius_r0[i] / reduced_lambda[i];
    if (zp[s] != rhs) report.failures.push_back(describe("[Z^T p]_0 != Lambda0^-1 Z0^-1 r0", s));

    auto bracket = reduced_entries(b.space, multiply(zeta_inverse, r));
    if (bracket != moebius_r0) report.failures.push_back(describe("[Z^-1 r]_0 != Z0^-1 r0", s));
  }

  report.reduced_p_value = 0;
  for (std::size_t i = 0; i < zp[1].size(); ++i) report.reduced_p_value += zp[1][i] * reduced_lambda[i] * zp[2][i];

  KNetwork whole(reassemble(split), prob);
  if (whole.graph().edge_count() <= limit.max_edges) {
    report.reliability = reliability_bruteforce(whole, limit);
  } else {
    report.reliability = reliability_via_p(split, prob, limit, &b);
  }
  if (report.reliability != report.reduced_p_value) {
    report.failures.push_back("R(G,K) != [Z^T p1]_0^T Lambda0 [Z^T p2]_0");
  }
  return report;
}

IndicatorReport check_indicator_identity(const KSplitting& split, std::size_t max_edges) {
  const KGraph whole = reassemble(split);
  const auto& g1 = split.side1.graph;
  const auto& g2 = split.side2.graph;
  if (g1.edge_count() + g2.edge_count() > max_edges) {
    throw LimitExceeded("indicator identity check limited to " + std::to_string(max_edges) + " edges");
  }
  const StateSpace space = separator_space(split);
  const auto states = space.states();

  struct SideState {
    bool x_connected;
    std::vector<int> d;  // D(H, sigma) for every state sigma
  };
  auto side_states = [&](const KGraph& side) {
    std::vector<SideState> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << side.graph.edge_count()); ++mask) {
      KGraph h(side.graph.spanning_subgraph(edge_ids(side.graph, mask)), side.terminals);
      KGraph hx = x_merged_kgraph(h, split.separator);
      LabelledPartition rho = boundary_partition(h.graph, h.terminals, split.separator);
      SideState st{k_connected(hx.graph, hx.terminals), std::vector<int>(states.size(), 0)};
      for (std::size_t i = 0; i < states.size(); ++i) st.d[i] = rho == states[i] ? 1 : 0;
      out.push_back(std::move(st));
    }
    return out;
  };
  const auto first = side_states(split.side1);
  const auto second = side_states(split.side2);

  IndicatorReport report;
  for (std::uint64_t m1 = 0; m1 < first.size(); ++m1) {
    for (std::uint64_t m2 = 0; m2 < second.size(); ++m2) {
      auto ids = edge_ids(g1, m1);
      auto more = edge_ids(g2, m2);
      ids.insert(ids.end(), more.begin(), more.end());
      const bool lhs = k_connected(whole.graph.spanning_subgraph(ids), whole.terminals);

      int sum = 0;
      for (std::size_t a = 0; a < states.size(); ++a) {
        if (first[m1].d[a] == 0) continue;
        for (std::size_t c = 0; c < states.size(); ++c) {
          if (second[m2].d[c] != 0) sum += m_indicator(join(states[a], states[c]));
        }
      }
      const int rhs = (first[m1].x_connected && second[m2].x_connected) ? sum : 0;
      ++report.checked;
      if (rhs != (lhs ? 1 : 0)) ++report.mismatches;
    }
  }
  return report;
}

}  // namespace ksplit
