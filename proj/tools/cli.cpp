#include "cli.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include "ksplit/counting.hpp"
#include "ksplit/network_file.hpp"
#include "ksplit/random_instances.hpp"
#include "ksplit/splitting.hpp"

namespace ksplit::cli {

namespace {

struct Options {
  std::string file;
  std::vector<std::string> separator;
  std::string method = "r";
  bool verify = false;
  int digits = 6;
  std::uint64_t seed = 1;
  std::size_t random = 0;
  std::size_t limit = 24;
  unsigned n = 0;
  unsigned k = 0;
  std::vector<std::string> ground;
  std::vector<std::string> trace;
  std::size_t max_size = 6;
};

std::string exact_and_decimal(const Rational& q, int digits) {
  return to_string(q) + " (" + to_decimal(q, digits) + ")";
}

std::string joined(const std::vector<std::string>& ids) {
  std::string out;
  for (const auto& id : ids) out += (out.empty() ? "" : ",") + id;
  return out;
}

class Stopwatch {
 public:
  std::string elapsed() const {
    std::chrono::duration<double> d = std::chrono::steady_clock::now() - start_;
    std::ostringstream os;
    os << d.count() << " s";
    return os.str();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int cmd_compute(const Options& o, std::ostream& out) {
  Stopwatch clock;
  auto file = load_network_file(o.file);
  auto net = file.network();
  RunReport report;
  report.add("command", "compute " + o.file);
  report.add("edges", std::to_string(net.graph().edge_count()));
  report.add("terminals", joined(net.terminals()));
  report.add("reliability", exact_and_decimal(reliability_bruteforce(net, {o.limit}), o.digits));
  report.add("elapsed", clock.elapsed());
  report.print(out);
  return kExitOk;
}

// Shared by `split` and `verify`. Returns false on a mismatch.
bool split_file(const Options& o, bool verify, RunReport& report) {
  auto file = load_network_file(o.file);
  std::vector<std::string> separator = !o.separator.empty() ? o.separator : file.separator.value_or(std::vector<std::string>{});
  if (separator.empty()) throw std::invalid_argument("no separator given (use --separator or the file's \"separator\")");

  const KGraph whole = file.kgraph();
  const ProbabilityMap prob = file.probabilities();
  const KSplitting split = split_by_separator(whole, separator, file.side_assignment);
  const TransferBundle bundle = build_bundle(separator_space(split));
  const EnumerationLimit limit{o.limit};

  report.add("separator", joined(split.separator));
  report.add("side 1 edges", std::to_string(split.side1.graph.edge_count()));
  report.add("side 2 edges", std::to_string(split.side2.graph.edge_count()));
  report.add("states", std::to_string(bundle.space.size()));
  report.add("reduced", std::to_string(bundle.space.reduced_size()));

  Rational value = o.method == "p" ? reliability_via_p(split, prob, limit, &bundle)
                                   : reliability_via_r(split, prob, limit, &bundle);
  report.add("method", o.method);
  report.add("reliability", exact_and_decimal(value, o.digits));
  if (!verify) return true;

  Rational oracle = reliability_bruteforce(KNetwork(whole, prob), limit);
  report.add("oracle", exact_and_decimal(oracle, o.digits));
  const bool match = oracle == value;
  report.add("verdict", match ? "EXACT-MATCH" : "MISMATCH");
  return match;
}

int cmd_split(const Options& o, bool verify, std::ostream& out) {
  Stopwatch clock;
  RunReport report;
  report.add("command", std::string(verify ? "verify " : "split ") + o.file);
  bool ok = split_file(o, verify, report);
  report.add("elapsed", clock.elapsed());
  report.print(out);
  return ok ? kExitOk : kExitMismatch;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.file.empty() && o.random == 0) throw std::invalid_argument("verify needs a network file or --random N");
  Stopwatch clock;
  RunReport report;
  report.add("command", "verify" + (o.file.empty() ? "" : " " + o.file));
  bool ok = true;
  if (!o.file.empty()) ok = split_file(o, true, report);

  if (o.random > 0) {
    std::mt19937_64 rng(o.seed);
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < o.random; ++i) {
      auto inst = random_instance(rng);
      auto split = inst.split();
      const EnumerationLimit limit{o.limit};
      auto oracle = reliability_bruteforce(inst.network, limit);
      auto via_p = reliability_via_p(split, inst.network.prob(), limit);
      auto via_r = reliability_via_r(split, inst.network.prob(), limit);
      if (oracle != via_p || oracle != via_r) ++mismatches;
    }
    report.add("random seed", std::to_string(o.seed));
    report.add("random instances", std::to_string(o.random));
    report.add("random mismatches", std::to_string(mismatches));
    report.add("random verdict", mismatches == 0 ? "EXACT-MATCH" : "MISMATCH");
    ok = ok && mismatches == 0;
  }
  report.add("elapsed", clock.elapsed());
  report.print(out);
  return ok ? kExitOk : kExitMismatch;
}

int cmd_states(const Options& o, std::ostream& out) {
  Stopwatch clock;
  const BigInt all = count_states(o.n, o.k);
  const BigInt reduced = count_reduced_states(o.n, o.k);
  RunReport report;
  report.add("command", "states " + std::to_string(o.n) + " " + std::to_string(o.k));
  report.add("P", to_string(all));
  report.add("P0", to_string(reduced));
  report.add("reduction", exact_and_decimal(Rational(reduced, all), o.digits));
  report.add("elapsed", clock.elapsed());
  report.print(out);
  return kExitOk;
}

int cmd_lattice(const Options& o, std::ostream& out) {
  if (o.ground.size() > o.max_size) {
    throw std::invalid_argument("separator of size " + std::to_string(o.ground.size()) + " exceeds --max-size " +
                                std::to_string(o.max_size));
  }
  for (const auto& t : o.trace) {
    if (std::find(o.ground.begin(), o.ground.end(), t) == o.ground.end()) {
      throw std::invalid_argument("terminal '" + t + "' is not in the separator");
    }
  }
  Stopwatch clock;
  const TransferBundle b = build_bundle(StateSpace(o.ground, o.trace));
  RunReport report;
  report.add("command", "lattice " + joined(o.ground) + (o.trace.empty() ? "" : " --terminals " + joined(o.trace)));
  report.add("base", b.space.base().to_string());
  report.add("states", std::to_string(b.space.size()));
  report.add("reduced", std::to_string(b.space.reduced_size()));
  report.add("invertible", is_invertible_full(b.space) ? "yes" : "no");
  report.add("elapsed", clock.elapsed());
  report.print(out);

  out << "\n# states\nindex\tstate\tlambda\treduced\n";
  for (std::size_t i = 0; i < b.space.size(); ++i) {
    out << i << '\t' << b.space.state(i) << '\t' << b.lambda[i] << '\t' << (b.space.reduced_position(i) ? "yes" : "no")
        << '\n';
  }
  const auto labels = b.space.labels();
  const auto reduced_labels = b.space.reduced_labels();
  out << "\n# Z\n" << format_matrix<std::int64_t>("Z", labels, b.zeta);
  out << "\n# Lambda\n" << format_matrix<std::int64_t>("Lambda", labels, b.lambda_matrix());
  out << "\n# M\n" << format_matrix<std::int64_t>("M", labels, b.transfer);
  out << "\n# M0^-1\n" << format_matrix<Rational>("M0^-1", reduced_labels, b.reduced_transfer_inverse);
  return kExitOk;
}

}  // namespace

void RunReport::print(std::ostream& os) const {
  for (const auto& [key, value] : lines) os << key << ": " << value << '\n';
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact K-terminal network reliability by separator splitting"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--digits", o.digits, "Fractional digits of the decimal rendering")->check(CLI::Range(0, 1000));
    cmd->add_option("--limit", o.limit, "Maximum number of edges for state enumeration");
  };
  auto add_split_flags = [&](CLI::App* cmd) {
    cmd->add_option("--separator", o.separator, "Separator vertices, comma separated")->delimiter(',');
    cmd->add_option("--method", o.method, "Splitting formula: p (full transfer matrix) or r (reduced inverse)")
        ->check(CLI::IsMember({"p", "r"}));
  };

  auto* compute = app.add_subcommand("compute", "Reliability by enumerating all edge states");
  compute->add_option("file", o.file, "Network JSON file")->required();
  add_common(compute);

  auto* split = app.add_subcommand("split", "Reliability through a separator splitting");
  split->add_option("file", o.file, "Network JSON file")->required();
  split->add_flag("--verify", o.verify, "Also run the enumeration oracle and compare");
  add_split_flags(split);
  add_common(split);

  auto* verify = app.add_subcommand("verify", "Splitting cross-checked against the oracle (split --verify)");
  verify->add_option("file", o.file, "Network JSON file");
  verify->add_option("--random", o.random, "Also check N seeded random splittings");
  verify->add_option("--seed", o.seed, "Seed for --random");
  add_split_flags(verify);
  add_common(verify);

  auto* states = app.add_subcommand("states", "State counts P(n,k) and P0(n,k)");
  states->add_option("n", o.n, "Separator size")->required();
  states->add_option("k", o.k, "Terminals in the separator")->required();
  states->add_option("--digits", o.digits, "Fractional digits of the decimal rendering");

  auto* lattice = app.add_subcommand("lattice", "Dump states, lambda and the transfer matrices");
  lattice->add_option("separator", o.ground, "Separator elements, comma separated")->required()->delimiter(',');
  lattice->add_option("--terminals", o.trace, "Separator elements that are terminals")->delimiter(',');
  lattice->add_option("--max-size", o.max_size, "Largest separator accepted");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*compute) return cmd_compute(o, out);
    if (*split) return cmd_split(o, o.verify, out);
    if (*verify) return cmd_verify(o, out);
    if (*states) return cmd_states(o, out);
    if (*lattice) return cmd_lattice(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace ksplit::cli
