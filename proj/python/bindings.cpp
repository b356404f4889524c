#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "ksplit/counting.hpp"
#include "ksplit/network_file.hpp"
#include "ksplit/splitting.hpp"

namespace py = pybind11;
using namespace ksplit;

namespace {

py::object fraction(const Rational& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_string(q));
}

py::object integer(const BigInt& n) { return py::int_(py::str(to_string(n))); }

std::vector<std::string> separator_or_file(const NetworkFile& f, const std::optional<std::vector<std::string>>& given) {
  if (given && !given->empty()) return *given;
  if (f.separator && !f.separator->empty()) return *f.separator;
  throw std::invalid_argument("no separator given and the network has none");
}

py::object split_reliability(const NetworkFile& f, const std::optional<std::vector<std::string>>& separator,
                             const std::string& method, std::size_t limit) {
  if (method != "p" && method != "r") throw std::invalid_argument("method must be 'p' or 'r'");
  auto split = split_by_separator(f.kgraph(), separator_or_file(f, separator), f.side_assignment);
  const EnumerationLimit lim{limit};
  return fraction(method == "p" ? reliability_via_p(split, f.probabilities(), lim)
                                : reliability_via_r(split, f.probabilities(), lim));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact K-terminal network reliability by separator splitting";

  py::register_exception<LimitExceeded>(m, "LimitExceeded", PyExc_RuntimeError);

  py::class_<LabelledPartition>(m, "LabelledPartition")
      .def(py::init([](const std::string& text) { return LabelledPartition::parse(text); }), py::arg("text"))
      .def_property_readonly("ground", [](const LabelledPartition& p) { return p.ground().ids(); })
      .def_property_readonly("blocks",
                             [](const LabelledPartition& p) {
                               std::vector<std::pair<std::vector<std::string>, bool>> out;
                               for (const auto& b : p.blocks()) {
                                 std::vector<std::string> members;
                                 for (std::size_t i = 0; i < p.ground().size(); ++i) {
                                   if ((b.members >> i) & 1U) members.push_back(p.ground()[i]);
                                 }
                                 out.emplace_back(std::move(members), b.labelled);
                               }
                               return out;
                             })
      .def_property_readonly("labelled_count", &LabelledPartition::labelled_count)
      .def_property_readonly("unlabelled_count", &LabelledPartition::unlabelled_count)
      .def("__len__", &LabelledPartition::block_count)
      .def("__str__", &LabelledPartition::to_string)
      .def("__repr__", [](const LabelledPartition& p) { return "LabelledPartition('" + p.to_string() + "')"; })
      .def("__hash__", &LabelledPartition::hash)
      .def("__eq__", [](const LabelledPartition& a, const LabelledPartition& b) { return a == b; })
      .def("__le__", [](const LabelledPartition& a, const LabelledPartition& b) { return refines(a, b); });

  m.def("refines", &refines, py::arg("sigma"), py::arg("pi"));
  m.def("join", &join, py::arg("sigma"), py::arg("pi"));
  m.def(
      "restrict",
      [](const LabelledPartition& pi, const std::vector<std::string>& subset) { return restrict_to(pi, subset); },
      py::arg("pi"), py::arg("subset"));
  m.def("m_indicator", &m_indicator, py::arg("pi"));
  m.def("star", &star, py::arg("pi"));
  m.def("moebius", &moebius, py::arg("sigma"), py::arg("pi"));
  m.def("moebius_bruteforce", &moebius_bruteforce, py::arg("sigma"), py::arg("pi"));
  m.def("lambda_", &lambda_value, py::arg("pi"));

  m.def("bell", [](unsigned n) { return integer(bell(n)); }, py::arg("n"));
  m.def("count_states", [](unsigned n, unsigned k) { return integer(count_states(n, k)); }, py::arg("n"),
        py::arg("k"));
  m.def("count_reduced_states", [](unsigned n, unsigned k) { return integer(count_reduced_states(n, k)); },
        py::arg("n"), py::arg("k"));

  m.def(
      "enumerate_states",
      [](std::vector<std::string> separator, std::vector<std::string> terminals, bool reduced) {
        StateSpace space(std::move(separator), std::move(terminals));
        return reduced ? space.reduced_labels() : space.labels();
      },
      py::arg("separator"), py::arg("terminals") = std::vector<std::string>{}, py::arg("reduced") = false);

  m.def(
      "lattice",
      [](std::vector<std::string> separator, std::vector<std::string> terminals) {
        const auto b = build_bundle(StateSpace(std::move(separator), std::move(terminals)));
        py::list m_rows, inv_rows;
        for (std::size_t i = 0; i < b.transfer.rows(); ++i) {
          auto r = b.transfer.row(i);
          m_rows.append(std::vector<std::int64_t>(r.begin(), r.end()));
        }
        for (std::size_t i = 0; i < b.reduced_transfer_inverse.rows(); ++i) {
          py::list row;
          for (const auto& q : b.reduced_transfer_inverse.row(i)) row.append(fraction(q));
          inv_rows.append(row);
        }
        py::dict out;
        out["states"] = b.space.labels();
        out["reduced"] = b.space.reduced_labels();
        out["lambda"] = b.lambda;
        out["M"] = m_rows;
        out["M0_inverse"] = inv_rows;
        return out;
      },
      py::arg("separator"), py::arg("terminals") = std::vector<std::string>{});

  py::class_<NetworkFile>(m, "Network")
      .def_static("from_json", &parse_network_json, py::arg("text"))
      .def_static("load", &load_network_file, py::arg("path"))
      .def("to_json", &render_network_json)
      .def_readonly("vertices", &NetworkFile::vertices)
      .def_readonly("terminals", &NetworkFile::terminals)
      .def_readonly("separator", &NetworkFile::separator)
      .def_property_readonly("edges",
                             [](const NetworkFile& f) {
                               py::list out;
                               for (const auto& e : f.edges) out.append(py::make_tuple(e.id, e.u, e.v, fraction(e.p)));
                               return out;
                             })
      .def(
          "reliability",
          [](const NetworkFile& f, std::size_t limit) { return fraction(reliability_bruteforce(f.network(), {limit})); },
          py::arg("limit") = 24)
      .def("split_reliability", &split_reliability, py::arg("separator") = py::none(), py::arg("method") = "r",
           py::arg("limit") = 24)
      .def(
          "check_lemmas",
          [](const NetworkFile& f, const std::optional<std::vector<std::string>>& separator) {
            auto split = split_by_separator(f.kgraph(), separator_or_file(f, separator), f.side_assignment);
            return check_reduced_lemmas(split, f.probabilities()).failures;
          },
          py::arg("separator") = py::none())
      .def("__eq__", [](const NetworkFile& a, const NetworkFile& b) { return a == b; });
}
