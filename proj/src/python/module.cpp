// Python bindings. Alphabet sizes are plain ints, words are strings in the
// CLI notation, exact rationals come back as (numerator, denominator) ints.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "insdel/bounds.hpp"
#include "insdel/geometry.hpp"
#include "insdel/monte_carlo.hpp"
#include "insdel/oracles.hpp"
#include "insdel/outer_bound.hpp"
#include "insdel/surface.hpp"

namespace py = pybind11;
using namespace insdel;

namespace {

py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::tuple to_py(const Rational& r) {
  return py::make_tuple(to_py(boost::multiprecision::numerator(r)), to_py(boost::multiprecision::denominator(r)));
}

Word word(const std::string& s, int q) { return parse_word(s, AlphabetSize(q)); }

SmallCode code_of(const std::vector<std::string>& words, int q) {
  std::vector<Word> ws;
  for (const auto& w : words) ws.push_back(word(w, q));
  return SmallCode(AlphabetSize(q), std::move(ws));
}

using BoundFn = BoundValue (*)(AlphabetSize, double, double);

template <BoundFn F>
BoundValue bound2(int q, double gamma, double delta) {
  return F(AlphabetSize(q), gamma, delta);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Rate bounds and combinatorial checks for list-decodable insertion/deletion codes";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

  py::enum_<BoundSource>(m, "BoundSource")
      .value("INSERTION_ONLY", BoundSource::InsertionOnly)
      .value("DELETION_ONLY", BoundSource::DeletionOnly)
      .value("SPOKE", BoundSource::Spoke)
      .value("F_VALUE", BoundSource::FValue)
      .value("INNER", BoundSource::Inner)
      .value("LINEAR_OUTER", BoundSource::LinearOuter)
      .value("INTERPOLATED_OUTER", BoundSource::InterpolatedOuter)
      .value("COMBINED_OUTER", BoundSource::CombinedOuter);

  py::class_<BoundValue>(m, "BoundValue")
      .def_readonly("rate", &BoundValue::rate)
      .def_readonly("feasible", &BoundValue::feasible)
      .def_readonly("source", &BoundValue::source)
      .def_readonly("raw", &BoundValue::raw)
      .def_property_readonly("source_name", [](const BoundValue& b) { return std::string(to_string(b.source)); })
      .def("__repr__", [](const BoundValue& b) {
        return "BoundValue(rate=" + std::to_string(b.rate) + ", source=" + std::string(to_string(b.source)) + ")";
      });

  py::class_<GammaSplit>(m, "GammaSplit")
      .def_readonly("gamma0", &GammaSplit::gamma0)
      .def_readonly("gamma1", &GammaSplit::gamma1)
      .def_readonly("objective", &GammaSplit::objective)
      .def_readonly("lower", &GammaSplit::lower)
      .def_readonly("upper", &GammaSplit::upper)
      .def_readonly("printed_candidate", &GammaSplit::printed_candidate)
      .def_readonly("stationarity_residual", &GammaSplit::stationarity_residual)
      .def_property_readonly("method", [](const GammaSplit& s) { return std::string(to_string(s.method)); });

  m.def("parse_bound_source", [](const std::string& s) { return parse_bound_source(s); });
  m.def("evaluate_bound", [](const std::string& source, int q, double gamma, double delta) {
    return evaluate_bound(parse_bound_source(source), AlphabetSize(q), gamma, delta);
  }, py::arg("source"), py::arg("q"), py::arg("gamma"), py::arg("delta"));

  m.def("q_ary_entropy", [](double x, int q) { return q_ary_entropy(x, AlphabetSize(q)); });
  m.def("insertion_only_bound", [](int q, double gamma) { return insertion_only_bound(AlphabetSize(q), gamma); });
  m.def("deletion_only_bound", [](int q, double delta) { return deletion_only_piecewise_bound(AlphabetSize(q), delta); });
  m.def("spoke_bound", [](int q, int d, double gamma_prime) { return spoke_bound(AlphabetSize(q), d, gamma_prime); });
  m.def("f_value", [](int q, double gamma, double delta) { return f_value(AlphabetSize(q), gamma, delta); });
  m.def("f_hessian", [](int q, double gamma, double delta) {
    const Hessian2 h = f_hessian(AlphabetSize(q), gamma, delta);
    return std::vector<std::vector<double>>{{h.h11, h.h12}, {h.h21, h.h22}};
  });
  m.def("inner_bound", &bound2<inner_bound>, py::arg("q"), py::arg("gamma"), py::arg("delta"));
  m.def("linear_outer_bound", &bound2<linear_outer_bound>, py::arg("q"), py::arg("gamma"), py::arg("delta"));
  m.def("interpolated_outer_bound", &bound2<interpolated_outer_bound>, py::arg("q"), py::arg("gamma"), py::arg("delta"));
  m.def("combined_outer_bound", &bound2<combined_outer_bound>, py::arg("q"), py::arg("gamma"), py::arg("delta"));
  m.def("optimal_gamma0", [](int q, double gamma, double delta) { return optimal_gamma0(AlphabetSize(q), gamma, delta); });

  m.def("polygon_vertices", [](int q) {
    const ResiliencePolygon poly = build_polygon(AlphabetSize(q));
    std::vector<std::pair<double, double>> out;
    for (const PlanePoint& p : poly.vertices()) out.emplace_back(p.gamma, p.delta);
    return out;
  });
  m.def("in_resilience_region", [](int q, double gamma, double delta) {
    return contains_closure(build_polygon(AlphabetSize(q)), PlanePoint{gamma, delta});
  });
  m.def("scaling_alpha", [](int q, double gamma, double delta) {
    const ScalingResult r = scaling_alpha(build_polygon(AlphabetSize(q)), PlanePoint{gamma, delta});
    py::dict d;
    d["alpha"] = r.alpha;
    d["alpha_exact"] = py::make_tuple(static_cast<long long>(r.alpha_exact.num), static_cast<long long>(r.alpha_exact.den));
    d["boundary_point"] = py::make_tuple(r.boundary_point.gamma, r.boundary_point.delta);
    d["edge"] = r.edge;
    return d;
  });

  m.def("lcs", [](const std::string& a, const std::string& b, int q) { return lcs(word(a, q), word(b, q)); },
        py::arg("a"), py::arg("b"), py::arg("q") = 2);
  m.def("reachable", [](const std::string& x, const std::string& w, int del, int ins, int q) {
    return reachable(word(x, q), word(w, q), del, ins);
  }, py::arg("x"), py::arg("w"), py::arg("deletions"), py::arg("insertions"), py::arg("q") = 2);
  m.def("supersequence_count", [](int n, int t, int q, bool cumulative) {
    return to_py(cumulative ? supersequence_count_up_to_length(n, t, AlphabetSize(q))
                            : supersequence_count_exact_length(n, t, AlphabetSize(q)));
  }, py::arg("n"), py::arg("t"), py::arg("q"), py::arg("cumulative") = false);
  m.def("enumerate_ball", [](const std::string& center, int ins, int del, int q, bool exact_length) {
    const auto ball = enumerate_ball({word(center, q), ins, del,
                                      exact_length ? LengthMode::ExactFinalLength : LengthMode::AllLengths});
    std::vector<std::string> out;
    for (const Word& w : ball) out.push_back(format_word(w));
    return out;
  }, py::arg("center"), py::arg("insertions") = 0, py::arg("deletions") = 0, py::arg("q") = 2,
     py::arg("exact_length") = false);
  m.def("containment_probability", [](const std::string& y, int length, int q) {
    return to_py(containment_probability(word(y, q), length));
  }, py::arg("y"), py::arg("length"), py::arg("q") = 2);
  m.def("check_list_decodable", [](const std::vector<std::string>& words, int q, double gamma, double delta, int L) {
    const auto v = check_list_decodable(code_of(words, q), gamma, delta, L);
    py::dict d;
    d["ok"] = v.ok;
    d["witness"] = v.witness ? py::object(py::str(format_word(*v.witness))) : py::object(py::none());
    std::vector<std::string> list;
    for (const Word& w : v.list) list.push_back(format_word(w));
    d["list"] = list;
    d["words_checked"] = v.words_checked;
    return d;
  }, py::arg("code"), py::arg("q"), py::arg("gamma"), py::arg("delta"), py::arg("list_size"));
  m.def("alphabet_reduction", [](const std::string& x, int d, int q) {
    return format_word(alphabet_reduction(word(x, q), d));
  }, py::arg("x"), py::arg("d"), py::arg("q") = 2);

  m.def("surface", [](int q, const std::string& bound, int resolution, unsigned threads) {
    const SurfaceGrid g = evaluate_surface(AlphabetSize(q), parse_bound_source(bound), resolution, threads);
    std::vector<std::vector<double>> rates(g.delta_axis.size(), std::vector<double>(g.gamma_axis.size()));
    for (std::size_t i = 0; i < g.delta_axis.size(); ++i)
      for (std::size_t j = 0; j < g.gamma_axis.size(); ++j) rates[i][j] = g.at(i, j).rate;
    py::dict d;
    d["gamma"] = g.gamma_axis;
    d["delta"] = g.delta_axis;
    d["rate"] = rates;
    return d;
  }, py::arg("q"), py::arg("bound") = "combined-outer", py::arg("resolution") = kDefaultResolution,
     py::arg("threads") = 0u);

  m.def("monte_carlo", [](const std::string& config_json) {
    const McConfig cfg = mc_config_from_json(config_json);
    return mc_report_to_json(cfg, run_inner_bound_mc(cfg));
  }, py::arg("config_json"), "Runs the random-code experiment described by a JSON config; returns the JSON report.");
}
