#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "oxbar/cli.hpp"
#include "oxbar/report.hpp"

namespace py = pybind11;
using namespace oxbar;
using report::Json;

namespace {

py::object to_py(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null: return py::none();
    case Json::value_t::boolean: return py::bool_(j.get<bool>());
    case Json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case Json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case Json::value_t::number_float: return py::float_(j.get<double>());
    case Json::value_t::string: return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const auto& v : j) out.append(to_py(v));
      return out;
    }
    case Json::value_t::object: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = to_py(v);
      return out;
    }
    default: throw InvalidInput("unsupported JSON value");
  }
}

TechParams tech_of(const std::optional<std::string>& preset, std::optional<double> pc,
                   std::optional<double> pp, std::optional<double> pd) {
  if (preset) {
    auto t = find_preset(*preset);
    if (!t) throw InvalidInput("unknown preset '" + *preset + "'");
    return *t;
  }
  if (!pc || !pp || !pd) throw InvalidInput("give a preset or all of p_crossing, p_propagation, p_drop");
  return TechParams::make(*pp, *pc, *pd);
}

GridSpec grid_of(int n, std::optional<double> die_area_cm2, std::optional<double> pitch_mm) {
  if (die_area_cm2 && pitch_mm) throw InvalidInput("give die_area_cm2 or pitch_mm, not both");
  if (pitch_mm) return GridSpec(n, *pitch_mm / 10.0);
  return GridSpec::from_die_area(die_area_cm2.value_or(4.0), n);
}

CrossingModel model_of(const std::string& name) {
  const auto mode = parse_crossing_mode(name);
  if (mode == CrossingModel::Mode::ZeroExtra) return CrossingModel::zero_extra();
  if (mode == CrossingModel::Mode::CalibratedN8) return CrossingModel::calibrated_n8();
  throw InvalidInput("custom crossing tables are only available through the CLI config file");
}

RingAssignment assign(const std::string& mode, int ports) {
  return parse_ring_mode(mode) == RingMode::C ? assign_c(ports) : assign_ccc(ports);
}

}  // namespace

PYBIND11_MODULE(_oxbar, m) {
  m.doc() = "Worst-case insertion loss of wavelength-routed optical crossbars";

  static py::exception<Error> base(m, "Error");
  static py::exception<InvalidInput> invalid(m, "InvalidInput", base.ptr());
  static py::exception<ModelError> model_error(m, "ModelError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InvalidInput& e) {
      py::set_error(invalid, e.what());
    } catch (const ModelError& e) {
      py::set_error(model_error, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    }
  });

  m.def("presets", [] {
    py::list out;
    for (const auto& t : builtin_presets()) out.append(to_py(report::to_json(t)));
    return out;
  });

  m.def("implementations", [] {
    py::list out;
    for (const auto& i : all_impls()) out.append(i.name());
    return out;
  });

  m.def(
      "evaluate",
      [](const std::string& impl, int n, std::optional<double> die_area_cm2, std::optional<double> pitch_mm,
         std::optional<std::string> preset, std::optional<double> p_crossing, std::optional<double> p_propagation,
         std::optional<double> p_drop, const std::string& crossing_model) {
        return to_py(report::to_json(worst_case_loss(ImplSpec::parse(impl), grid_of(n, die_area_cm2, pitch_mm),
                                                     tech_of(preset, p_crossing, p_propagation, p_drop),
                                                     model_of(crossing_model))));
      },
      py::arg("impl"), py::arg("n"), py::kw_only(), py::arg("die_area_cm2") = py::none(),
      py::arg("pitch_mm") = py::none(), py::arg("preset") = py::none(), py::arg("p_crossing") = py::none(),
      py::arg("p_propagation") = py::none(), py::arg("p_drop") = py::none(),
      py::arg("crossing_model") = "calibrated-n8");

  m.def(
      "compare",
      [](const std::string& a, const std::string& b, int n, std::optional<double> die_area_cm2,
         std::optional<double> pitch_mm, std::optional<std::string> preset, std::optional<double> p_crossing,
         std::optional<double> p_propagation, std::optional<double> p_drop, const std::string& crossing_model) {
        return to_py(report::to_json(compare(ImplSpec::parse(a), ImplSpec::parse(b),
                                             grid_of(n, die_area_cm2, pitch_mm),
                                             tech_of(preset, p_crossing, p_propagation, p_drop),
                                             model_of(crossing_model))));
      },
      py::arg("a"), py::arg("b"), py::arg("n"), py::kw_only(), py::arg("die_area_cm2") = py::none(),
      py::arg("pitch_mm") = py::none(), py::arg("preset") = py::none(), py::arg("p_crossing") = py::none(),
      py::arg("p_propagation") = py::none(), py::arg("p_drop") = py::none(),
      py::arg("crossing_model") = "calibrated-n8");

  m.def(
      "resources",
      [](const std::string& topology, int n) {
        return to_py(report::to_json(resource_counts(parse_topology(topology), n)));
      },
      py::arg("topology"), py::arg("n"));

  m.def(
      "assign", [](const std::string& mode, int ports) { return to_py(report::to_json(assign(mode, ports))); },
      py::arg("mode"), py::arg("ports"));

  m.def(
      "validate",
      [](const py::dict& assignment) {
        const auto text = py::module_::import("json").attr("dumps")(assignment).cast<std::string>();
        return to_py(report::to_json(validate(report::assignment_from_json(Json::parse(text)))));
      },
      py::arg("assignment"));

  m.def(
      "partition_waveguides", [](std::int64_t total, std::int64_t cap) { return partition_waveguides(total, cap); },
      py::arg("total_wavelengths"), py::arg("cap_per_waveguide"));

  m.def(
      "verify", [](int max_n) { return to_py(report::to_json(oracle::cross_check(max_n))); },
      py::arg("max_n") = 8);

  m.def(
      "sweep_n",
      [](std::vector<std::string> impls, std::vector<int> n_values, double die_area_cm2, const std::string& preset,
         const std::string& crossing_model, bool lenient) {
        std::vector<ImplSpec> specs;
        for (const auto& s : impls) specs.push_back(ImplSpec::parse(s));
        SweepOptions opts;
        opts.strictness = lenient ? Strictness::Lenient : Strictness::Strict;
        return to_py(report::to_json(sweep_n(die_area_cm2, std::move(n_values), std::move(specs),
                                             tech_of(preset, {}, {}, {}), model_of(crossing_model), opts)));
      },
      py::arg("impls"), py::arg("n_values"), py::kw_only(), py::arg("die_area_cm2") = 4.0,
      py::arg("preset") = "pan2010", py::arg("crossing_model") = "calibrated-n8", py::arg("lenient") = false);

  m.def(
      "frontier",
      [](const std::string& a, const std::string& b, int n, double die_area_cm2, double p_drop,
         const std::string& crossing_model) {
        const auto grid = GridSpec::from_die_area(die_area_cm2, n);
        return to_py(report::to_json(breakeven_frontier(ImplSpec::parse(a), ImplSpec::parse(b), n,
                                                        grid.pitch_cm(), p_drop, model_of(crossing_model))));
      },
      py::arg("a"), py::arg("b"), py::arg("n"), py::kw_only(), py::arg("die_area_cm2") = 4.0,
      py::arg("p_drop") = 1.0, py::arg("crossing_model") = "calibrated-n8");

  m.def(
      "classify",
      [](const py::dict& frontier, double p_crossing, double p_propagation) {
        const auto text = py::module_::import("json").attr("dumps")(frontier).cast<std::string>();
        const auto f = report::frontier_from_json(Json::parse(text));
        return std::string(to_string(classify(f, TechParams::make(p_propagation, p_crossing, f.p_drop))));
      },
      py::arg("frontier"), py::arg("p_crossing"), py::arg("p_propagation"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
