#include "oxbar/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace oxbar::report {

namespace {

void dump_into(std::string& out, const Json& v, int indent, int depth) {
  const bool pretty = indent >= 0;
  auto newline = [&](int d) {
    if (!pretty) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += Json(key).dump();
        out += pretty ? ": " : ":";
        dump_into(out, item, indent, depth + 1);
      }
      newline(depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& item : v) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        dump_into(out, item, indent, depth + 1);
      }
      newline(depth);
      out += ']';
      return;
    }
    case Json::value_t::number_float:
      out += format_fixed(v.get<double>());
      return;
    default:
      out += v.dump();
      return;
  }
}

std::string join_segments(const std::vector<int>& segs) {
  std::string s;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (i) s += '|';
    s += std::to_string(segs[i]);
  }
  return s;
}

Json impl_json(const ImplSpec& impl) {
  return Json{{"name", impl.name()},
              {"topology", std::string(to_string(impl.topology))},
              {"layout", std::string(to_string(impl.layout))}};
}

ImplSpec impl_from_json(const Json& j) { return ImplSpec::parse(j.at("name").get<std::string>()); }

Json strings(const std::vector<std::string>& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(s);
  return a;
}

}  // namespace

std::string format_fixed(double value) {
  // Anything that would print as -0.000000 prints as 0.000000.
  if (std::abs(value) < 5e-7) value = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

std::string dump_fixed(const Json& value, int indent) {
  std::string out;
  dump_into(out, value, indent, 0);
  return out;
}

Json to_json(const TechParams& tech) {
  Json j;
  j["name"] = tech.name ? Json(*tech.name) : Json(nullptr);
  j["p_crossing"] = tech.p_crossing;
  j["p_propagation"] = tech.p_propagation;
  j["p_drop"] = tech.p_drop;
  return j;
}

Json to_json(const GridSpec& grid) {
  return Json{{"n", grid.n()}, {"ports", grid.ports()}, {"pitch_cm", grid.pitch_cm()},
              {"pitch_mm", grid.pitch_cm() * 10.0}};
}

Json to_json(const CrossingModel& model) {
  Json j;
  j["mode"] = std::string(to_string(model.mode()));
  if (model.mode() == CrossingModel::Mode::CustomTable) {
    Json table = Json::array();
    for (const auto& [key, extra] : model.table()) {
      table.push_back(
          Json{{"topology", std::string(to_string(key.first))}, {"n", key.second}, {"extra", extra}});
    }
    j["table"] = table;
  }
  return j;
}

Json to_json(const LossBreakdown& loss) {
  return Json{{"d_max_cm", loss.d_max_cm},
              {"n_crossing", loss.n_crossing},
              {"n_drop", loss.n_drop},
              {"l_waveguide_db", loss.l_waveguide_db},
              {"l_crossing_db", loss.l_crossing_db},
              {"l_drop_db", loss.l_drop_db},
              {"l_total_db", loss.l_total_db},
              {"assumptions", strings(loss.assumptions)}};
}

Json to_json(const ResourceCounts& rc) {
  return Json{{"mr_crossbar_initial", rc.mr_crossbar_initial},
              {"mr_crossbar_reduced", rc.mr_crossbar_reduced},
              {"mr_receiver", rc.mr_receiver},
              {"lasers", rc.lasers},
              {"min_wavelengths", rc.min_wavelengths}};
}

Json to_json(const Comparison& c) {
  return Json{{"loss_a", to_json(c.loss_a)},
              {"loss_b", to_json(c.loss_b)},
              {"better", std::string(to_string(c.better))},
              {"improvement_pct", c.improvement_pct}};
}

Json to_json(const RingAssignment& a) {
  Json arcs = Json::array();
  for (const auto& arc : a.arcs) {
    arcs.push_back(Json{{"src", arc.src},
                        {"dst", arc.dst},
                        {"wavelength", arc.wavelength},
                        {"direction", std::string(to_string(arc.direction))},
                        {"segments", arc.segments}});
  }
  return Json{{"ports", a.ports},
              {"mode", std::string(to_string(a.mode))},
              {"wavelength_count", a.wavelength_count},
              {"arcs", arcs}};
}

Json to_json(const std::vector<Violation>& violations) {
  Json a = Json::array();
  for (const auto& v : violations) {
    a.push_back(Json{{"kind", std::string(to_string(v.kind))}, {"detail", v.detail}});
  }
  return a;
}

Json to_json(const oracle::CrossCheckReport& r) {
  Json mism = Json::array();
  for (const auto& m : r.mismatches) {
    mism.push_back(
        Json{{"formula", m.formula}, {"n", m.n}, {"expected", m.expected}, {"actual", m.actual}});
  }
  return Json{{"checked", strings(r.checked)},
              {"n_values", r.n_values},
              {"mismatches", mism},
              {"summary", std::to_string(r.mismatches.size()) + " mismatches"}};
}

Json to_json(const SweepResult& s) {
  Json impls = Json::array();
  for (const auto& impl : s.impls) impls.push_back(impl_json(impl));
  Json points = Json::array();
  for (const auto& p : s.points) {
    Json losses = Json::array();
    for (std::size_t k = 0; k < p.losses.size(); ++k) {
      Json l = to_json(p.losses[k]);
      l["implementation"] = s.impls[k].name();
      losses.push_back(std::move(l));
    }
    points.push_back(Json{{"axis_value", p.axis_value},
                          {"n", p.n},
                          {"pitch_cm", p.pitch_cm},
                          {"losses", losses}});
  }
  Json j;
  j["axis"] = std::string(to_string(s.axis));
  j["die_area_cm2"] = s.die_area_cm2 ? Json(*s.die_area_cm2) : Json(nullptr);
  j["n"] = s.n ? Json(*s.n) : Json(nullptr);
  j["tech"] = to_json(s.tech);
  j["crossing_model"] = to_json(s.model);
  j["strict"] = s.strictness == Strictness::Strict;
  j["implementations"] = impls;
  j["points"] = points;
  return j;
}

Json to_json(const Frontier& f) {
  return Json{{"impl_a", impl_json(f.impl_a)},
              {"impl_b", impl_json(f.impl_b)},
              {"n", f.n},
              {"pitch_cm", f.pitch_cm},
              {"p_drop", f.p_drop},
              {"delta_d_max_cm", f.delta_d_max_cm},
              {"delta_n_crossing", f.delta_n_crossing},
              {"delta_n_drop", f.delta_n_drop},
              {"degenerate", f.degenerate},
              {"slope", f.slope},
              {"intercept", f.intercept},
              {"below", f.degenerate ? Json(nullptr) : Json(std::string(to_string(f.below)))},
              {"assumptions", strings(f.assumptions)}};
}

TechParams tech_from_json(const Json& j) {
  std::optional<std::string> name;
  if (j.contains("name") && !j.at("name").is_null()) name = j.at("name").get<std::string>();
  return TechParams::make(j.at("p_propagation").get<double>(), j.at("p_crossing").get<double>(),
                          j.at("p_drop").get<double>(), std::move(name));
}

CrossingModel crossing_model_from_json(const Json& j) {
  switch (parse_crossing_mode(j.at("mode").get<std::string>())) {
    case CrossingModel::Mode::ZeroExtra: return CrossingModel::zero_extra();
    case CrossingModel::Mode::CalibratedN8: return CrossingModel::calibrated_n8();
    case CrossingModel::Mode::CustomTable: break;
  }
  CrossingModel::Table table;
  for (const auto& e : j.at("table")) {
    table[{parse_topology(e.at("topology").get<std::string>()), e.at("n").get<int>()}] =
        e.at("extra").get<int>();
  }
  return CrossingModel::custom(std::move(table));
}

LossBreakdown loss_from_json(const Json& j) {
  LossBreakdown l;
  l.d_max_cm = j.at("d_max_cm").get<double>();
  l.n_crossing = j.at("n_crossing").get<int>();
  l.n_drop = j.at("n_drop").get<int>();
  l.l_waveguide_db = j.at("l_waveguide_db").get<double>();
  l.l_crossing_db = j.at("l_crossing_db").get<double>();
  l.l_drop_db = j.at("l_drop_db").get<double>();
  l.l_total_db = j.at("l_total_db").get<double>();
  l.assumptions = j.at("assumptions").get<std::vector<std::string>>();
  return l;
}

ResourceCounts resource_counts_from_json(const Json& j) {
  ResourceCounts rc;
  rc.mr_crossbar_initial = j.at("mr_crossbar_initial").get<std::int64_t>();
  rc.mr_crossbar_reduced = j.at("mr_crossbar_reduced").get<std::int64_t>();
  rc.mr_receiver = j.at("mr_receiver").get<std::int64_t>();
  rc.lasers = j.at("lasers").get<std::int64_t>();
  rc.min_wavelengths = j.at("min_wavelengths").get<std::int64_t>();
  return rc;
}

RingAssignment assignment_from_json(const Json& j) {
  RingAssignment a;
  a.ports = j.at("ports").get<int>();
  a.mode = parse_ring_mode(j.at("mode").get<std::string>());
  a.wavelength_count = j.at("wavelength_count").get<int>();
  for (const auto& e : j.at("arcs")) {
    a.arcs.push_back({e.at("src").get<int>(), e.at("dst").get<int>(), e.at("wavelength").get<int>(),
                      parse_direction(e.at("direction").get<std::string>()),
                      e.at("segments").get<std::vector<int>>()});
  }
  return a;
}

oracle::CrossCheckReport cross_check_from_json(const Json& j) {
  oracle::CrossCheckReport r;
  r.checked = j.at("checked").get<std::vector<std::string>>();
  r.n_values = j.at("n_values").get<std::vector<int>>();
  for (const auto& e : j.at("mismatches")) {
    r.mismatches.push_back({e.at("formula").get<std::string>(), e.at("n").get<int>(),
                            e.at("expected").get<std::int64_t>(), e.at("actual").get<std::int64_t>()});
  }
  return r;
}

Frontier frontier_from_json(const Json& j) {
  Frontier f;
  f.impl_a = impl_from_json(j.at("impl_a"));
  f.impl_b = impl_from_json(j.at("impl_b"));
  f.n = j.at("n").get<int>();
  f.pitch_cm = j.at("pitch_cm").get<double>();
  f.p_drop = j.at("p_drop").get<double>();
  f.delta_d_max_cm = j.at("delta_d_max_cm").get<double>();
  f.delta_n_crossing = j.at("delta_n_crossing").get<int>();
  f.delta_n_drop = j.at("delta_n_drop").get<int>();
  f.degenerate = j.at("degenerate").get<bool>();
  f.slope = j.at("slope").get<double>();
  f.intercept = j.at("intercept").get<double>();
  if (!f.degenerate) {
    const auto below = j.at("below").get<std::string>();
    f.below = below == "a" ? FrontierSide::A : FrontierSide::B;
  }
  f.assumptions = j.at("assumptions").get<std::vector<std::string>>();
  return f;
}

void write_csv_preamble(std::ostream& os, const Json& header) {
  os << "# " << dump_fixed(header, -1) << '\n';
}

void write_assignment_csv(std::ostream& os, const RingAssignment& a) {
  os << "src,dst,wavelength,direction,segments\n";
  for (const auto& arc : a.arcs) {
    os << arc.src << ',' << arc.dst << ',' << arc.wavelength << ',' << to_string(arc.direction)
       << ',' << join_segments(arc.segments) << '\n';
  }
}

void write_sweep_csv(std::ostream& os, const SweepResult& s) {
  os << "axis_value,topology,layout,d_max_cm,n_crossing,n_drop,l_waveguide_db,l_crossing_db,"
        "l_drop_db,l_total_db\n";
  for (const auto& p : s.points) {
    for (std::size_t k = 0; k < s.impls.size(); ++k) {
      const auto& l = p.losses[k];
      os << format_fixed(p.axis_value) << ',' << to_string(s.impls[k].topology) << ','
         << to_string(s.impls[k].layout) << ',' << format_fixed(l.d_max_cm) << ',' << l.n_crossing
         << ',' << l.n_drop << ',' << format_fixed(l.l_waveguide_db) << ','
         << format_fixed(l.l_crossing_db) << ',' << format_fixed(l.l_drop_db) << ','
         << format_fixed(l.l_total_db) << '\n';
    }
  }
}

std::vector<LineSample> sample_line(const Frontier& f, int samples, double p_crossing_max,
                                    double p_propagation_max) {
  if (samples < 2) throw InvalidInput("a sampled line needs at least 2 samples");
  std::vector<LineSample> out;
  if (f.degenerate) return out;
  for (int i = 0; i < samples; ++i) {
    const double pc = p_crossing_max * i / (samples - 1);
    const double pp = f.p_propagation_at(pc);
    if (pp >= 0.0 && pp <= p_propagation_max) out.push_back({pc, pp});
  }
  return out;
}

void write_frontier_csv(std::ostream& os, const std::vector<LineSample>& line) {
  os << "p_crossing,p_propagation\n";
  for (const auto& s : line) os << format_fixed(s.p_crossing) << ',' << format_fixed(s.p_propagation) << '\n';
}

}  // namespace oxbar::report
