#include "oxbar/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "oxbar/catalog.hpp"
#include "oxbar/dse.hpp"
#include "oxbar/loss.hpp"
#include "oxbar/oracle.hpp"
#include "oxbar/ornoc.hpp"
#include "oxbar/report.hpp"

namespace oxbar::cli {

namespace {

using report::Json;

// Values a --config file may supply. Flags given on the command line win.
struct FileConfig {
  std::map<std::string, TechParams> presets;
  std::optional<CrossingModel::Table> crossing_table;
  Json defaults = Json::object();
};

struct Flags {
  std::string config_path;
  std::string format = "json";
  std::string out_path;

  std::string impl;
  std::string layout;
  std::string impl_a;
  std::string impl_b;
  std::vector<std::string> impls;

  int n = 0;
  double pitch_mm = 0.0;
  double die_area = 0.0;
  std::vector<int> n_values;
  std::vector<double> pitches_mm;

  std::string preset;
  double p_crossing = 0.0;
  double p_propagation = 0.0;
  double p_drop = 0.0;

  std::string crossing_model;
  bool lenient = false;
  bool parallel = false;

  std::string mode = "ccc";
  int ports = 0;
  int max_n = 8;

  int samples = 41;
  double pc_max = 0.2;
  double pp_max = 2.0;
  std::vector<std::string> points;
  std::vector<std::string> classify_presets;
  std::string axis = "n";
};

struct Opts {
  CLI::Option* n = nullptr;
  CLI::Option* pitch = nullptr;
  CLI::Option* die = nullptr;
  CLI::Option* preset = nullptr;
  CLI::Option* pc = nullptr;
  CLI::Option* pp = nullptr;
  CLI::Option* pd = nullptr;
  CLI::Option* model = nullptr;
  CLI::Option* ports = nullptr;
  CLI::Option* layout = nullptr;
};

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

bool given(const CLI::Option* o) { return o != nullptr && o->count() > 0; }

FileConfig load_config(const std::string& path) {
  FileConfig cfg;
  if (path.empty()) return cfg;
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open config file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw InvalidInput("config file '" + path + "' is not valid JSON: " + e.what());
  }
  try {
    if (j.contains("presets")) {
      for (const auto& [name, value] : j.at("presets").items()) {
        if (find_preset(name)) throw InvalidInput("config preset '" + name + "' shadows a built-in preset");
        Json v = value;
        v["name"] = name;
        cfg.presets.emplace(lower(name), report::tech_from_json(v));
      }
    }
    if (j.contains("crossing_table")) {
      CrossingModel::Table table;
      for (const auto& e : j.at("crossing_table")) {
        table[{parse_topology(e.at("topology").get<std::string>()), e.at("n").get<int>()}] =
            e.at("extra").get<int>();
      }
      cfg.crossing_table = std::move(table);
    }
    if (j.contains("defaults")) cfg.defaults = j.at("defaults");
  } catch (const Json::exception& e) {
    throw InvalidInput("config file '" + path + "': " + e.what());
  }
  return cfg;
}

template <typename T>
std::optional<T> config_default(const FileConfig& cfg, const char* key) {
  if (!cfg.defaults.contains(key)) return std::nullopt;
  try {
    return cfg.defaults.at(key).get<T>();
  } catch (const Json::exception&) {
    throw InvalidInput(std::string("config default '") + key + "' has the wrong type");
  }
}

std::optional<TechParams> lookup_preset(const FileConfig& cfg, const std::string& name) {
  if (auto p = find_preset(name)) return p;
  const auto it = cfg.presets.find(lower(name));
  if (it != cfg.presets.end()) return it->second;
  return std::nullopt;
}

TechParams resolve_tech(const Flags& f, const Opts& o, const FileConfig& cfg) {
  const bool explicit_triple = given(o.pc) || given(o.pp) || given(o.pd);
  if (given(o.preset) && explicit_triple) {
    throw InvalidInput("--preset and explicit --p-crossing/--p-propagation/--p-drop are exclusive");
  }
  if (explicit_triple) {
    if (!(given(o.pc) && given(o.pp) && given(o.pd))) {
      throw InvalidInput("an explicit technology needs all of --p-crossing, --p-propagation, --p-drop");
    }
    return TechParams::make(f.p_propagation, f.p_crossing, f.p_drop, std::nullopt);
  }
  std::optional<std::string> name;
  if (given(o.preset)) name = f.preset;
  else name = config_default<std::string>(cfg, "preset");
  if (!name) throw InvalidInput("no technology given: use --preset or the explicit loss coefficients");
  auto tech = lookup_preset(cfg, *name);
  if (!tech) throw InvalidInput("unknown preset '" + *name + "'");
  return *tech;
}

struct ResolvedGrid {
  GridSpec grid;
  std::optional<double> die_area_cm2;
};

int resolve_n(const Flags& f, const Opts& o, const FileConfig& cfg) {
  if (given(o.n)) return f.n;
  if (auto n = config_default<int>(cfg, "n")) return *n;
  throw InvalidInput("--n is required");
}

ResolvedGrid resolve_grid(const Flags& f, const Opts& o, const FileConfig& cfg) {
  const int n = resolve_n(f, o, cfg);
  if (given(o.pitch) && given(o.die)) throw InvalidInput("give exactly one of --pitch and --die-area");
  std::optional<double> pitch_mm;
  std::optional<double> die;
  if (given(o.pitch)) pitch_mm = f.pitch_mm;
  else if (given(o.die)) die = f.die_area;
  else {
    pitch_mm = config_default<double>(cfg, "pitch_mm");
    die = config_default<double>(cfg, "die_area_cm2");
    if (pitch_mm && die) throw InvalidInput("config defaults give both pitch_mm and die_area_cm2");
  }
  if (die) return {GridSpec::from_die_area(*die, n), die};
  if (pitch_mm) {
    if (!(*pitch_mm > 0.0)) throw InvalidInput("--pitch must be positive");
    return {GridSpec(n, *pitch_mm / 10.0), std::nullopt};
  }
  throw InvalidInput("give one of --pitch (mm) or --die-area (cm^2)");
}

CrossingModel resolve_model(const Flags& f, const Opts& o, const FileConfig& cfg) {
  std::string name = "calibrated-n8";
  if (given(o.model)) name = f.crossing_model;
  else if (auto d = config_default<std::string>(cfg, "crossing_model")) name = *d;
  switch (parse_crossing_mode(name)) {
    case CrossingModel::Mode::ZeroExtra: return CrossingModel::zero_extra();
    case CrossingModel::Mode::CalibratedN8: return CrossingModel::calibrated_n8();
    case CrossingModel::Mode::CustomTable: break;
  }
  if (!cfg.crossing_table) throw InvalidInput("custom crossing model needs a crossing_table in --config");
  return CrossingModel::custom(*cfg.crossing_table);
}

ImplSpec resolve_impl(const std::string& name, const std::string& layout) {
  if (layout.empty()) return ImplSpec::parse(name);
  ImplSpec impl{parse_topology(name), parse_layout(layout)};
  impl.require_valid();
  return impl;
}

Json grid_config(const ResolvedGrid& g) {
  Json j = report::to_json(g.grid);
  j["die_area_cm2"] = g.die_area_cm2 ? Json(*g.die_area_cm2) : Json(nullptr);
  return j;
}

void append_unique(std::vector<std::string>& into, const std::vector<std::string>& from) {
  for (const auto& s : from) {
    if (std::find(into.begin(), into.end(), s) == into.end()) into.push_back(s);
  }
}

Json assumptions_json(const std::vector<std::string>& a) {
  Json j = Json::array();
  for (const auto& s : a) j.push_back(s);
  return j;
}

// Writes the command result either as a JSON envelope or as CSV preceded by
// a one-line JSON comment carrying the same configuration.
struct Output {
  std::string command;
  Json config = Json::object();
  std::vector<std::string> assumptions;
  Json result;
  std::string csv_body;
};

void emit(const Output& o, const Flags& f, std::ostream& out) {
  std::ostringstream buf;
  if (f.format == "csv") {
    report::write_csv_preamble(buf, Json{{"command", o.command},
                                         {"config", o.config},
                                         {"assumptions", assumptions_json(o.assumptions)}});
    buf << o.csv_body;
  } else {
    Json env{{"command", o.command},
             {"config", o.config},
             {"assumptions", assumptions_json(o.assumptions)},
             {"result", o.result}};
    buf << report::dump_fixed(env) << '\n';
  }
  if (f.out_path.empty()) {
    out << buf.str();
    return;
  }
  std::ofstream file(f.out_path, std::ios::binary);
  if (!file) throw InvalidInput("cannot write '" + f.out_path + "'");
  file << buf.str();
}

std::string loss_csv(const std::vector<std::pair<ImplSpec, LossBreakdown>>& rows) {
  std::ostringstream os;
  os << "topology,layout,d_max_cm,n_crossing,n_drop,l_waveguide_db,l_crossing_db,l_drop_db,"
        "l_total_db\n";
  for (const auto& [impl, l] : rows) {
    os << to_string(impl.topology) << ',' << to_string(impl.layout) << ','
       << report::format_fixed(l.d_max_cm) << ',' << l.n_crossing << ',' << l.n_drop << ','
       << report::format_fixed(l.l_waveguide_db) << ',' << report::format_fixed(l.l_crossing_db)
       << ',' << report::format_fixed(l.l_drop_db) << ',' << report::format_fixed(l.l_total_db)
       << '\n';
  }
  return os.str();
}

std::pair<double, double> parse_point(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw InvalidInput("--point expects p_crossing,p_propagation");
  try {
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw InvalidInput("--point expects two numbers, got '" + s + "'");
  }
}

// --- subcommands -----------------------------------------------------------

int cmd_presets(const Flags& f, const FileConfig& cfg, std::ostream& out) {
  Output o;
  o.command = "presets";
  Json list = Json::array();
  std::ostringstream csv;
  csv << "name,p_crossing,p_propagation,p_drop\n";
  auto add = [&](const TechParams& t) {
    list.push_back(report::to_json(t));
    csv << *t.name << ',' << report::format_fixed(t.p_crossing) << ','
        << report::format_fixed(t.p_propagation) << ',' << report::format_fixed(t.p_drop) << '\n';
  };
  for (const auto& t : builtin_presets()) add(t);
  for (const auto& [name, t] : cfg.presets) add(t);
  o.result = list;
  o.csv_body = csv.str();
  emit(o, f, out);
  return kOk;
}

int cmd_evaluate(const Flags& f, const Opts& opts, const FileConfig& cfg, std::ostream& out) {
  const ImplSpec impl = resolve_impl(f.impl, f.layout);
  const auto grid = resolve_grid(f, opts, cfg);
  const TechParams tech = resolve_tech(f, opts, cfg);
  const CrossingModel model = resolve_model(f, opts, cfg);
  const auto loss = worst_case_loss(impl, grid.grid, tech, model);

  Output o;
  o.command = "evaluate";
  o.config = Json{{"implementation", impl.name()},
                  {"grid", grid_config(grid)},
                  {"tech", report::to_json(tech)},
                  {"crossing_model", report::to_json(model)}};
  o.assumptions = loss.assumptions;
  o.result = report::to_json(loss);
  o.csv_body = loss_csv({{impl, loss}});
  emit(o, f, out);
  return kOk;
}

int cmd_compare(const Flags& f, const Opts& opts, const FileConfig& cfg, std::ostream& out) {
  const ImplSpec a = ImplSpec::parse(f.impl_a);
  const ImplSpec b = ImplSpec::parse(f.impl_b);
  const auto grid = resolve_grid(f, opts, cfg);
  const TechParams tech = resolve_tech(f, opts, cfg);
  const CrossingModel model = resolve_model(f, opts, cfg);
  const auto c = compare(a, b, grid.grid, tech, model);

  Output o;
  o.command = "compare";
  o.config = Json{{"impl_a", a.name()},
                  {"impl_b", b.name()},
                  {"grid", grid_config(grid)},
                  {"tech", report::to_json(tech)},
                  {"crossing_model", report::to_json(model)}};
  append_unique(o.assumptions, c.loss_a.assumptions);
  append_unique(o.assumptions, c.loss_b.assumptions);
  o.result = report::to_json(c);
  std::ostringstream csv;
  csv << "better,improvement_pct,l_total_a_db,l_total_b_db\n"
      << to_string(c.better) << ',' << report::format_fixed(c.improvement_pct) << ','
      << report::format_fixed(c.loss_a.l_total_db) << ',' << report::format_fixed(c.loss_b.l_total_db)
      << '\n';
  o.csv_body = csv.str();
  emit(o, f, out);
  return kOk;
}

int cmd_resources(const Flags& f, const Opts& opts, const FileConfig& cfg, std::ostream& out) {
  // Accept either a bare topology or a full implementation name.
  Topology topology;
  try {
    topology = parse_topology(f.impl);
  } catch (const InvalidInput&) {
    topology = ImplSpec::parse(f.impl).topology;
  }
  const int n = resolve_n(f, opts, cfg);
  const auto rc = resource_counts(topology, n);

  Output o;
  o.command = "resources";
  o.config = Json{{"topology", std::string(to_string(topology))},
                  {"n", n},
                  {"ports", static_cast<std::int64_t>(n) * n}};
  o.result = report::to_json(rc);
  std::ostringstream csv;
  csv << "mr_crossbar_initial,mr_crossbar_reduced,mr_receiver,lasers,min_wavelengths\n"
      << rc.mr_crossbar_initial << ',' << rc.mr_crossbar_reduced << ',' << rc.mr_receiver << ','
      << rc.lasers << ',' << rc.min_wavelengths << '\n';
  o.csv_body = csv.str();
  emit(o, f, out);
  return kOk;
}

int cmd_assign(const Flags& f, const Opts& opts, const FileConfig& cfg, std::ostream& out) {
  const RingMode mode = parse_ring_mode(f.mode);
  int ports = 0;
  if (given(opts.ports) && given(opts.n)) throw InvalidInput("give one of --ports and --n");
  if (given(opts.ports)) ports = f.ports;
  else {
    const int n = resolve_n(f, opts, cfg);
    require_even_side(n);
    ports = n * n;
  }
  const auto a = mode == RingMode::C ? assign_c(ports) : assign_ccc(ports);
  const auto violations = validate(a);

  Output o;
  o.command = "assign";
  o.config = Json{{"mode", std::string(to_string(mode))}, {"ports", ports}};
  if (mode == RingMode::CCC) {
    o.assumptions.push_back(
        "m/2-hop pairs travel clockwise from the higher-indexed port (through the closing segment)");
  }
  Json result = report::to_json(a);
  result["valid"] = violations.empty();
  result["violations"] = report::to_json(violations);
  o.result = result;
  std::ostringstream csv;
  report::write_assignment_csv(csv, a);
  o.csv_body = csv.str();
  emit(o, f, out);
  return violations.empty() ? kOk : kModelError;
}

int cmd_sweep(const Flags& f, const Opts& opts, const FileConfig& cfg, std::ostream& out) {
  std::vector<ImplSpec> impls;
  for (const auto& name : f.impls) impls.push_back(ImplSpec::parse(name));
  if (impls.empty()) throw InvalidInput("--impl is required");
  const TechParams tech = resolve_tech(f, opts, cfg);
  const CrossingModel model = resolve_model(f, opts, cfg);
  SweepOptions so;
  so.strictness = f.lenient ? Strictness::Lenient : Strictness::Strict;
  so.parallel = f.parallel;

  SweepResult s;
  Json config;
  if (f.axis == "n") {
    if (f.n_values.empty()) throw InvalidInput("--n-values is required for an n sweep");
    double die = f.die_area;
    if (!given(opts.die)) {
      auto d = config_default<double>(cfg, "die_area_cm2");
      if (!d) throw InvalidInput("--die-area is required for an n sweep");
      die = *d;
    }
    s = sweep_n(die, f.n_values, impls, tech, model, so);
  } else if (f.axis == "pitch") {
    if (f.pitches_mm.empty()) throw InvalidInput("--pitches is required for a pitch sweep");
    std::vector<double> cm;
    for (double mm : f.pitches_mm) cm.push_back(mm / 10.0);
    s = sweep_pitch(resolve_n(f, opts, cfg), cm, impls, tech, model, so);
  } else {
    throw InvalidInput("--axis must be n or pitch");
  }

  Output o;
  o.command = "sweep";
  Json names = Json::array();
  for (const auto& impl : s.impls) names.push_back(impl.name());
  o.config = Json{{"axis", std::string(to_string(s.axis))},
                  {"implementations", names},
                  {"die_area_cm2", s.die_area_cm2 ? Json(*s.die_area_cm2) : Json(nullptr)},
                  {"n", s.n ? Json(*s.n) : Json(nullptr)},
                  {"tech", report::to_json(tech)},
                  {"crossing_model", report::to_json(model)},
                  {"strict", so.strictness == Strictness::Strict}};
  for (const auto& p : s.points) {
    for (const auto& l : p.losses) append_unique(o.assumptions, l.assumptions);
  }
  o.result = report::to_json(s);
  std::ostringstream csv;
  report::write_sweep_csv(csv, s);
  o.csv_body = csv.str();
  emit(o, f, out);
  return kOk;
}

int cmd_frontier(const Flags& f, const Opts& opts, const FileConfig& cfg, std::ostream& out) {
  const ImplSpec a = ImplSpec::parse(f.impl_a);
  const ImplSpec b = ImplSpec::parse(f.impl_b);
  const auto grid = resolve_grid(f, opts, cfg);
  const CrossingModel model = resolve_model(f, opts, cfg);
  double p_drop = 1.0;
  if (given(opts.pd)) p_drop = f.p_drop;
  else if (auto d = config_default<double>(cfg, "p_drop")) p_drop = *d;

  const auto fr = breakeven_frontier(a, b, grid.grid.n(), grid.grid.pitch_cm(), p_drop, model);
  const auto line = report::sample_line(fr, f.samples, f.pc_max, f.pp_max);

  // Technology points to place on either side of the line; each keeps its
  // own (p_crossing, p_propagation) at the frontier's p_drop.
  Json verdicts = Json::array();
  auto place = [&](const std::string& label, double pc, double pp) {
    const auto side = classify(fr, TechParams::make(pp, pc, p_drop));
    std::string winner = side == FrontierSide::OnLine ? "on-line"
                         : side == FrontierSide::A    ? a.name()
                                                      : b.name();
    verdicts.push_back(Json{{"label", label},
                            {"p_crossing", pc},
                            {"p_propagation", pp},
                            {"side", std::string(to_string(side))},
                            {"winner", winner}});
  };
  for (const auto& name : f.classify_presets) {
    auto t = lookup_preset(cfg, name);
    if (!t) throw InvalidInput("unknown preset '" + name + "'");
    place(*t->name, t->p_crossing, t->p_propagation);
  }
  for (const auto& s : f.points) {
    const auto [pc, pp] = parse_point(s);
    place(s, pc, pp);
  }

  Output o;
  o.command = "frontier";
  o.config = Json{{"impl_a", a.name()},
                  {"impl_b", b.name()},
                  {"grid", grid_config(grid)},
                  {"p_drop", p_drop},
                  {"crossing_model", report::to_json(model)},
                  {"samples", f.samples},
                  {"p_crossing_range", Json::array({0.0, f.pc_max})},
                  {"p_propagation_range", Json::array({0.0, f.pp_max})}};
  o.assumptions = fr.assumptions;
  if (fr.degenerate) o.assumptions.push_back("degenerate frontier: equal d_max, no line emitted");
  Json result = report::to_json(fr);
  Json pts = Json::array();
  for (const auto& s : line) pts.push_back(Json::array({s.p_crossing, s.p_propagation}));
  result["line"] = pts;
  result["classified"] = verdicts;
  o.result = result;

  std::ostringstream csv;
  if (f.format == "csv") {
    // JSON header block with the line coefficients ahead of the samples.
    report::write_csv_preamble(csv, Json{{"frontier", report::to_json(fr)}, {"classified", verdicts}});
  }
  report::write_frontier_csv(csv, line);
  o.csv_body = csv.str();
  emit(o, f, out);
  return kOk;
}

int cmd_verify(const Flags& f, std::ostream& out) {
  const auto r = oracle::cross_check(f.max_n);
  Output o;
  o.command = "verify";
  o.config = Json{{"max_n", f.max_n}};
  o.result = report::to_json(r);
  std::ostringstream csv;
  csv << "formula,n,expected,actual\n";
  for (const auto& m : r.mismatches) {
    csv << m.formula << ',' << m.n << ',' << m.expected << ',' << m.actual << '\n';
  }
  o.csv_body = csv.str();
  emit(o, f, out);
  return r.ok() ? kOk : kVerificationMismatch;
}

void add_output(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config_path, "JSON file with custom presets, crossing table, defaults");
  sub->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--out", f.out_path, "Write output to this file instead of stdout");
}

void add_grid(CLI::App* sub, Flags& f, Opts& o) {
  o.n = sub->add_option("--n", f.n, "Side of the N x N core array (even)");
  o.pitch = sub->add_option("--pitch", f.pitch_mm, "Interface pitch in mm");
  o.die = sub->add_option("--die-area", f.die_area, "Die area in cm^2");
}

void add_tech(CLI::App* sub, Flags& f, Opts& o) {
  o.preset = sub->add_option("--preset", f.preset, "Technology preset name");
  o.pc = sub->add_option("--p-crossing", f.p_crossing, "Loss per crossing (dB)");
  o.pp = sub->add_option("--p-propagation", f.p_propagation, "Propagation loss (dB/cm)");
  o.pd = sub->add_option("--p-drop", f.p_drop, "Loss per drop (dB)");
}

void add_model(CLI::App* sub, Flags& f, Opts& o) {
  o.model = sub->add_option("--crossing-model", f.crossing_model,
                            "Layout crossing model: calibrated-n8 (default), zero-extra, custom");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Worst-case loss analysis of on-chip optical crossbars", "oxbar"};
  app.require_subcommand(1);
  Flags f;
  Opts eval_o, cmp_o, res_o, assign_o, sweep_o, front_o;

  auto* presets = app.add_subcommand("presets", "List technology presets");
  add_output(presets, f);

  auto* evaluate = app.add_subcommand("evaluate", "Worst-case loss of one implementation");
  add_output(evaluate, f);
  evaluate->add_option("--topology,--impl", f.impl, "Implementation (e.g. lambda-router-b) or topology")
      ->required();
  eval_o.layout = evaluate->add_option("--layout", f.layout, "Layout a|b when --topology names a topology");
  add_grid(evaluate, f, eval_o);
  add_tech(evaluate, f, eval_o);
  add_model(evaluate, f, eval_o);

  auto* cmp = app.add_subcommand("compare", "Compare two implementations");
  add_output(cmp, f);
  cmp->add_option("--a", f.impl_a, "First implementation")->required();
  cmp->add_option("--b", f.impl_b, "Second implementation")->required();
  add_grid(cmp, f, cmp_o);
  add_tech(cmp, f, cmp_o);
  add_model(cmp, f, cmp_o);

  auto* resources = app.add_subcommand("resources", "Device counts of a topology");
  add_output(resources, f);
  resources->add_option("--topology", f.impl, "Topology")->required();
  res_o.n = resources->add_option("--n", f.n, "Side of the N x N core array (even)");

  auto* assign = app.add_subcommand("assign", "Ring wavelength assignment");
  add_output(assign, f);
  assign->add_option("--mode", f.mode, "c or ccc")->check(CLI::IsMember({"c", "ccc", "C", "CCC"}));
  assign_o.ports = assign->add_option("--ports", f.ports, "Number of ring ports m");
  assign_o.n = assign->add_option("--n", f.n, "Core array side; ports = n^2");

  auto* sweep = app.add_subcommand("sweep", "Loss sweep over n or pitch");
  add_output(sweep, f);
  sweep->add_option("--axis", f.axis, "n or pitch")->check(CLI::IsMember({"n", "pitch"}));
  sweep->add_option("--impl", f.impls, "Implementations (repeatable or comma separated)")
      ->delimiter(',')
      ->required();
  sweep->add_option("--n-values", f.n_values, "n values for an n sweep")->delimiter(',');
  sweep->add_option("--pitches", f.pitches_mm, "Pitches in mm for a pitch sweep")->delimiter(',');
  add_grid(sweep, f, sweep_o);
  add_tech(sweep, f, sweep_o);
  add_model(sweep, f, sweep_o);
  sweep->add_flag("--lenient", f.lenient, "Fall back to zero-extra at uncalibrated points");
  sweep->add_flag("--parallel", f.parallel, "Evaluate sweep points concurrently");

  auto* frontier = app.add_subcommand("frontier", "Equal-loss line between two implementations");
  add_output(frontier, f);
  frontier->add_option("--a", f.impl_a, "First implementation")->required();
  frontier->add_option("--b", f.impl_b, "Second implementation")->required();
  add_grid(frontier, f, front_o);
  front_o.pd = frontier->add_option("--p-drop", f.p_drop, "Drop loss pinned for the plane (dB, default 1)");
  add_model(frontier, f, front_o);
  frontier->add_option("--samples", f.samples, "Line samples over the p_crossing range")
      ->check(CLI::Range(2, 100000));
  frontier->add_option("--pc-max", f.pc_max, "Upper end of the p_crossing range (dB)");
  frontier->add_option("--pp-max", f.pp_max, "Upper end of the p_propagation range (dB/cm)");
  frontier->add_option("--point", f.points, "Classify a p_crossing,p_propagation point");
  frontier->add_option("--classify-preset", f.classify_presets, "Classify a preset's point");

  auto* verify = app.add_subcommand("verify", "Cross-check closed forms against brute force");
  add_output(verify, f);
  verify->add_option("--max-n", f.max_n, "Largest even n to check (<= 8)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidArguments;
  }

  try {
    const FileConfig cfg = load_config(f.config_path);
    if (presets->parsed()) return cmd_presets(f, cfg, out);
    if (evaluate->parsed()) return cmd_evaluate(f, eval_o, cfg, out);
    if (cmp->parsed()) return cmd_compare(f, cmp_o, cfg, out);
    if (resources->parsed()) return cmd_resources(f, res_o, cfg, out);
    if (assign->parsed()) return cmd_assign(f, assign_o, cfg, out);
    if (sweep->parsed()) return cmd_sweep(f, sweep_o, cfg, out);
    if (frontier->parsed()) return cmd_frontier(f, front_o, cfg, out);
    if (verify->parsed()) return cmd_verify(f, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidArguments;
  } catch (const ModelError& e) {
    err << "model error: " << e.what() << '\n';
    return kModelError;
  }
  return kInvalidArguments;
}

}  // namespace oxbar::cli
