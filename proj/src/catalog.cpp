#include "oxbar/catalog.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>

namespace oxbar {

namespace {

const std::array<TechParams, 4> kPresets = {{
    {1.0, 0.05, 1.5, "pan2010"},
    {1.0, 0.12, 1.0, "kirman2010"},
    {0.5, 0.05, 0.5, "biberman2011"},
    {0.1, 0.2, 1.5, "koka2012"},
}};

const std::array<ImplSpec, 8> kImpls = {{
    {Topology::Matrix, Layout::A},
    {Topology::Matrix, Layout::B},
    {Topology::LambdaRouter, Layout::A},
    {Topology::LambdaRouter, Layout::B},
    {Topology::Snake, Layout::A},
    {Topology::Snake, Layout::B},
    {Topology::OrnocC, Layout::Serpentine},
    {Topology::OrnocCCC, Layout::Serpentine},
}};

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](unsigned char x, unsigned char y) {
           return std::tolower(x) == std::tolower(y);
         });
}

std::int64_t ports_of(int n) { return static_cast<std::int64_t>(n) * n; }

std::string point_name(Topology topology, int n) {
  return std::string(to_string(topology)) + "-b at n=" + std::to_string(n);
}

}  // namespace

CrossingModel CrossingModel::custom(Table table) {
  for (const auto& [key, extra] : table) {
    if (extra < 0) throw InvalidInput("layout crossing counts must be non-negative");
    require_even_side(key.second);
  }
  return CrossingModel(Mode::CustomTable, std::move(table));
}

CrossingModel::Extra CrossingModel::extra(Topology topology, Layout layout, int n) const {
  if (layout != Layout::B) return {};
  switch (mode_) {
    case Mode::ZeroExtra:
      return {0, "zero-extra crossing model: layout B interface crossings not counted for " +
                     point_name(topology, n)};
    case Mode::CalibratedN8: {
      if (n != 8) {
        throw ModelError(ModelError::Kind::UncalibratedPoint,
                         "uncalibrated point: calibrated-n8 crossing model has no value for " +
                             point_name(topology, n));
      }
      Extra e{kCalibratedExtraN8, std::nullopt};
      if (topology != Topology::LambdaRouter) {
        e.assumption = "calibrated-n8 crossing model: +51 layout B crossings assumed for " +
                       point_name(topology, n) + " (calibrated on lambda-router only)";
      }
      return e;
    }
    case Mode::CustomTable: {
      const auto it = table_.find({topology, n});
      if (it == table_.end()) {
        throw ModelError(ModelError::Kind::UncalibratedPoint,
                         "uncalibrated point: custom crossing table has no entry for " +
                             point_name(topology, n));
      }
      return {it->second, std::nullopt};
    }
  }
  return {};
}

std::string_view to_string(CrossingModel::Mode mode) noexcept {
  switch (mode) {
    case CrossingModel::Mode::ZeroExtra: return "zero-extra";
    case CrossingModel::Mode::CalibratedN8: return "calibrated-n8";
    case CrossingModel::Mode::CustomTable: return "custom";
  }
  return "?";
}

CrossingModel::Mode parse_crossing_mode(std::string_view name) {
  if (iequals(name, "zero-extra") || iequals(name, "zero")) return CrossingModel::Mode::ZeroExtra;
  if (iequals(name, "calibrated-n8") || iequals(name, "calibrated"))
    return CrossingModel::Mode::CalibratedN8;
  if (iequals(name, "custom")) return CrossingModel::Mode::CustomTable;
  throw InvalidInput("unknown crossing model '" + std::string(name) + "'");
}

double pitch_from_die(double die_area_cm2, int n) {
  return GridSpec::from_die_area(die_area_cm2, n).pitch_cm();
}

std::int64_t d_max_units(const ImplSpec& impl, int n) {
  impl.require_valid();
  require_even_side(n);
  const std::int64_t m = ports_of(n);
  switch (impl.topology) {
    case Topology::OrnocC:
      return (m - 2) + (n - 1);
    case Topology::OrnocCCC:
      return (m / 2 - 1) + (n - 1);
    default:
      break;
  }
  if (impl.layout == Layout::B) return 2 * (n - 1);
  if (n == 2) return 3;
  return 4 * ((n - 1) / 2) + 2 * n;
}

double d_max(const ImplSpec& impl, const GridSpec& grid) {
  return static_cast<double>(d_max_units(impl, grid.n())) * grid.pitch_cm();
}

std::int64_t network_crossings(Topology topology, int n) {
  require_even_side(n);
  const std::int64_t m = ports_of(n);
  switch (topology) {
    case Topology::Matrix: return 2 * m - 3;
    case Topology::LambdaRouter: return m - 1;
    case Topology::Snake: return 2 * m - 5;
    case Topology::OrnocC:
    case Topology::OrnocCCC: return 0;
  }
  return 0;
}

CrossingCount crossing_breakdown(const ImplSpec& impl, const GridSpec& grid,
                                 const CrossingModel& model) {
  impl.require_valid();
  CrossingCount count;
  count.network = static_cast<int>(network_crossings(impl.topology, grid.n()));
  if (is_ring(impl.topology)) return count;
  auto extra = model.extra(impl.topology, impl.layout, grid.n());
  count.layout_extra = extra.count;
  if (extra.assumption) count.assumptions.push_back(std::move(*extra.assumption));
  return count;
}

int n_crossing(const ImplSpec& impl, const GridSpec& grid, const CrossingModel& model) {
  return crossing_breakdown(impl, grid, model).total();
}

int n_drop(const ImplSpec& impl) {
  impl.require_valid();
  // Rings drop once at the receiver; the others also drop inside the network.
  return is_ring(impl.topology) ? 1 : 2;
}

ResourceCounts resource_counts(Topology topology, int n) {
  require_even_side(n);
  const std::int64_t m = ports_of(n);
  ResourceCounts rc;
  rc.mr_receiver = (m - 1) * m;
  rc.lasers = (m - 1) * m;
  switch (topology) {
    case Topology::Matrix:
      rc.mr_crossbar_initial = m * m;
      rc.mr_crossbar_reduced = (m - 1) * m;
      rc.min_wavelengths = m - 1;
      break;
    case Topology::LambdaRouter:
    case Topology::Snake:
      rc.mr_crossbar_initial = (m - 1) * m;
      rc.mr_crossbar_reduced = (m - 2) * m;
      rc.min_wavelengths = m;
      break;
    case Topology::OrnocC:
      rc.min_wavelengths = m * (m - 1) / 2;
      break;
    case Topology::OrnocCCC:
      rc.min_wavelengths = m * (m - 1) / 4;
      break;
  }
  return rc;
}

std::span<const TechParams> builtin_presets() { return kPresets; }

std::optional<TechParams> find_preset(std::string_view name) {
  for (const auto& p : kPresets) {
    if (iequals(*p.name, name)) return p;
  }
  return std::nullopt;
}

std::span<const ImplSpec> all_impls() { return kImpls; }

}  // namespace oxbar
