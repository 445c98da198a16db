#ifndef OXBAR_CATALOG_HPP
#define OXBAR_CATALOG_HPP

// Closed-form structural metrics of the five crossbar implementations:
// worst-case distance, crossing and drop counts, device counts, and the
// published technology presets.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oxbar/types.hpp"

namespace oxbar {

/// Extra waveguide crossings introduced by the interface routing of a
/// layout. The closed-form crossing counts cover the network itself
/// (layout A routes interfaces without any crossing); layout B trades
/// distance for crossings, and only one calibration point is known.
class CrossingModel {
 public:
  enum class Mode { ZeroExtra, CalibratedN8, CustomTable };
  using Table = std::map<std::pair<Topology, int>, int>;

  /// Extra crossings observed for layout B at n = 8.
  static constexpr int kCalibratedExtraN8 = 51;

  static CrossingModel zero_extra() { return CrossingModel(Mode::ZeroExtra, {}); }
  static CrossingModel calibrated_n8() { return CrossingModel(Mode::CalibratedN8, {}); }
  /// Entries are keyed by (topology, n) and apply to layout B.
  static CrossingModel custom(Table table);

  Mode mode() const noexcept { return mode_; }
  const Table& table() const noexcept { return table_; }

  struct Extra {
    int count = 0;
    std::optional<std::string> assumption;
  };

  /// Throws ModelError(UncalibratedPoint) when the model has no value for
  /// a layout B query.
  Extra extra(Topology topology, Layout layout, int n) const;

  friend bool operator==(const CrossingModel&, const CrossingModel&) = default;

 private:
  CrossingModel(Mode mode, Table table) : mode_(mode), table_(std::move(table)) {}

  Mode mode_;
  Table table_;
};

std::string_view to_string(CrossingModel::Mode mode) noexcept;
CrossingModel::Mode parse_crossing_mode(std::string_view name);

struct ResourceCounts {
  std::int64_t mr_crossbar_initial = 0;
  std::int64_t mr_crossbar_reduced = 0;
  std::int64_t mr_receiver = 0;
  std::int64_t lasers = 0;
  std::int64_t min_wavelengths = 0;

  friend bool operator==(const ResourceCounts&, const ResourceCounts&) = default;
};

struct CrossingCount {
  int network = 0;
  int layout_extra = 0;
  std::vector<std::string> assumptions;

  int total() const noexcept { return network + layout_extra; }
};

double pitch_from_die(double die_area_cm2, int n);

/// Worst-case source to destination distance as a multiple of the pitch.
std::int64_t d_max_units(const ImplSpec& impl, int n);
/// Worst-case distance in cm.
double d_max(const ImplSpec& impl, const GridSpec& grid);

/// Crossings of the network alone (layout A / ring).
std::int64_t network_crossings(Topology topology, int n);
CrossingCount crossing_breakdown(const ImplSpec& impl, const GridSpec& grid,
                                 const CrossingModel& model);
int n_crossing(const ImplSpec& impl, const GridSpec& grid, const CrossingModel& model);

int n_drop(const ImplSpec& impl);

ResourceCounts resource_counts(Topology topology, int n);

/// The four published technology presets, in publication order.
std::span<const TechParams> builtin_presets();
/// Case-insensitive lookup among builtin_presets().
std::optional<TechParams> find_preset(std::string_view name);

/// The eight valid implementations in a fixed order.
std::span<const ImplSpec> all_impls();

}  // namespace oxbar

#endif  // OXBAR_CATALOG_HPP
