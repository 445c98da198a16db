#ifndef OXBAR_LOSS_HPP
#define OXBAR_LOSS_HPP

#include <string>
#include <vector>

#include "oxbar/catalog.hpp"
#include "oxbar/types.hpp"

namespace oxbar {

/// Worst-case path loss split into its waveguide, crossing and drop parts.
/// l_total_db is summed in that order.
struct LossBreakdown {
  double d_max_cm = 0.0;
  int n_crossing = 0;
  int n_drop = 0;
  double l_waveguide_db = 0.0;
  double l_crossing_db = 0.0;
  double l_drop_db = 0.0;
  double l_total_db = 0.0;
  std::vector<std::string> assumptions;

  friend bool operator==(const LossBreakdown&, const LossBreakdown&) = default;
};

LossBreakdown worst_case_loss(const ImplSpec& impl, const GridSpec& grid, const TechParams& tech,
                              const CrossingModel& model = CrossingModel::calibrated_n8());

enum class Winner { A, B, Tie };

std::string_view to_string(Winner w) noexcept;

struct Comparison {
  LossBreakdown loss_a;
  LossBreakdown loss_b;
  Winner better = Winner::Tie;
  /// 100 * (worse - better) / worse; 0 on a tie.
  double improvement_pct = 0.0;
};

/// Losses closer than this are reported as a tie.
inline constexpr double kTieToleranceDb = 1e-12;

Comparison compare(const ImplSpec& a, const ImplSpec& b, const GridSpec& grid,
                   const TechParams& tech,
                   const CrossingModel& model = CrossingModel::calibrated_n8());

}  // namespace oxbar

#endif  // OXBAR_LOSS_HPP
