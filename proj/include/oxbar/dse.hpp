#ifndef OXBAR_DSE_HPP
#define OXBAR_DSE_HPP

// Design-space exploration: loss sweeps over n or pitch, and the analytic
// equal-loss line between two implementations in the
// (p_crossing, p_propagation) plane.

#include <optional>
#include <string>
#include <vector>

#include "oxbar/catalog.hpp"
#include "oxbar/loss.hpp"
#include "oxbar/types.hpp"

namespace oxbar {

enum class SweepAxis { N, Pitch };
std::string_view to_string(SweepAxis a) noexcept;

/// Strict: an uncalibrated crossing point is an error. Lenient: that point
/// falls back to zero extra crossings and records an assumption.
enum class Strictness { Strict, Lenient };

struct SweepOptions {
  Strictness strictness = Strictness::Strict;
  bool parallel = false;
};

struct SweepPoint {
  double axis_value = 0.0;  // n, or pitch in cm
  int n = 0;
  double pitch_cm = 0.0;
  /// One per implementation, in SweepResult::impls order.
  std::vector<LossBreakdown> losses;
};

struct SweepResult {
  SweepAxis axis = SweepAxis::N;
  std::vector<ImplSpec> impls;
  std::vector<SweepPoint> points;
  std::optional<double> die_area_cm2;  // n sweeps
  std::optional<int> n;                // pitch sweeps
  TechParams tech;
  CrossingModel model = CrossingModel::calibrated_n8();
  Strictness strictness = Strictness::Strict;
};

SweepResult sweep_n(double die_area_cm2, std::vector<int> n_values, std::vector<ImplSpec> impls,
                    const TechParams& tech, const CrossingModel& model,
                    const SweepOptions& options = {});

SweepResult sweep_pitch(int n, std::vector<double> pitch_values_cm, std::vector<ImplSpec> impls,
                        const TechParams& tech, const CrossingModel& model,
                        const SweepOptions& options = {});

enum class FrontierSide { A, B, OnLine };
std::string_view to_string(FrontierSide s) noexcept;

/// Locus L_a == L_b at fixed (n, pitch, p_drop):
///   p_propagation = slope * p_crossing + intercept.
/// Since L_a - L_b = dd * p_prop + dc * p_cross + dr * p_drop with
/// dd = d_max_a - d_max_b (and likewise dc, dr), a positive dd means
/// implementation a wins below the line.
struct Frontier {
  ImplSpec impl_a;
  ImplSpec impl_b;
  int n = 0;
  double pitch_cm = 0.0;
  double p_drop = 0.0;
  double delta_d_max_cm = 0.0;
  int delta_n_crossing = 0;
  int delta_n_drop = 0;
  double slope = 0.0;
  double intercept = 0.0;
  /// Side that wins strictly below the line; meaningless when degenerate.
  FrontierSide below = FrontierSide::A;
  /// No line exists in slope/intercept form (dd == 0).
  bool degenerate = false;
  std::vector<std::string> assumptions;

  /// Line value at p_crossing.
  double p_propagation_at(double p_crossing) const noexcept { return slope * p_crossing + intercept; }
};

/// Points whose loss difference is within this are on the line.
inline constexpr double kFrontierToleranceDb = 1e-9;

Frontier breakeven_frontier(const ImplSpec& a, const ImplSpec& b, int n, double pitch_cm,
                            double p_drop,
                            const CrossingModel& model = CrossingModel::calibrated_n8());

/// Side of the frontier holding the technology point. Throws for a
/// degenerate frontier or when tech.p_drop differs from the frontier's.
FrontierSide classify(const Frontier& frontier, const TechParams& tech);

}  // namespace oxbar

#endif  // OXBAR_DSE_HPP
