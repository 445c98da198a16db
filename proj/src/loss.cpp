#include "oxbar/loss.hpp"

#include <algorithm>
#include <cmath>

namespace oxbar {

LossBreakdown worst_case_loss(const ImplSpec& impl, const GridSpec& grid, const TechParams& tech,
                              const CrossingModel& model) {
  impl.require_valid();
  auto crossings = crossing_breakdown(impl, grid, model);

  LossBreakdown out;
  out.d_max_cm = d_max(impl, grid);
  out.n_crossing = crossings.total();
  out.n_drop = n_drop(impl);
  out.l_waveguide_db = tech.p_propagation * out.d_max_cm;
  out.l_crossing_db = tech.p_crossing * out.n_crossing;
  out.l_drop_db = tech.p_drop * out.n_drop;
  out.l_total_db = (out.l_waveguide_db + out.l_crossing_db) + out.l_drop_db;
  out.assumptions = std::move(crossings.assumptions);
  return out;
}

std::string_view to_string(Winner w) noexcept {
  switch (w) {
    case Winner::A: return "a";
    case Winner::B: return "b";
    case Winner::Tie: return "tie";
  }
  return "?";
}

Comparison compare(const ImplSpec& a, const ImplSpec& b, const GridSpec& grid,
                   const TechParams& tech, const CrossingModel& model) {
  Comparison c;
  c.loss_a = worst_case_loss(a, grid, tech, model);
  c.loss_b = worst_case_loss(b, grid, tech, model);
  const double la = c.loss_a.l_total_db;
  const double lb = c.loss_b.l_total_db;
  if (std::abs(la - lb) <= kTieToleranceDb) {
    c.better = Winner::Tie;
    c.improvement_pct = 0.0;
    return c;
  }
  c.better = la < lb ? Winner::A : Winner::B;
  const double worse = std::max(la, lb);
  const double better = std::min(la, lb);
  c.improvement_pct = 100.0 * (worse - better) / worse;
  return c;
}

}  // namespace oxbar
