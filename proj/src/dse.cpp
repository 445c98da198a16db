#include "oxbar/dse.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>

namespace oxbar {

namespace {

LossBreakdown evaluate_point(const ImplSpec& impl, const GridSpec& grid, const TechParams& tech,
                             const CrossingModel& model, Strictness strictness) {
  try {
    return worst_case_loss(impl, grid, tech, model);
  } catch (const ModelError& e) {
    if (strictness == Strictness::Strict || e.kind() != ModelError::Kind::UncalibratedPoint) throw;
    auto loss = worst_case_loss(impl, grid, tech, CrossingModel::zero_extra());
    loss.assumptions.insert(loss.assumptions.begin(),
                            std::string("lenient sweep: ") + e.what() + "; using zero-extra");
    return loss;
  }
}

void require_impls(const std::vector<ImplSpec>& impls) {
  if (impls.empty()) throw InvalidInput("a sweep needs at least one implementation");
  for (const auto& impl : impls) impl.require_valid();
}

template <typename T>
void sort_axis(std::vector<T>& values) {
  if (values.empty()) throw InvalidInput("a sweep needs at least one axis value");
  std::sort(values.begin(), values.end());
  if (std::adjacent_find(values.begin(), values.end()) != values.end()) {
    throw InvalidInput("sweep axis values must be distinct");
  }
}

// Evaluates make_point(i) for every index; results are stored by index so
// the output order never depends on scheduling.
std::vector<SweepPoint> run_points(std::size_t count, bool parallel,
                                   const std::function<SweepPoint(std::size_t)>& make_point) {
  std::vector<SweepPoint> points(count);
  if (!parallel) {
    for (std::size_t i = 0; i < count; ++i) points[i] = make_point(i);
    return points;
  }
  std::vector<std::future<SweepPoint>> futures;
  futures.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    futures.push_back(std::async(std::launch::async, make_point, i));
  }
  for (std::size_t i = 0; i < count; ++i) points[i] = futures[i].get();
  return points;
}

}  // namespace

std::string_view to_string(SweepAxis a) noexcept { return a == SweepAxis::N ? "n" : "pitch"; }

SweepResult sweep_n(double die_area_cm2, std::vector<int> n_values, std::vector<ImplSpec> impls,
                    const TechParams& tech, const CrossingModel& model,
                    const SweepOptions& options) {
  if (!(die_area_cm2 > 0.0) || !std::isfinite(die_area_cm2)) {
    throw InvalidInput("die area must be positive");
  }
  require_impls(impls);
  for (int n : n_values) require_even_side(n);
  sort_axis(n_values);

  SweepResult result;
  result.axis = SweepAxis::N;
  result.die_area_cm2 = die_area_cm2;
  result.tech = tech;
  result.model = model;
  result.strictness = options.strictness;
  result.points = run_points(n_values.size(), options.parallel, [&](std::size_t i) {
    const GridSpec grid = GridSpec::from_die_area(die_area_cm2, n_values[i]);
    SweepPoint p;
    p.axis_value = n_values[i];
    p.n = grid.n();
    p.pitch_cm = grid.pitch_cm();
    for (const auto& impl : impls) {
      p.losses.push_back(evaluate_point(impl, grid, tech, model, options.strictness));
    }
    return p;
  });
  result.impls = std::move(impls);
  return result;
}

SweepResult sweep_pitch(int n, std::vector<double> pitch_values_cm, std::vector<ImplSpec> impls,
                        const TechParams& tech, const CrossingModel& model,
                        const SweepOptions& options) {
  require_even_side(n);
  require_impls(impls);
  for (double p : pitch_values_cm) {
    if (!(p > 0.0) || !std::isfinite(p)) throw InvalidInput("pitch values must be positive");
  }
  sort_axis(pitch_values_cm);

  SweepResult result;
  result.axis = SweepAxis::Pitch;
  result.n = n;
  result.tech = tech;
  result.model = model;
  result.strictness = options.strictness;
  result.points = run_points(pitch_values_cm.size(), options.parallel, [&](std::size_t i) {
    const GridSpec grid(n, pitch_values_cm[i]);
    SweepPoint p;
    p.axis_value = grid.pitch_cm();
    p.n = n;
    p.pitch_cm = grid.pitch_cm();
    for (const auto& impl : impls) {
      p.losses.push_back(evaluate_point(impl, grid, tech, model, options.strictness));
    }
    return p;
  });
  result.impls = std::move(impls);
  return result;
}

std::string_view to_string(FrontierSide s) noexcept {
  switch (s) {
    case FrontierSide::A: return "a";
    case FrontierSide::B: return "b";
    case FrontierSide::OnLine: return "on-line";
  }
  return "?";
}

Frontier breakeven_frontier(const ImplSpec& a, const ImplSpec& b, int n, double pitch_cm,
                            double p_drop, const CrossingModel& model) {
  a.require_valid();
  b.require_valid();
  if (!std::isfinite(p_drop) || p_drop < 0.0) throw InvalidInput("p_drop must be non-negative");
  const GridSpec grid(n, pitch_cm);

  auto ca = crossing_breakdown(a, grid, model);
  auto cb = crossing_breakdown(b, grid, model);

  Frontier f;
  f.impl_a = a;
  f.impl_b = b;
  f.n = n;
  f.pitch_cm = grid.pitch_cm();
  f.p_drop = p_drop;
  f.delta_d_max_cm = d_max(a, grid) - d_max(b, grid);
  f.delta_n_crossing = ca.total() - cb.total();
  f.delta_n_drop = n_drop(a) - n_drop(b);
  f.assumptions = std::move(ca.assumptions);
  for (auto& s : cb.assumptions) {
    if (std::find(f.assumptions.begin(), f.assumptions.end(), s) == f.assumptions.end()) {
      f.assumptions.push_back(std::move(s));
    }
  }

  if (f.delta_d_max_cm == 0.0) {
    f.degenerate = true;
    return f;
  }
  f.slope = -static_cast<double>(f.delta_n_crossing) / f.delta_d_max_cm;
  f.intercept = -static_cast<double>(f.delta_n_drop) * p_drop / f.delta_d_max_cm;
  if (f.slope == 0.0) f.slope = 0.0;  // drop the sign of -0
  if (f.intercept == 0.0) f.intercept = 0.0;
  f.below = f.delta_d_max_cm > 0.0 ? FrontierSide::A : FrontierSide::B;
  return f;
}

FrontierSide classify(const Frontier& frontier, const TechParams& tech) {
  if (frontier.degenerate) {
    throw ModelError(ModelError::Kind::DegenerateFrontier,
                     "frontier " + frontier.impl_a.name() + " vs " + frontier.impl_b.name() +
                         " is degenerate");
  }
  if (std::abs(tech.p_drop - frontier.p_drop) > 1e-12) {
    throw ModelError(ModelError::Kind::ContextMismatch,
                     "technology p_drop does not match the frontier's p_drop");
  }
  const double residual = frontier.delta_d_max_cm * tech.p_propagation +
                          frontier.delta_n_crossing * tech.p_crossing +
                          frontier.delta_n_drop * tech.p_drop;
  if (std::abs(residual) <= kFrontierToleranceDb) return FrontierSide::OnLine;
  return residual < 0.0 ? FrontierSide::A : FrontierSide::B;
}

}  // namespace oxbar
