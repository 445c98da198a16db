#include <doctest.h>

#include <cmath>
#include <random>

#include "oxbar/dse.hpp"

using namespace oxbar;

namespace {

const ImplSpec kLambdaA{Topology::LambdaRouter, Layout::A};
const ImplSpec kLambdaB{Topology::LambdaRouter, Layout::B};
const ImplSpec kSnakeB{Topology::Snake, Layout::B};
const ImplSpec kMatrixA{Topology::Matrix, Layout::A};
const ImplSpec kOrnocC{Topology::OrnocC, Layout::Serpentine};
const ImplSpec kOrnocCCC{Topology::OrnocCCC, Layout::Serpentine};

const TechParams& biberman() {
  static const TechParams t = *find_preset("biberman2011");
  return t;
}

}  // namespace

TEST_CASE("n sweep") {
  auto s = sweep_n(4.0, {8}, {kOrnocCCC, kLambdaB}, biberman(), CrossingModel::calibrated_n8());
  REQUIRE(s.points.size() == 1);
  CHECK(s.points[0].pitch_cm == doctest::Approx(0.25));
  CHECK(s.points[0].losses[0].l_total_db == doctest::Approx(5.25));
  CHECK(s.points[0].losses[1].l_total_db == doctest::Approx(8.45));

  s = sweep_n(4.0, {8, 4, 2, 6}, {kOrnocC}, biberman(), CrossingModel::zero_extra());
  REQUIRE(s.points.size() == 4);
  for (std::size_t i = 1; i < s.points.size(); ++i) {
    CHECK(s.points[i].axis_value > s.points[i - 1].axis_value);
    CHECK(s.points[i].losses[0].l_total_db > s.points[i - 1].losses[0].l_total_db);
  }
  CHECK(s.points.back().losses[0].l_total_db == doctest::Approx(9.125));

  s = sweep_n(4.0, {2}, {kMatrixA}, TechParams::make(0, 0, 0), CrossingModel::calibrated_n8());
  CHECK(s.points[0].losses[0].l_total_db == 0.0);
}

TEST_CASE("n sweep strictness") {
  CHECK_THROWS_AS(sweep_n(4.0, {2, 4, 6, 8}, {kLambdaB}, biberman(), CrossingModel::calibrated_n8()),
                  ModelError);
  SweepOptions lenient;
  lenient.strictness = Strictness::Lenient;
  const auto s = sweep_n(4.0, {2, 4, 6, 8}, {kLambdaB}, biberman(), CrossingModel::calibrated_n8(),
                         lenient);
  for (const auto& p : s.points) {
    CAPTURE(p.n);
    if (p.n == 8) {
      CHECK(p.losses[0].n_crossing == 114);
      CHECK(p.losses[0].assumptions.empty());
    } else {
      CHECK(p.losses[0].n_crossing == p.n * p.n - 1);
      CHECK_FALSE(p.losses[0].assumptions.empty());
      CHECK(p.losses[0].assumptions[0].find("lenient") != std::string::npos);
    }
  }
  CHECK_THROWS_AS(sweep_n(4.0, {3}, {kLambdaA}, biberman(), CrossingModel::zero_extra()), InvalidInput);
  CHECK_THROWS_AS(sweep_n(4.0, {2, 2}, {kLambdaA}, biberman(), CrossingModel::zero_extra()),
                  InvalidInput);
  CHECK_THROWS_AS(sweep_n(0.0, {2}, {kLambdaA}, biberman(), CrossingModel::zero_extra()), InvalidInput);
  CHECK_THROWS_AS(sweep_n(4.0, {2}, {}, biberman(), CrossingModel::zero_extra()), InvalidInput);
}

TEST_CASE("pitch sweep") {
  const std::vector<double> pitches{0.0125, 0.025, 0.05, 0.1, 0.2};
  auto s = sweep_pitch(8, pitches, {kOrnocCCC, kSnakeB}, biberman(), CrossingModel::calibrated_n8());
  REQUIRE(s.points.size() == 5);
  for (const auto& p : s.points) CHECK(p.losses[0].l_total_db < p.losses[1].l_total_db);

  // 0.5 * 38 * 0.2 + 0.5
  s = sweep_pitch(8, {0.2}, {kOrnocCCC}, biberman(), CrossingModel::calibrated_n8());
  CHECK(s.points[0].losses[0].l_total_db == doctest::Approx(4.3));

  s = sweep_pitch(8, {0.07, 0.14}, {kLambdaB}, biberman(), CrossingModel::calibrated_n8());
  CHECK(s.points[1].losses[0].l_waveguide_db == 2 * s.points[0].losses[0].l_waveguide_db);

  CHECK_THROWS_AS(sweep_pitch(8, {-0.1}, {kLambdaB}, biberman(), CrossingModel::calibrated_n8()),
                  InvalidInput);
}

TEST_CASE("sweeps are monotone in pitch and independent of scheduling") {
  std::vector<ImplSpec> impls(all_impls().begin(), all_impls().end());
  std::vector<double> pitches;
  for (int k = 1; k <= 25; ++k) pitches.push_back(0.01 * k);
  const auto serial = sweep_pitch(8, pitches, impls, biberman(), CrossingModel::calibrated_n8());
  SweepOptions par;
  par.parallel = true;
  std::vector<double> shuffled(pitches.rbegin(), pitches.rend());
  const auto parallel = sweep_pitch(8, shuffled, impls, biberman(), CrossingModel::calibrated_n8(), par);
  REQUIRE(serial.points.size() == parallel.points.size());
  for (std::size_t i = 0; i < serial.points.size(); ++i) {
    CHECK(serial.points[i].axis_value == parallel.points[i].axis_value);
    CHECK(serial.points[i].losses == parallel.points[i].losses);
    if (i > 0) {
      for (std::size_t k = 0; k < impls.size(); ++k) {
        CHECK(serial.points[i].losses[k].l_total_db >= serial.points[i - 1].losses[k].l_total_db);
      }
    }
  }
}

TEST_CASE("lambda-router layout frontier") {
  const auto f = breakeven_frontier(kLambdaA, kLambdaB, 8, 0.25, 1.0, CrossingModel::calibrated_n8());
  CHECK_FALSE(f.degenerate);
  // d_max 7 vs 3.5 cm, crossings 63 vs 114
  CHECK(f.delta_d_max_cm == doctest::Approx(3.5));
  CHECK(f.delta_n_crossing == -51);
  CHECK(f.delta_n_drop == 0);
  CHECK(f.slope == doctest::Approx(51.0 / 3.5));
  CHECK(f.slope == doctest::Approx(14.571).epsilon(1e-4));
  CHECK(f.intercept == 0.0);
  CHECK(f.below == FrontierSide::A);

  const double pd = 1.0;
  CHECK(classify(f, TechParams::make(0.5, 0.05, pd)) == FrontierSide::A);   // Biberman point
  CHECK(classify(f, TechParams::make(1.0, 0.05, pd)) == FrontierSide::B);   // Pan point
  CHECK(classify(f, TechParams::make(0.3, 0.0, pd)) == FrontierSide::B);    // no crossing penalty
  CHECK(classify(f, TechParams::make(f.p_propagation_at(0.1), 0.1, pd)) == FrontierSide::OnLine);

  CHECK_THROWS_AS(classify(f, TechParams::make(0.5, 0.05, 0.5)), ModelError);
}

TEST_CASE("snake versus bidirectional ring frontier") {
  const auto f = breakeven_frontier(kSnakeB, kOrnocCCC, 8, 0.25, 1.0, CrossingModel::zero_extra());
  CHECK(f.delta_d_max_cm == doctest::Approx(-6.0));
  CHECK(f.delta_n_crossing == 123);
  CHECK(f.delta_n_drop == 1);
  CHECK(f.slope == doctest::Approx(123.0 / 6.0));
  CHECK(f.intercept == doctest::Approx(1.0 / 6.0));
  CHECK(f.below == FrontierSide::B);
  // 0.5*3.5 + 123*0.05 + 2 = 9.9 against 0.5*9.5 + 1 = 5.75
  const auto t = TechParams::make(0.5, 0.05, 1.0);
  CHECK(classify(f, t) == FrontierSide::B);
  CHECK(worst_case_loss(kOrnocCCC, GridSpec(8, 0.25), t).l_total_db <
        worst_case_loss(kSnakeB, GridSpec(8, 0.25), t, CrossingModel::zero_extra()).l_total_db);
}

TEST_CASE("degenerate frontier") {
  const auto f = breakeven_frontier(kLambdaB, kLambdaB, 8, 0.25, 1.0, CrossingModel::calibrated_n8());
  CHECK(f.degenerate);
  CHECK_THROWS_AS(classify(f, TechParams::make(1, 1, 1)), ModelError);
  // Same d_max, different crossings: still no slope/intercept line.
  const auto g = breakeven_frontier({Topology::Matrix, Layout::B}, kSnakeB, 4, 0.25, 1.0,
                                    CrossingModel::zero_extra());
  CHECK(g.degenerate);
}

TEST_CASE("frontier agrees with direct comparison on random points") {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> pc(0.0, 0.2), pp(0.0, 2.0);
  struct Case {
    ImplSpec a, b;
    CrossingModel model;
  };
  const std::vector<Case> cases = {{kLambdaA, kLambdaB, CrossingModel::calibrated_n8()},
                                   {kSnakeB, kOrnocCCC, CrossingModel::calibrated_n8()},
                                   {kOrnocC, kMatrixA, CrossingModel::zero_extra()}};
  for (const auto& c : cases) {
    for (double pitch : {0.0125, 0.05, 0.25}) {
      const auto f = breakeven_frontier(c.a, c.b, 8, pitch, 1.0, c.model);
      const GridSpec g(8, pitch);
      for (int k = 0; k < 300; ++k) {
        const auto t = TechParams::make(pp(rng), pc(rng), 1.0);
        const double diff =
            worst_case_loss(c.a, g, t, c.model).l_total_db - worst_case_loss(c.b, g, t, c.model).l_total_db;
        const auto side = classify(f, t);
        if (std::abs(diff) <= kFrontierToleranceDb) CHECK(side == FrontierSide::OnLine);
        else CHECK(side == (diff < 0 ? FrontierSide::A : FrontierSide::B));

        // Points on the line have equal losses on both sides.
        const double x = pc(rng);
        const auto on = TechParams::make(std::max(0.0, f.p_propagation_at(x)), x, 1.0);
        if (f.p_propagation_at(x) < 0.0) continue;
        const double r =
            worst_case_loss(c.a, g, on, c.model).l_total_db - worst_case_loss(c.b, g, on, c.model).l_total_db;
        CHECK(std::abs(r) <= kFrontierToleranceDb);
      }
    }
  }
}
