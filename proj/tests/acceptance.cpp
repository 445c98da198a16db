// Prints one PASS/FAIL line per acceptance criterion; exits non-zero if any fail.
// usage: oxbar_acceptance <oxbar binary> <cli script>

#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oxbar/catalog.hpp"
#include "oxbar/dse.hpp"
#include "oxbar/loss.hpp"
#include "oxbar/oracle.hpp"
#include "oxbar/ornoc.hpp"

using namespace oxbar;
namespace fs = std::filesystem;

namespace {

// Collects the first few failure messages of one criterion.
struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 5) failures.push_back(what);
  }
  void near(double got, double want, double tol, const std::string& what) {
    std::ostringstream os;
    os << what << ": got " << got << ", want " << want << " +/- " << tol;
    expect(std::abs(got - want) <= tol, os.str());
  }
  template <typename T>
  void equal(const T& got, const T& want, const std::string& what) {
    std::ostringstream os;
    os << what << ": got " << got << ", want " << want;
    expect(got == want, os.str());
  }
};

const ImplSpec kCcc{Topology::OrnocCCC, Layout::Serpentine};
const ImplSpec kLambdaA{Topology::LambdaRouter, Layout::A};
const ImplSpec kLambdaB{Topology::LambdaRouter, Layout::B};
const ImplSpec kSnakeB{Topology::Snake, Layout::B};

const GridSpec& die4_n8() {
  static const GridSpec g = GridSpec::from_die_area(4.0, 8);
  return g;
}

TechParams preset(const char* name) { return *find_preset(name); }

void anchors(Check& c) {
  const auto& g = die4_n8();
  c.near(worst_case_loss(kCcc, g, preset("biberman2011")).l_total_db, 5.25, 0.005, "ornoc-ccc biberman2011");
  c.near(worst_case_loss(kLambdaB, g, preset("biberman2011")).l_total_db, 8.45, 0.005,
         "lambda-router-b biberman2011");
  c.near(worst_case_loss(kCcc, g, preset("koka2012")).l_total_db, 2.45, 0.005, "ornoc-ccc koka2012");
  c.near(worst_case_loss(kLambdaB, g, preset("koka2012")).l_total_db, 26.15, 0.005, "lambda-router-b koka2012");
}

void improvements(Check& c) {
  const auto& g = die4_n8();
  for (auto [name, want] : {std::pair{"biberman2011", 37.9}, std::pair{"koka2012", 90.6}}) {
    const auto cmp = compare(kCcc, kLambdaB, g, preset(name));
    c.expect(cmp.better == Winner::A, std::string(name) + ": ornoc-ccc should win");
    c.near(cmp.improvement_pct, want, 0.05, std::string(name) + " improvement %");
  }
}

void resources(Check& c) {
  const auto lr4 = resource_counts(Topology::LambdaRouter, 4);
  c.equal<std::int64_t>(lr4.mr_crossbar_initial, 240, "lambda-router n=4 initial MRs");
  c.equal<std::int64_t>(lr4.mr_crossbar_reduced, 224, "lambda-router n=4 reduced MRs");
  c.equal<std::int64_t>(resource_counts(Topology::Matrix, 2).mr_crossbar_initial, 16, "matrix n=2 initial MRs");
  c.equal<std::int64_t>(resource_counts(Topology::Matrix, 8).min_wavelengths, 63, "matrix n=8 wavelengths");
  c.equal<std::int64_t>(resource_counts(Topology::LambdaRouter, 8).min_wavelengths, 64,
                        "lambda-router n=8 wavelengths");
  c.equal<std::int64_t>(resource_counts(Topology::Snake, 8).min_wavelengths, 64, "snake n=8 wavelengths");
  c.equal<std::int64_t>(resource_counts(Topology::OrnocCCC, 8).min_wavelengths, 1008, "ornoc-ccc n=8 wavelengths");
  c.equal<std::int64_t>(partition_waveguides(1008, 64), 16, "partition 1008/64");
  c.equal<std::int64_t>(partition_waveguides(1008, 16), 63, "partition 1008/16");
}

void assignments(Check& c) {
  const auto c4 = assign_c(4);
  c.equal(c4.wavelength_count, 6, "assign_c(4) wavelengths");
  c.expect(validate(c4).empty(), "assign_c(4) validates");
  const auto ccc4 = assign_ccc(4);
  c.equal(ccc4.wavelength_count, 3, "assign_ccc(4) wavelengths");
  c.expect(validate(ccc4).empty(), "assign_ccc(4) validates");

  for (int m = 2; m <= 64; m += 2) {
    const auto a = assign_c(m);
    c.equal(a.wavelength_count, m * (m - 1) / 2, "assign_c(" + std::to_string(m) + ") wavelengths");
    const auto b = assign_ccc(m);
    c.expect(validate(b).empty(), "assign_ccc(" + std::to_string(m) + ") validates");
    // m(m-1)/4 rounded up; the exact quotient is fractional when m = 2 mod 4
    c.expect(b.wavelength_count <= (m * (m - 1) + 3) / 4, "assign_ccc(" + std::to_string(m) + ") count bound");
    for (const auto& arc : b.arcs) {
      c.expect(static_cast<int>(arc.segments.size()) <= m / 2,
               "assign_ccc(" + std::to_string(m) + ") arc span exceeds m/2");
    }
  }
}

void oracle_equivalence(Check& c) {
  const auto r = oracle::cross_check(8);
  c.expect(r.ok(), std::to_string(r.mismatches.size()) + " mismatches");
  for (const auto& m : r.mismatches) {
    c.expect(false, m.formula + " at n=" + std::to_string(m.n) + ": oracle " + std::to_string(m.expected) +
                        ", formula " + std::to_string(m.actual));
  }
  c.equal<std::int64_t>(oracle::matrix_worst_crossings(4), 5, "matrix m=4 crossings");
  c.equal<std::int64_t>(oracle::matrix_worst_crossings(16), 29, "matrix m=16 crossings");
  c.equal<std::int64_t>(oracle::matrix_mr_count(4, true), 12, "matrix m=4 reduced MRs");
  c.equal<std::int64_t>(oracle::matrix_mr_count(16, true), 240, "matrix m=16 reduced MRs");
  for (int n : {2, 4, 6, 8}) {
    c.equal<std::int64_t>(oracle::ring_worst_distance(n, RingMode::C), d_max_units({Topology::OrnocC, Layout::Serpentine}, n),
                          "ornoc-c walk n=" + std::to_string(n));
    c.equal<std::int64_t>(oracle::ring_worst_distance(n, RingMode::CCC), d_max_units(kCcc, n),
                          "ornoc-ccc walk n=" + std::to_string(n));
  }
}

void layout_reversal(Check& c) {
  const auto& g = die4_n8();
  const auto pan = compare(kLambdaA, kLambdaB, g, preset("pan2010"));
  c.expect(pan.better == Winner::B, "pan2010: layout B should be strictly better");
  c.expect(pan.loss_b.l_total_db < pan.loss_a.l_total_db, "pan2010: B loss below A loss");
  const auto bib = compare(kLambdaA, kLambdaB, g, preset("biberman2011"));
  c.expect(bib.better == Winner::A, "biberman2011: layout A should be strictly better");
  c.expect(bib.loss_a.l_total_db < bib.loss_b.l_total_db, "biberman2011: A loss below B loss");
}

void frontier_consistency(Check& c) {
  const auto& g = die4_n8();
  std::mt19937 rng(20120);
  std::uniform_real_distribution<double> pc_dist(0.0, 0.2), pp_dist(0.0, 2.0);
  for (auto [a, b] : {std::pair{kLambdaA, kLambdaB}, std::pair{kSnakeB, kCcc}}) {
    const auto f = breakeven_frontier(a, b, g.n(), g.pitch_cm(), 1.0);
    const std::string label = a.name() + " vs " + b.name();
    c.expect(!f.degenerate, label + ": unexpected degenerate frontier");
    if (f.degenerate) continue;
    int disagreements = 0;
    for (int i = 0; i < 1000; ++i) {
      const auto tech = TechParams::make(pp_dist(rng), pc_dist(rng), 1.0);
      const double la = worst_case_loss(a, g, tech).l_total_db;
      const double lb = worst_case_loss(b, g, tech).l_total_db;
      const auto side = classify(f, tech);
      const bool ok = std::abs(la - lb) <= kFrontierToleranceDb ? side == FrontierSide::OnLine
                      : la < lb                                  ? side == FrontierSide::A
                                                                 : side == FrontierSide::B;
      if (!ok) ++disagreements;
    }
    c.equal(disagreements, 0, label + ": classify vs direct comparison disagreements");

    // points on the line itself
    double worst = 0.0;
    for (int i = 0; i <= 100; ++i) {
      const double pc = 0.2 * i / 100;
      const double pp = f.p_propagation_at(pc);
      if (pp < 0.0) continue;
      const auto tech = TechParams::make(pp, pc, 1.0);
      worst = std::max(worst, std::abs(worst_case_loss(a, g, tech).l_total_db -
                                       worst_case_loss(b, g, tech).l_total_db));
      c.expect(classify(f, tech) == FrontierSide::OnLine, label + ": line point not on-line");
    }
    c.expect(worst <= 1e-9, label + ": on-line residual " + std::to_string(worst));
  }
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

void determinism(Check& c, const std::string& binary, const std::string& script) {
  const fs::path root = fs::temp_directory_path() / ("oxbar_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(root);
  std::vector<fs::path> dirs{root / "run1", root / "run2"};
  for (const auto& d : dirs) {
    const std::string cmd = "sh '" + script + "' '" + binary + "' '" + d.string() + "'";
    c.expect(std::system(cmd.c_str()) == 0, "script failed: " + cmd);
  }
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(dirs[0])) {
    ++files;
    const auto other = dirs[1] / e.path().filename();
    c.expect(fs::exists(other), "missing from second run: " + other.string());
    c.expect(slurp(e.path()) == slurp(other), "outputs differ: " + e.path().filename().string());
  }
  c.expect(files > 0, "script produced no outputs");
  std::size_t files2 = std::distance(fs::directory_iterator(dirs[1]), fs::directory_iterator{});
  c.equal(files2, files, "output file count");
  fs::remove_all(root);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: " << argv[0] << " <oxbar binary> <cli script>\n";
    return 2;
  }
  const std::string binary = argv[1], script = argv[2];

  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"anchor loss values", anchors},
      {"improvement percentages", improvements},
      {"resource counts", resources},
      {"wavelength assignment", assignments},
      {"oracle equivalence", oracle_equivalence},
      {"layout reversal", layout_reversal},
      {"frontier consistency", frontier_consistency},
      {"CLI determinism", [&](Check& c) { determinism(c, binary, script); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = c.failures.empty();
    if (!ok) ++failed;
    std::printf("[%s] %zu. %s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str());
    for (const auto& f : c.failures) std::printf("       %s\n", f.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
