#ifndef OXBAR_REPORT_HPP
#define OXBAR_REPORT_HPP

// JSON and CSV renderings of the library records. Reals are always written
// with six fixed decimals so that identical inputs give identical bytes.

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "oxbar/catalog.hpp"
#include "oxbar/dse.hpp"
#include "oxbar/loss.hpp"
#include "oxbar/oracle.hpp"
#include "oxbar/ornoc.hpp"

namespace oxbar::report {

using Json = nlohmann::ordered_json;

std::string format_fixed(double value);
/// Serializes like Json::dump, but every float as format_fixed. A negative
/// indent gives a single line.
std::string dump_fixed(const Json& value, int indent = 2);

Json to_json(const TechParams& tech);
Json to_json(const GridSpec& grid);
Json to_json(const CrossingModel& model);
Json to_json(const LossBreakdown& loss);
Json to_json(const ResourceCounts& rc);
Json to_json(const Comparison& c);
Json to_json(const RingAssignment& a);
Json to_json(const std::vector<Violation>& violations);
Json to_json(const oracle::CrossCheckReport& r);
Json to_json(const SweepResult& s);
Json to_json(const Frontier& f);

TechParams tech_from_json(const Json& j);
CrossingModel crossing_model_from_json(const Json& j);
LossBreakdown loss_from_json(const Json& j);
ResourceCounts resource_counts_from_json(const Json& j);
RingAssignment assignment_from_json(const Json& j);
oracle::CrossCheckReport cross_check_from_json(const Json& j);
Frontier frontier_from_json(const Json& j);

/// Writes `# <compact json>` comment lines ahead of a CSV body.
void write_csv_preamble(std::ostream& os, const Json& header);

/// `src,dst,wavelength,direction,segments` with `|`-separated segments.
void write_assignment_csv(std::ostream& os, const RingAssignment& a);

/// One row per (axis value, implementation).
void write_sweep_csv(std::ostream& os, const SweepResult& s);

struct LineSample {
  double p_crossing;
  double p_propagation;
};

/// Evenly spaced samples of the frontier line for p_crossing in
/// [0, p_crossing_max], keeping only those with p_propagation in
/// [0, p_propagation_max]. Empty for a degenerate frontier.
std::vector<LineSample> sample_line(const Frontier& f, int samples, double p_crossing_max,
                                    double p_propagation_max);

void write_frontier_csv(std::ostream& os, const std::vector<LineSample>& line);

}  // namespace oxbar::report

#endif  // OXBAR_REPORT_HPP
