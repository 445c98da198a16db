#ifndef OXBAR_ORACLE_HPP
#define OXBAR_ORACLE_HPP

// Brute-force structural models used to re-derive the closed forms in
// catalog.hpp by explicit geometry and enumeration.

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "oxbar/ornoc.hpp"

namespace oxbar::oracle {

struct Point {
  int x = 0;
  int y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

/// Boustrophedon ring over the n x n interface grid: row 0 left to right,
/// row 1 right to left, ..., closed by a straight edge from the last point
/// back to the first. Lengths are in units of the pitch.
class SerpentineRing {
 public:
  explicit SerpentineRing(int n);

  int n() const noexcept { return n_; }
  int ports() const noexcept { return static_cast<int>(points_.size()); }
  const std::vector<Point>& points() const noexcept { return points_; }
  /// segment_lengths()[k] is the length from point k to point k+1 (mod m).
  const std::vector<std::int64_t>& segment_lengths() const noexcept { return lengths_; }
  std::int64_t circumference() const noexcept;

  /// Length of the walk from src to dst in the given direction.
  std::int64_t walk(int src, int dst, Direction direction) const;

 private:
  int n_;
  std::vector<Point> points_;
  std::vector<std::int64_t> lengths_;
};

/// Worst ordered-pair distance in units of the pitch. C: clockwise walk.
/// CCC: the walk with fewer hops; at exactly m/2 hops, clockwise from the
/// higher-indexed port.
std::int64_t ring_worst_distance(int n, RingMode mode);

/// Matrix crossbar grid: input i enters row i from the left, output j
/// leaves column j at the top, and i -> j couples at (row i, column j).
/// Ports are 1-based.
class MatrixGrid {
 public:
  explicit MatrixGrid(int ports);

  int ports() const noexcept { return m_; }
  /// Intersections passed straight through by i -> j, as (row, column).
  std::vector<std::pair<int, int>> path(int src, int dst) const;
  std::int64_t mr_count(bool reduced) const;

 private:
  int m_;
};

std::int64_t matrix_worst_crossings(int ports);
std::int64_t matrix_mr_count(int ports, bool reduced);

/// The closed forms under test, as functions of n.
struct FormulaSet {
  std::function<std::int64_t(int)> ornoc_c_d_max_units;
  std::function<std::int64_t(int)> ornoc_ccc_d_max_units;
  std::function<std::int64_t(int)> matrix_crossings;
  std::function<std::int64_t(int)> matrix_mr_initial;
  std::function<std::int64_t(int)> matrix_mr_reduced;
  std::function<std::int64_t(int)> ornoc_c_wavelengths;

  /// Formulas taken from the catalog.
  static FormulaSet catalog();
};

struct Mismatch {
  std::string formula;
  int n = 0;
  std::int64_t expected = 0;  // oracle
  std::int64_t actual = 0;    // closed form
  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct CrossCheckReport {
  std::vector<std::string> checked;
  std::vector<int> n_values;
  std::vector<Mismatch> mismatches;

  bool ok() const noexcept { return mismatches.empty(); }
};

/// Compares every formula against the oracles for even n in [2, n_max].
CrossCheckReport cross_check(int n_max, const FormulaSet& formulas = FormulaSet::catalog());

}  // namespace oxbar::oracle

#endif  // OXBAR_ORACLE_HPP
