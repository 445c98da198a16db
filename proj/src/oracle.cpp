#include "oxbar/oracle.hpp"

#include <algorithm>
#include <cstdlib>

#include "oxbar/catalog.hpp"
#include "oxbar/types.hpp"

namespace oxbar::oracle {

SerpentineRing::SerpentineRing(int n) : n_(n) {
  require_even_side(n);
  for (int y = 0; y < n; ++y) {
    for (int k = 0; k < n; ++k) {
      points_.push_back({y % 2 == 0 ? k : n - 1 - k, y});
    }
  }
  const std::size_t m = points_.size();
  for (std::size_t k = 0; k < m; ++k) {
    const Point a = points_[k];
    const Point b = points_[(k + 1) % m];
    // Waveguides run along grid lines: every segment is horizontal or vertical.
    if (a.x != b.x && a.y != b.y) throw Error("serpentine segment is not rectilinear");
    lengths_.push_back(std::abs(a.x - b.x) + std::abs(a.y - b.y));
  }
}

std::int64_t SerpentineRing::circumference() const noexcept {
  std::int64_t c = 0;
  for (auto l : lengths_) c += l;
  return c;
}

std::int64_t SerpentineRing::walk(int src, int dst, Direction direction) const {
  const int m = ports();
  std::int64_t len = 0;
  int pos = src;
  while (pos != dst) {
    if (direction == Direction::C) {
      len += lengths_[static_cast<std::size_t>(pos)];
      pos = (pos + 1) % m;
    } else {
      pos = (pos + m - 1) % m;
      len += lengths_[static_cast<std::size_t>(pos)];
    }
  }
  return len;
}

namespace {

int hop_count(int src, int dst, Direction direction, int m) {
  int h = 0;
  for (int pos = src; pos != dst; ++h) {
    pos = direction == Direction::C ? (pos + 1) % m : (pos + m - 1) % m;
  }
  return h;
}

}  // namespace

std::int64_t ring_worst_distance(int n, RingMode mode) {
  const SerpentineRing ring(n);
  const int m = ring.ports();
  std::int64_t worst = 0;
  for (int s = 0; s < m; ++s) {
    for (int d = 0; d < m; ++d) {
      if (s == d) continue;
      Direction dir = Direction::C;
      if (mode == RingMode::CCC) {
        const int cw = hop_count(s, d, Direction::C, m);
        const int ccw = hop_count(s, d, Direction::CC, m);
        if (ccw < cw || (ccw == cw && s < d)) dir = Direction::CC;
      }
      worst = std::max(worst, ring.walk(s, d, dir));
    }
  }
  return worst;
}

MatrixGrid::MatrixGrid(int ports) : m_(ports) {
  if (ports < 2) throw InvalidInput("matrix crossbar needs at least 2 ports");
}

std::vector<std::pair<int, int>> MatrixGrid::path(int src, int dst) const {
  if (src < 1 || src > m_ || dst < 1 || dst > m_ || src == dst) {
    throw InvalidInput("matrix path endpoints out of range");
  }
  std::vector<std::pair<int, int>> passed;
  // Along row `src` from the left edge up to the coupling column.
  for (int col = 1; col < dst; ++col) passed.emplace_back(src, col);
  // Up column `dst` from the coupling row to the top edge.
  for (int row = src - 1; row >= 1; --row) passed.emplace_back(row, dst);
  return passed;
}

std::int64_t MatrixGrid::mr_count(bool reduced) const {
  std::int64_t count = 0;
  for (int row = 1; row <= m_; ++row) {
    for (int col = 1; col <= m_; ++col) {
      if (reduced && row == col) continue;
      ++count;
    }
  }
  return count;
}

std::int64_t matrix_worst_crossings(int ports) {
  const MatrixGrid grid(ports);
  std::int64_t worst = 0;
  for (int i = 1; i <= ports; ++i) {
    for (int j = 1; j <= ports; ++j) {
      if (i != j) worst = std::max(worst, static_cast<std::int64_t>(grid.path(i, j).size()));
    }
  }
  return worst;
}

std::int64_t matrix_mr_count(int ports, bool reduced) { return MatrixGrid(ports).mr_count(reduced); }

FormulaSet FormulaSet::catalog() {
  FormulaSet f;
  f.ornoc_c_d_max_units = [](int n) {
    return d_max_units({Topology::OrnocC, Layout::Serpentine}, n);
  };
  f.ornoc_ccc_d_max_units = [](int n) {
    return d_max_units({Topology::OrnocCCC, Layout::Serpentine}, n);
  };
  f.matrix_crossings = [](int n) {
    return static_cast<std::int64_t>(n_crossing({Topology::Matrix, Layout::A}, GridSpec(n, 1.0),
                                                CrossingModel::zero_extra()));
  };
  f.matrix_mr_initial = [](int n) { return resource_counts(Topology::Matrix, n).mr_crossbar_initial; };
  f.matrix_mr_reduced = [](int n) { return resource_counts(Topology::Matrix, n).mr_crossbar_reduced; };
  f.ornoc_c_wavelengths = [](int n) { return resource_counts(Topology::OrnocC, n).min_wavelengths; };
  return f;
}

namespace {

// Each C-ring wavelength carries one pair, whose two clockwise walks
// must tile the ring exactly; the count is the number of tiling pairs.
std::int64_t ring_c_wavelengths(int n) {
  const SerpentineRing ring(n);
  const int m = ring.ports();
  std::int64_t count = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (ring.walk(i, j, Direction::C) + ring.walk(j, i, Direction::C) == ring.circumference()) {
        ++count;
      }
    }
  }
  return count;
}

}  // namespace

CrossCheckReport cross_check(int n_max, const FormulaSet& formulas) {
  if (n_max < 2 || n_max % 2 != 0 || n_max > 8) {
    throw InvalidInput("cross_check needs an even n_max in [2, 8]");
  }
  struct Entry {
    const char* name;
    const std::function<std::int64_t(int)>* formula;
    std::function<std::int64_t(int)> oracle;
  };
  const std::vector<Entry> entries = {
      {"ornoc_c.d_max", &formulas.ornoc_c_d_max_units,
       [](int n) { return ring_worst_distance(n, RingMode::C); }},
      {"ornoc_ccc.d_max", &formulas.ornoc_ccc_d_max_units,
       [](int n) { return ring_worst_distance(n, RingMode::CCC); }},
      {"matrix.n_crossing", &formulas.matrix_crossings,
       [](int n) { return matrix_worst_crossings(n * n); }},
      {"matrix.mr_crossbar_initial", &formulas.matrix_mr_initial,
       [](int n) { return matrix_mr_count(n * n, false); }},
      {"matrix.mr_crossbar_reduced", &formulas.matrix_mr_reduced,
       [](int n) { return matrix_mr_count(n * n, true); }},
      {"ornoc_c.min_wavelengths", &formulas.ornoc_c_wavelengths, ring_c_wavelengths},
  };

  CrossCheckReport report;
  for (const auto& e : entries) report.checked.emplace_back(e.name);
  for (int n = 2; n <= n_max; n += 2) {
    report.n_values.push_back(n);
    for (const auto& e : entries) {
      const std::int64_t expected = e.oracle(n);
      const std::int64_t actual = (*e.formula)(n);
      if (expected != actual) report.mismatches.push_back({e.name, n, expected, actual});
    }
  }
  return report;
}

}  // namespace oxbar::oracle
