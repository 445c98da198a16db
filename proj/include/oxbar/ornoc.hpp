#ifndef OXBAR_ORNOC_HPP
#define OXBAR_ORNOC_HPP

// Wavelength assignment for ring crossbars.
//
// Ports 0..m-1 sit on the ring in serpentine order. Segment k joins port k
// to port k+1 (mod m); segment m-1 is the long edge that closes the
// serpentine. Clockwise (C) travel walks increasing port indices, the
// counter-clockwise (CC) waveguide walks them in reverse.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace oxbar {

enum class Direction { C, CC };
enum class RingMode { C, CCC };

std::string_view to_string(Direction d) noexcept;
std::string_view to_string(RingMode m) noexcept;
Direction parse_direction(std::string_view s);
RingMode parse_ring_mode(std::string_view s);

struct Arc {
  int src = 0;
  int dst = 0;
  int wavelength = 0;
  Direction direction = Direction::C;
  /// Ring segments traversed, in travel order.
  std::vector<int> segments;

  friend bool operator==(const Arc&, const Arc&) = default;
};

struct RingAssignment {
  int ports = 0;
  RingMode mode = RingMode::C;
  /// Sorted by (src, dst).
  std::vector<Arc> arcs;
  int wavelength_count = 0;

  friend bool operator==(const RingAssignment&, const RingAssignment&) = default;
};

/// Segments traversed going from src to dst in the given direction.
std::vector<int> arc_segments(int src, int dst, Direction direction, int ports);

/// Direction used by the bidirectional ring for src -> dst: the shorter way
/// round, and for the m/2-hop pairs clockwise from the higher-indexed port
/// (that arc crosses the closing segment).
Direction ccc_direction(int src, int dst, int ports);

/// Clockwise-only ring: (i, j) and (j, i) share one wavelength and together
/// cover the whole ring. Wavelengths are numbered by lexicographic pair order.
RingAssignment assign_c(int ports);

/// Bidirectional ring: each pair takes its short arc; the C waveguide is
/// packed by longest-arc-first chaining around the ring, leftovers go first
/// fit, and the CC waveguide mirrors each pair on the same wavelength.
RingAssignment assign_ccc(int ports);

struct Violation {
  enum class Kind { Overlap, Missing, Duplicate, Inconsistent };
  Kind kind;
  std::string detail;
};

std::string_view to_string(Violation::Kind k) noexcept;

/// Empty iff the assignment is a valid all-to-all assignment for its mode.
std::vector<Violation> validate(const RingAssignment& assignment);

/// Waveguides needed when each carries at most `cap_per_waveguide` wavelengths.
std::int64_t partition_waveguides(std::int64_t total_wavelengths, std::int64_t cap_per_waveguide);

}  // namespace oxbar

#endif  // OXBAR_ORNOC_HPP
