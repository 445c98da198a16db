#include "oxbar/ornoc.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>
#include <utility>

#include "oxbar/types.hpp"

namespace oxbar {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

int hops(int src, int dst, Direction d, int m) {
  return d == Direction::C ? mod(dst - src, m) : mod(src - dst, m);
}

void require_ports(int ports) {
  if (ports < 2) throw InvalidInput("a ring needs at least 2 ports");
}

// A clockwise arc still waiting for a wavelength.
struct PendingArc {
  int start;
  int length;
  int end;
};

class SegmentMask {
 public:
  explicit SegmentMask(int ports) : used_(static_cast<std::size_t>(ports), false) {}

  bool fits(int start, int length) const {
    const int m = static_cast<int>(used_.size());
    for (int k = 0; k < length; ++k) {
      if (used_[static_cast<std::size_t>(mod(start + k, m))]) return false;
    }
    return true;
  }

  void take(int start, int length) {
    const int m = static_cast<int>(used_.size());
    for (int k = 0; k < length; ++k) used_[static_cast<std::size_t>(mod(start + k, m))] = true;
  }

 private:
  std::vector<bool> used_;
};

void sort_arcs(std::vector<Arc>& arcs) {
  std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
    return std::pair(a.src, a.dst) < std::pair(b.src, b.dst);
  });
}

}  // namespace

std::string_view to_string(Direction d) noexcept { return d == Direction::C ? "C" : "CC"; }
std::string_view to_string(RingMode m) noexcept { return m == RingMode::C ? "C" : "CCC"; }

Direction parse_direction(std::string_view s) {
  if (s == "C" || s == "c") return Direction::C;
  if (s == "CC" || s == "cc") return Direction::CC;
  throw InvalidInput("unknown direction '" + std::string(s) + "'");
}

RingMode parse_ring_mode(std::string_view s) {
  if (s == "C" || s == "c") return RingMode::C;
  if (s == "CCC" || s == "ccc" || s == "C-CC" || s == "c-cc") return RingMode::CCC;
  throw InvalidInput("unknown ring mode '" + std::string(s) + "'");
}

std::vector<int> arc_segments(int src, int dst, Direction direction, int ports) {
  require_ports(ports);
  if (src < 0 || src >= ports || dst < 0 || dst >= ports || src == dst) {
    throw InvalidInput("arc endpoints out of range");
  }
  std::vector<int> segs;
  const int h = hops(src, dst, direction, ports);
  segs.reserve(static_cast<std::size_t>(h));
  int pos = src;
  for (int k = 0; k < h; ++k) {
    if (direction == Direction::C) {
      segs.push_back(pos);
      pos = mod(pos + 1, ports);
    } else {
      pos = mod(pos - 1, ports);
      segs.push_back(pos);
    }
  }
  return segs;
}

Direction ccc_direction(int src, int dst, int ports) {
  const int cw = mod(dst - src, ports);
  const int ccw = ports - cw;
  if (cw != ccw) return cw < ccw ? Direction::C : Direction::CC;
  return src > dst ? Direction::C : Direction::CC;
}

RingAssignment assign_c(int ports) {
  require_ports(ports);
  RingAssignment out;
  out.ports = ports;
  out.mode = RingMode::C;
  int wl = 0;
  for (int i = 0; i < ports; ++i) {
    for (int j = i + 1; j < ports; ++j, ++wl) {
      out.arcs.push_back({i, j, wl, Direction::C, arc_segments(i, j, Direction::C, ports)});
      out.arcs.push_back({j, i, wl, Direction::C, arc_segments(j, i, Direction::C, ports)});
    }
  }
  out.wavelength_count = wl;
  sort_arcs(out.arcs);
  return out;
}

RingAssignment assign_ccc(int ports) {
  require_ports(ports);
  if (ports % 2 != 0) throw InvalidInput("bidirectional ring assignment needs an even port count");
  const int m = ports;

  // One clockwise arc per unordered pair, bucketed by start port,
  // longest first.
  std::vector<std::vector<PendingArc>> by_start(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const bool forward = ccc_direction(i, j, m) == Direction::C;
      const int s = forward ? i : j;
      const int e = forward ? j : i;
      by_start[static_cast<std::size_t>(s)].push_back({s, mod(e - s, m), e});
    }
  }
  for (auto& bucket : by_start) {
    std::stable_sort(bucket.begin(), bucket.end(),
                     [](const PendingArc& a, const PendingArc& b) { return a.length > b.length; });
  }

  std::vector<std::vector<PendingArc>> wavelengths;
  std::vector<SegmentMask> masks;
  std::size_t remaining = static_cast<std::size_t>(m) * (m - 1) / 2;

  // Chaining: from a start port take the longest arc that still fits before
  // returning to the start, continue from its end, and step over a segment
  // when nothing starts at the current port. The start rotates per
  // wavelength. A chain that would leave more than half the ring dark ends
  // this phase.
  int next_start = 0;
  while (remaining > 0) {
    int x = next_start;
    for (int k = 0; k < m && by_start[static_cast<std::size_t>(x)].empty(); ++k) x = mod(x + 1, m);

    std::vector<std::pair<int, std::size_t>> picks;  // (start port, index in bucket)
    std::vector<PendingArc> chain;
    int cur = x;
    int used = 0;
    int lit = 0;
    while (used < m) {
      const auto& bucket = by_start[static_cast<std::size_t>(cur)];
      // Each port is visited at most once per lap.
      std::size_t pick = 0;
      while (pick < bucket.size() && bucket[pick].length > m - used) ++pick;
      if (pick == bucket.size()) {
        cur = mod(cur + 1, m);
        ++used;
        continue;
      }
      picks.emplace_back(cur, pick);
      chain.push_back(bucket[pick]);
      used += bucket[pick].length;
      lit += bucket[pick].length;
      cur = bucket[pick].end;
    }
    if (2 * lit < m) break;

    SegmentMask mask(m);
    for (const auto& a : chain) mask.take(a.start, a.length);
    // Erase picked arcs, highest index first within each bucket.
    std::sort(picks.begin(), picks.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first < b.first : a.second > b.second;
    });
    for (const auto& [p, idx] : picks) {
      auto& bucket = by_start[static_cast<std::size_t>(p)];
      bucket.erase(bucket.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    remaining -= chain.size();
    wavelengths.push_back(std::move(chain));
    masks.push_back(std::move(mask));
    next_start = mod(x + 1, m);
  }

  // First fit for whatever the chains left, longest first.
  std::vector<PendingArc> leftovers;
  for (const auto& bucket : by_start) leftovers.insert(leftovers.end(), bucket.begin(), bucket.end());
  std::stable_sort(leftovers.begin(), leftovers.end(), [](const PendingArc& a, const PendingArc& b) {
    if (a.length != b.length) return a.length > b.length;
    return a.start < b.start;
  });
  for (const auto& arc : leftovers) {
    std::size_t w = 0;
    while (w < masks.size() && !masks[w].fits(arc.start, arc.length)) ++w;
    if (w == masks.size()) {
      wavelengths.emplace_back();
      masks.emplace_back(m);
    }
    masks[w].take(arc.start, arc.length);
    wavelengths[w].push_back(arc);
  }

  RingAssignment out;
  out.ports = m;
  out.mode = RingMode::CCC;
  out.wavelength_count = static_cast<int>(wavelengths.size());
  for (std::size_t w = 0; w < wavelengths.size(); ++w) {
    for (const auto& a : wavelengths[w]) {
      const int wl = static_cast<int>(w);
      out.arcs.push_back({a.start, a.end, wl, Direction::C, arc_segments(a.start, a.end, Direction::C, m)});
      out.arcs.push_back({a.end, a.start, wl, Direction::CC, arc_segments(a.end, a.start, Direction::CC, m)});
    }
  }
  sort_arcs(out.arcs);
  return out;
}

std::string_view to_string(Violation::Kind k) noexcept {
  switch (k) {
    case Violation::Kind::Overlap: return "overlap";
    case Violation::Kind::Missing: return "missing";
    case Violation::Kind::Duplicate: return "duplicate";
    case Violation::Kind::Inconsistent: return "inconsistent";
  }
  return "?";
}

std::vector<Violation> validate(const RingAssignment& a) {
  std::vector<Violation> out;
  const int m = a.ports;
  if (m < 2) {
    out.push_back({Violation::Kind::Inconsistent, "ring has fewer than 2 ports"});
    return out;
  }
  auto pair_name = [](int s, int d) {
    return "(" + std::to_string(s) + "," + std::to_string(d) + ")";
  };

  std::map<std::pair<int, int>, std::vector<const Arc*>> by_pair;
  // (direction, wavelength, segment) -> first arc occupying it
  std::map<std::tuple<int, int, int>, const Arc*> occupancy;

  for (const auto& arc : a.arcs) {
    const std::string name = pair_name(arc.src, arc.dst);
    if (arc.src < 0 || arc.src >= m || arc.dst < 0 || arc.dst >= m || arc.src == arc.dst) {
      out.push_back({Violation::Kind::Inconsistent, "arc " + name + " has invalid endpoints"});
      continue;
    }
    by_pair[{arc.src, arc.dst}].push_back(&arc);
    if (arc.wavelength < 0 || arc.wavelength >= a.wavelength_count) {
      out.push_back({Violation::Kind::Inconsistent,
                     "arc " + name + " uses wavelength " + std::to_string(arc.wavelength) +
                         " outside [0," + std::to_string(a.wavelength_count) + ")"});
    }
    if (arc.segments != arc_segments(arc.src, arc.dst, arc.direction, m)) {
      out.push_back({Violation::Kind::Inconsistent,
                     "arc " + name + " segment list does not match its direction"});
    }
    if (a.mode == RingMode::C && arc.direction != Direction::C) {
      out.push_back({Violation::Kind::Inconsistent,
                     "arc " + name + " is counter-clockwise on a clockwise-only ring"});
    }
    if (a.mode == RingMode::CCC && static_cast<int>(arc.segments.size()) > m / 2) {
      out.push_back({Violation::Kind::Inconsistent,
                     "arc " + name + " spans " + std::to_string(arc.segments.size()) +
                         " segments, more than " + std::to_string(m / 2)});
    }
    for (int seg : arc.segments) {
      if (seg < 0 || seg >= m) continue;
      const auto key = std::tuple(static_cast<int>(arc.direction), arc.wavelength, seg);
      auto [it, inserted] = occupancy.emplace(key, &arc);
      if (!inserted) {
        std::ostringstream msg;
        msg << "arcs " << pair_name(it->second->src, it->second->dst) << " and " << name
            << " share segment " << seg << " on wavelength " << arc.wavelength << " direction "
            << to_string(arc.direction);
        out.push_back({Violation::Kind::Overlap, msg.str()});
      }
    }
  }

  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      const auto it = by_pair.find({i, j});
      const std::size_t count = it == by_pair.end() ? 0 : it->second.size();
      if (count == 0) {
        out.push_back({Violation::Kind::Missing, "pair " + pair_name(i, j) + " has no arc"});
      } else if (count > 1) {
        out.push_back({Violation::Kind::Duplicate,
                       "pair " + pair_name(i, j) + " appears " + std::to_string(count) + " times"});
      }
      if (a.mode == RingMode::CCC && i < j && count == 1) {
        const auto back = by_pair.find({j, i});
        if (back == by_pair.end() || back->second.size() != 1) continue;
        const Arc& f = *it->second.front();
        const Arc& r = *back->second.front();
        if (f.wavelength != r.wavelength || f.direction == r.direction) {
          out.push_back({Violation::Kind::Inconsistent,
                         "pairs " + pair_name(i, j) + " and " + pair_name(j, i) +
                             " must share a wavelength in opposite directions"});
        }
      }
    }
  }
  return out;
}

std::int64_t partition_waveguides(std::int64_t total_wavelengths, std::int64_t cap_per_waveguide) {
  if (cap_per_waveguide <= 0) throw InvalidInput("wavelengths per waveguide must be positive");
  if (total_wavelengths < 0) throw InvalidInput("wavelength count must be non-negative");
  return (total_wavelengths + cap_per_waveguide - 1) / cap_per_waveguide;
}

}  // namespace oxbar
