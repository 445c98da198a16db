#ifndef OXBAR_TYPES_HPP
#define OXBAR_TYPES_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace oxbar {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied value outside the domain of an operation (odd n,
/// non-positive pitch, negative loss coefficient, malformed name...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The inputs are well-formed but the model cannot answer: an invalid
/// topology/layout pairing, a crossing model with no calibration for the
/// requested point, a frontier queried outside its context.
class ModelError : public Error {
 public:
  enum class Kind { InvalidPairing, UncalibratedPoint, DegenerateFrontier, ContextMismatch };

  ModelError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

enum class Topology { Matrix, LambdaRouter, Snake, OrnocC, OrnocCCC };
enum class Layout { A, B, Serpentine };

/// A (topology, layout) pair. Only eight combinations are valid: the
/// matrix and multistage networks with layout A or B, and both ring
/// networks with the serpentine layout.
struct ImplSpec {
  Topology topology = Topology::Matrix;
  Layout layout = Layout::A;

  bool is_valid() const noexcept;
  /// Throws ModelError(InvalidPairing) unless is_valid().
  void require_valid() const;

  /// Parses `matrix-a`, `lambda-router-b`, `ornoc-ccc`, ...
  static ImplSpec parse(std::string_view name);
  std::string name() const;

  friend bool operator==(const ImplSpec&, const ImplSpec&) = default;
};

bool is_ring(Topology t) noexcept;

std::string_view to_string(Topology t) noexcept;
std::string_view to_string(Layout l) noexcept;
/// Accepts `matrix`, `lambda-router`, `snake`, `ornoc-c`, `ornoc-ccc`.
Topology parse_topology(std::string_view name);
/// Accepts `a`, `b`, `serpentine` (case-insensitive).
Layout parse_layout(std::string_view name);

/// Per-event loss coefficients, all in dB (propagation in dB/cm).
struct TechParams {
  double p_propagation = 0.0;
  double p_crossing = 0.0;
  double p_drop = 0.0;
  std::optional<std::string> name;

  /// Validated constructor: all coefficients finite and >= 0.
  static TechParams make(double p_propagation, double p_crossing, double p_drop,
                         std::optional<std::string> name = std::nullopt);

  friend bool operator==(const TechParams&, const TechParams&) = default;
};

/// Geometry of the N x N core array: side n (even, >= 2) and the
/// distance between neighboring network interfaces in cm.
class GridSpec {
 public:
  GridSpec(int n, double pitch_cm);
  static GridSpec from_die_area(double die_area_cm2, int n);

  int n() const noexcept { return n_; }
  double pitch_cm() const noexcept { return pitch_cm_; }
  /// m = n^2, the number of crossbar ports.
  std::int64_t ports() const noexcept { return static_cast<std::int64_t>(n_) * n_; }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;

 private:
  int n_;
  double pitch_cm_;
};

/// Throws InvalidInput unless n is even and >= 2.
void require_even_side(int n);

}  // namespace oxbar

#endif  // OXBAR_TYPES_HPP
