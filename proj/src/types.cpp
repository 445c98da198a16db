#include "oxbar/types.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace oxbar {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

bool is_ring(Topology t) noexcept { return t == Topology::OrnocC || t == Topology::OrnocCCC; }

bool ImplSpec::is_valid() const noexcept {
  if (is_ring(topology)) return layout == Layout::Serpentine;
  return layout == Layout::A || layout == Layout::B;
}

void ImplSpec::require_valid() const {
  if (!is_valid()) {
    throw ModelError(ModelError::Kind::InvalidPairing,
                     "invalid implementation: topology " + std::string(to_string(topology)) +
                         " cannot use layout " + std::string(to_string(layout)));
  }
}

std::string_view to_string(Topology t) noexcept {
  switch (t) {
    case Topology::Matrix: return "matrix";
    case Topology::LambdaRouter: return "lambda-router";
    case Topology::Snake: return "snake";
    case Topology::OrnocC: return "ornoc-c";
    case Topology::OrnocCCC: return "ornoc-ccc";
  }
  return "?";
}

std::string_view to_string(Layout l) noexcept {
  switch (l) {
    case Layout::A: return "a";
    case Layout::B: return "b";
    case Layout::Serpentine: return "serpentine";
  }
  return "?";
}

Topology parse_topology(std::string_view name) {
  const std::string s = lower(name);
  if (s == "matrix") return Topology::Matrix;
  if (s == "lambda-router" || s == "lambdarouter" || s == "lambda_router") return Topology::LambdaRouter;
  if (s == "snake") return Topology::Snake;
  if (s == "ornoc-c" || s == "ornocc" || s == "ornoc_c") return Topology::OrnocC;
  if (s == "ornoc-ccc" || s == "ornoc-c-cc" || s == "ornocccc" || s == "ornoc_ccc") return Topology::OrnocCCC;
  throw InvalidInput("unknown topology '" + std::string(name) + "'");
}

Layout parse_layout(std::string_view name) {
  const std::string s = lower(name);
  if (s == "a") return Layout::A;
  if (s == "b") return Layout::B;
  if (s == "serpentine") return Layout::Serpentine;
  throw InvalidInput("unknown layout '" + std::string(name) + "'");
}

ImplSpec ImplSpec::parse(std::string_view name) {
  const std::string s = lower(name);
  // Ring names end in "-c" / "-ccc", which must not be read as a layout.
  if (s.rfind("ornoc", 0) == 0) {
    return ImplSpec{parse_topology(s), Layout::Serpentine};
  }
  const auto dash = s.rfind('-');
  if (dash == std::string::npos || dash + 1 == s.size()) {
    throw InvalidInput("implementation name '" + std::string(name) +
                       "' needs a layout suffix (-a or -b)");
  }
  ImplSpec impl{parse_topology(s.substr(0, dash)), parse_layout(s.substr(dash + 1))};
  impl.require_valid();
  return impl;
}

std::string ImplSpec::name() const {
  if (is_ring(topology)) return std::string(to_string(topology));
  return std::string(to_string(topology)) + "-" + std::string(to_string(layout));
}

TechParams TechParams::make(double p_propagation, double p_crossing, double p_drop,
                            std::optional<std::string> name) {
  for (double v : {p_propagation, p_crossing, p_drop}) {
    if (!std::isfinite(v) || v < 0.0) {
      throw InvalidInput("loss coefficients must be finite and non-negative");
    }
  }
  return TechParams{p_propagation, p_crossing, p_drop, std::move(name)};
}

void require_even_side(int n) {
  if (n < 2 || n % 2 != 0) {
    throw InvalidInput("core array side n must be even and >= 2 (got " + std::to_string(n) + ")");
  }
}

GridSpec::GridSpec(int n, double pitch_cm) : n_(n), pitch_cm_(pitch_cm) {
  require_even_side(n);
  if (!std::isfinite(pitch_cm) || pitch_cm <= 0.0) {
    throw InvalidInput("interface pitch must be a positive length");
  }
}

GridSpec GridSpec::from_die_area(double die_area_cm2, int n) {
  require_even_side(n);
  if (!std::isfinite(die_area_cm2) || die_area_cm2 <= 0.0) {
    throw InvalidInput("die area must be positive");
  }
  return GridSpec(n, std::sqrt(die_area_cm2) / n);
}

}  // namespace oxbar
