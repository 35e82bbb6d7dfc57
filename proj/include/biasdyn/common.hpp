#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace biasdyn {

/// Raised when a polarization rate is requested for an initial state that is
/// not strictly on one side of 1/2.
class not_polarized_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a switching schedule violates one of the activity-window
/// conditions it is required to satisfy.
class invalid_schedule_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an interior update divides by zero on a non-isolated node.
class degenerate_node_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when equilibrium-family parameters force a coordinate outside (0,1).
class out_of_family_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Formats a double with 17 significant digits (value round-trips exactly).
inline std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

}  // namespace biasdyn
