#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "biasdyn/common.hpp"
#include "biasdyn/graph.hpp"
#include "biasdyn/rng.hpp"
#include "biasdyn/schedule.hpp"

namespace biasdyn {

/// Opinions live in [0,1]^n; every step operation preserves the box.
using OpinionState = std::vector<double>;

inline bool is_valid_state(const OpinionState& x) {
  for (double v : x)
    if (!(v >= 0.0 && v <= 1.0)) return false;
  return true;
}

inline void require_valid_state(const OpinionState& x, int n) {
  if (static_cast<int>(x.size()) != n)
    throw std::invalid_argument("state size must equal node count");
  if (!is_valid_state(x))
    throw std::invalid_argument("state coordinates must lie in [0,1]");
}

/// Mirrored state 1 - x.
inline OpinionState mirror_state(const OpinionState& x) {
  OpinionState m(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) m[i] = 1.0 - x[i];
  return m;
}

/// Per-node bias exponents b_i > 0. b_i -> 0 approaches plain opinion
/// averaging; larger exponents discount evidence far from the node's own
/// opinion more aggressively.
struct BiasVector {
  std::vector<double> values;

  static BiasVector uniform(int n, double b) {
    BiasVector bias{std::vector<double>(static_cast<std::size_t>(n), b)};
    bias.validate();
    return bias;
  }

  void validate() const {
    if (values.empty()) throw std::invalid_argument("bias vector is empty");
    for (double b : values)
      if (!(b > 0.0)) throw std::invalid_argument("bias exponents must be > 0");
  }

  int size() const { return static_cast<int>(values.size()); }
  double operator[](int i) const { return values[static_cast<std::size_t>(i)]; }

  bool is_uniform() const {
    for (double b : values)
      if (b != values.front()) return false;
    return true;
  }
};

/// One-coordinate update: blends the self-anchored opinion with evidence for
/// and against, each discounted by proximity to the node's current opinion.
/// Coordinates at exactly 0 or 1 are fixed points of the map and bypass the
/// formula (its algebraic limit there). Nodes with zero in-degree keep their
/// opinion. The denominator is accumulated as (pro + con) + w_self so the
/// all-1/2 state, where pro == con bitwise, maps to itself exactly.
inline double update_coordinate(double x, double b, double w_self, double degree,
                                double evidence) {
  if (x == 0.0 || x == 1.0) return x;
  if (degree == 0.0) return x;
  const double pro = std::pow(x, b) * evidence;
  const double con = std::pow(1.0 - x, b) * (degree - evidence);
  const double denom = (pro + con) + w_self;
  if (denom == 0.0) throw degenerate_node_error("zero denominator on a non-isolated node");
  return (w_self * x + pro) / denom;
}

/// Evidence s_i = sum of neighbor opinions weighted by influence strength.
/// Accumulated in adjacency order, matching the degree accumulation, so
/// s_i <= d_i holds in floating point.
inline double external_evidence(const WeightedGraph& g, const OpinionState& x, int i) {
  if (i < 0 || i >= g.size()) throw std::invalid_argument("node index out of range");
  double s = 0.0;
  for (const auto& nb : g.neighbors(i)) s += nb.weight * x[static_cast<std::size_t>(nb.node)];
  return s;
}

/// Unchecked in-place step; callers guarantee x is a valid state.
inline void step_static_into(const WeightedGraph& g, const BiasVector& bias,
                             const OpinionState& x, OpinionState& out) {
  const int n = g.size();
  out.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (const auto& nb : g.neighbors(i)) s += nb.weight * x[static_cast<std::size_t>(nb.node)];
    out[static_cast<std::size_t>(i)] =
        update_coordinate(x[static_cast<std::size_t>(i)], bias[i], g.self_weight(i),
                          g.degree(i), s);
  }
}

/// Synchronous update of all opinions on a static graph.
inline OpinionState step_static(const WeightedGraph& g, const BiasVector& bias,
                                const OpinionState& x) {
  require_valid_state(x, g.size());
  if (bias.size() != g.size())
    throw std::invalid_argument("bias size must equal node count");
  OpinionState out;
  step_static_into(g, bias, x, out);
  return out;
}

inline void step_switching_into(const SwitchingSchedule& sched, const BiasVector& bias,
                                const OpinionState& x, std::int64_t t,
                                OpinionState& out) {
  const int n = sched.size();
  const Snapshot& snap = sched.at(t);
  out.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    double d = 0.0;
    for (const auto& a : snap.in_arcs[i]) {
      s += a.weight * x[static_cast<std::size_t>(a.from)];
      d += a.weight;
    }
    out[static_cast<std::size_t>(i)] =
        update_coordinate(x[static_cast<std::size_t>(i)], bias[i],
                          snap.self_weights[i], d, s);
  }
}

/// Synchronous update with the time-t snapshot of a switching network.
inline OpinionState step_switching(const SwitchingSchedule& sched, const BiasVector& bias,
                                   const OpinionState& x, std::int64_t t) {
  require_valid_state(x, sched.size());
  if (bias.size() != sched.size())
    throw std::invalid_argument("bias size must equal node count");
  if (t < 0) throw std::invalid_argument("time must be >= 0");
  OpinionState out;
  step_switching_into(sched, bias, x, t, out);
  return out;
}

/// Time-indexed run of the dynamics, stamped with the network it came from.
struct Trajectory {
  std::vector<OpinionState> states;
  std::uint64_t graph_hash = 0;
  std::vector<double> bias;
  std::optional<std::uint64_t> seed;

  int horizon() const { return static_cast<int>(states.size()) - 1; }
};

namespace detail {
inline double max_abs_diff(const OpinionState& a, const OpinionState& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

template <typename StepInto>
Trajectory simulate_impl(int n, std::uint64_t hash, const BiasVector& bias,
                         const OpinionState& x0, int horizon, double early_stop_eps,
                         StepInto&& step_into) {
  require_valid_state(x0, n);
  if (bias.size() != n) throw std::invalid_argument("bias size must equal node count");
  if (horizon < 0) throw std::invalid_argument("horizon must be >= 0");
  Trajectory traj;
  traj.graph_hash = hash;
  traj.bias = bias.values;
  traj.states.reserve(static_cast<std::size_t>(horizon) + 1);
  traj.states.push_back(x0);
  OpinionState next;
  for (int t = 0; t < horizon; ++t) {
    step_into(traj.states.back(), t, next);
    if (early_stop_eps > 0.0 && max_abs_diff(next, traj.states.back()) < early_stop_eps) {
      traj.states.push_back(next);
      break;
    }
    traj.states.push_back(next);
  }
  return traj;
}
}  // namespace detail

/// Simulates `horizon` steps (trajectory has horizon+1 states). A positive
/// early_stop_eps truncates the run once successive states differ by less
/// than eps in max-norm; the default 0 disables it so envelope checks see
/// full trajectories.
inline Trajectory simulate(const WeightedGraph& g, const BiasVector& bias,
                           const OpinionState& x0, int horizon,
                           double early_stop_eps = 0.0) {
  return detail::simulate_impl(
      g.size(), g.hash(), bias, x0, horizon, early_stop_eps,
      [&](const OpinionState& x, std::int64_t, OpinionState& out) {
        step_static_into(g, bias, x, out);
      });
}

inline Trajectory simulate(const SwitchingSchedule& sched, const BiasVector& bias,
                           const OpinionState& x0, int horizon,
                           double early_stop_eps = 0.0) {
  return detail::simulate_impl(
      sched.size(), sched.hash(), bias, x0, horizon, early_stop_eps,
      [&](const OpinionState& x, std::int64_t t, OpinionState& out) {
        step_switching_into(sched, bias, x, t, out);
      });
}

/// Evidence fraction at which an interior opinion is stationary: the opinion
/// rises when s_i/d_i exceeds it and falls when below.
inline double invariance_potential(double x, double b) {
  if (!(x > 0.0 && x < 1.0))
    throw std::domain_error("invariance potential requires x in (0,1)");
  if (!(b > 0.0)) throw std::invalid_argument("bias exponent must be > 0");
  const double against = std::pow(1.0 - x, b - 1.0);
  const double own = std::pow(x, b - 1.0);
  return against / (own + against);
}

enum class DriftSign { Increase, Fixed, Decrease };

/// Trichotomy of the one-step change of an interior coordinate. The Fixed
/// band |s_i/d_i - s*| <= 1e-12 makes the verdict total in floating point.
inline DriftSign drift_sign(const WeightedGraph& g, const BiasVector& bias,
                            const OpinionState& x, int i) {
  require_valid_state(x, g.size());
  const double xi = x[static_cast<std::size_t>(i)];
  if (!(xi > 0.0 && xi < 1.0))
    throw std::domain_error("drift sign requires an interior coordinate");
  const double d = g.degree(i);
  if (d == 0.0) return DriftSign::Fixed;  // isolated nodes never move
  const double ratio = external_evidence(g, x, i) / d;
  const double target = invariance_potential(xi, bias[i]);
  const double tol = 1e-12 * std::max(1.0, std::abs(target));
  if (std::abs(ratio - target) <= tol) return DriftSign::Fixed;
  return ratio > target ? DriftSign::Increase : DriftSign::Decrease;
}

/// Uniform bias draws in (lo, hi]; the open lower end keeps exponents > 0.
inline BiasVector random_bias(Rng& rng, int n, double lo = 0.0, double hi = 4.0) {
  BiasVector bias;
  bias.values.resize(static_cast<std::size_t>(n));
  for (auto& b : bias.values) b = hi - (hi - lo) * rng.next_unit();
  return bias;
}

inline OpinionState random_state(Rng& rng, int n, double lo = 0.0, double hi = 1.0) {
  OpinionState x(static_cast<std::size_t>(n));
  for (auto& v : x) v = rng.uniform(lo, hi);
  return x;
}

}  // namespace biasdyn
