#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "biasdyn/graph.hpp"
#include "biasdyn/rng.hpp"

namespace biasdyn {

/// Directed influence (from -> node holding the list) with weight w_ij(t).
struct Arc {
  int from;
  double weight;
};

/// One time step of a switching network: per-node incoming arcs and
/// self-weights.
struct Snapshot {
  std::vector<std::vector<Arc>> in_arcs;
  std::vector<double> self_weights;

  double in_degree(int i) const {
    double d = 0.0;
    for (const auto& a : in_arcs[i]) d += a.weight;
    return d;
  }
};

/// Time-varying directed network. A finite list of snapshots is replayed
/// periodically, which keeps experiments reproducible. Carries the activity
/// window T, the positive weight floor c and per-node self-weight caps that
/// the schedule is supposed to respect; validate_schedule checks them.
class SwitchingSchedule {
 public:
  SwitchingSchedule(int n, std::vector<Snapshot> frames, int period_T,
                    double weight_floor_c, std::vector<double> self_weight_caps)
      : n_(n),
        frames_(std::move(frames)),
        period_(period_T),
        weight_floor_(weight_floor_c),
        caps_(std::move(self_weight_caps)) {
    if (n_ < 2) throw std::invalid_argument("schedule needs at least 2 nodes");
    if (frames_.empty()) throw std::invalid_argument("schedule needs at least one snapshot");
    if (period_ < 1) throw std::invalid_argument("activity window T must be >= 1");
    if (!(weight_floor_ > 0.0)) throw std::invalid_argument("weight floor c must be > 0");
    if (static_cast<int>(caps_.size()) != n_)
      throw std::invalid_argument("self-weight cap count must equal node count");
    for (double c : caps_)
      if (!(c >= 0.0)) throw std::invalid_argument("self-weight caps must be >= 0");
    for (const auto& f : frames_) {
      if (static_cast<int>(f.in_arcs.size()) != n_ ||
          static_cast<int>(f.self_weights.size()) != n_)
        throw std::invalid_argument("snapshot size must equal node count");
      for (int i = 0; i < n_; ++i) {
        if (!(f.self_weights[i] >= 0.0))
          throw std::invalid_argument("snapshot self-weights must be >= 0");
        for (const auto& a : f.in_arcs[i]) {
          if (a.from == i) throw std::invalid_argument("self-arcs are not allowed");
          if (a.from < 0 || a.from >= n_)
            throw std::invalid_argument("arc source out of range");
          if (!(a.weight > 0.0)) throw std::invalid_argument("arc weights must be > 0");
        }
      }
    }
  }

  /// Views a static undirected graph as a constant schedule (each edge becomes
  /// two arcs). Passes validation for any T >= 1 and c <= min_i d_i.
  static SwitchingSchedule constant(const WeightedGraph& g, int period_T = 1,
                                    std::optional<double> weight_floor = {}) {
    const int n = g.size();
    Snapshot snap;
    snap.in_arcs.assign(n, {});
    snap.self_weights.resize(n);
    for (int i = 0; i < n; ++i) {
      snap.self_weights[i] = g.self_weight(i);
      for (const auto& nb : g.neighbors(i)) snap.in_arcs[i].push_back({nb.node, nb.weight});
    }
    const double c = weight_floor.value_or(g.min_degree());
    return SwitchingSchedule(n, {std::move(snap)}, period_T, c, g.self_weights());
  }

  /// Round-robin activity: node i receives a single arc from its cyclic
  /// successor at times t with t mod T == i mod T. Every node is active once
  /// in every window of length T.
  static SwitchingSchedule round_robin(int n, int period_T, double arc_weight = 1.0,
                                       double self_weight = 1.0) {
    if (n < 2) throw std::invalid_argument("schedule needs at least 2 nodes");
    if (period_T < 1) throw std::invalid_argument("activity window T must be >= 1");
    if (!(arc_weight > 0.0)) throw std::invalid_argument("arc weight must be > 0");
    std::vector<Snapshot> frames(period_T);
    for (int r = 0; r < period_T; ++r) {
      frames[r].in_arcs.assign(n, {});
      frames[r].self_weights.assign(n, self_weight);
      for (int i = 0; i < n; ++i)
        if (i % period_T == r) frames[r].in_arcs[i].push_back({(i + 1) % n, arc_weight});
    }
    return SwitchingSchedule(n, std::move(frames), period_T, arc_weight,
                             std::vector<double>(n, self_weight));
  }

  /// Seeded random periodic schedule: each node gets one guaranteed arc per
  /// window at a random phase, plus extra random arcs; weights in [c, 2c].
  static SwitchingSchedule random_periodic(int n, int period_T, std::uint64_t seed,
                                           double weight_floor = 1.0,
                                           double self_weight_cap = 1.0,
                                           double extra_arc_prob = 0.3) {
    if (n < 2) throw std::invalid_argument("schedule needs at least 2 nodes");
    if (period_T < 1) throw std::invalid_argument("activity window T must be >= 1");
    Rng rng(seed);
    std::vector<Snapshot> frames(period_T);
    for (auto& f : frames) {
      f.in_arcs.assign(n, {});
      f.self_weights.resize(n);
      for (auto& w : f.self_weights) w = rng.uniform(0.0, self_weight_cap);
    }
    auto other_node = [&](int i) {
      int j = static_cast<int>(rng.uniform_int(0, n - 2));
      return j >= i ? j + 1 : j;
    };
    for (int i = 0; i < n; ++i) {
      const int phase = static_cast<int>(rng.uniform_int(0, period_T - 1));
      frames[phase].in_arcs[i].push_back(
          {other_node(i), rng.uniform(weight_floor, 2.0 * weight_floor)});
    }
    for (int r = 0; r < period_T; ++r)
      for (int i = 0; i < n; ++i)
        if (rng.next_unit() < extra_arc_prob)
          frames[r].in_arcs[i].push_back(
              {other_node(i), rng.uniform(weight_floor, 2.0 * weight_floor)});
    return SwitchingSchedule(n, std::move(frames), period_T, weight_floor,
                             std::vector<double>(n, self_weight_cap));
  }

  int size() const { return n_; }
  int period() const { return period_; }
  double weight_floor() const { return weight_floor_; }
  const std::vector<double>& self_weight_caps() const { return caps_; }
  int cycle_length() const { return static_cast<int>(frames_.size()); }
  const Snapshot& at(std::int64_t t) const {
    return frames_[static_cast<std::size_t>(t % cycle_length())];
  }

  std::uint64_t hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&h](std::uint64_t v) {
      for (int k = 0; k < 8; ++k) {
        h ^= (v >> (8 * k)) & 0xff;
        h *= 0x100000001b3ull;
      }
    };
    auto mix_double = [&](double d) {
      std::uint64_t bits;
      __builtin_memcpy(&bits, &d, sizeof(bits));
      mix(bits);
    };
    mix(static_cast<std::uint64_t>(n_));
    mix(static_cast<std::uint64_t>(period_));
    mix_double(weight_floor_);
    for (double c : caps_) mix_double(c);
    for (const auto& f : frames_)
      for (int i = 0; i < n_; ++i) {
        mix_double(f.self_weights[i]);
        for (const auto& a : f.in_arcs[i]) {
          mix(static_cast<std::uint64_t>(a.from));
          mix_double(a.weight);
        }
      }
    return h;
  }

 private:
  int n_;
  std::vector<Snapshot> frames_;
  int period_;
  double weight_floor_;
  std::vector<double> caps_;
};

struct ScheduleViolation {
  std::int64_t t;
  int node;  // 0-based
};

/// Outcome of checking the three schedule conditions over a horizon:
/// (i) self-weights below their caps, (ii) positive in-degrees at least the
/// weight floor, (iii) every node active within every window of length T.
struct ScheduleValidation {
  std::optional<ScheduleViolation> cap_violation;
  std::optional<ScheduleViolation> floor_violation;
  std::optional<ScheduleViolation> activity_violation;

  bool pass() const {
    return !cap_violation && !floor_violation && !activity_violation;
  }
};

inline ScheduleValidation validate_schedule(const SwitchingSchedule& sched,
                                            std::int64_t horizon) {
  if (horizon < sched.period())
    throw std::invalid_argument("validation horizon must be >= the window T");
  ScheduleValidation report;
  const int n = sched.size();
  const int T = sched.period();
  for (std::int64_t t = 0; t <= horizon; ++t) {
    const Snapshot& snap = sched.at(t);
    for (int i = 0; i < n; ++i) {
      if (!report.cap_violation && snap.self_weights[i] > sched.self_weight_caps()[i])
        report.cap_violation = ScheduleViolation{t, i};
      const double d = snap.in_degree(i);
      if (!report.floor_violation && d > 0.0 && d < sched.weight_floor())
        report.floor_violation = ScheduleViolation{t, i};
      if (!report.activity_violation) {
        double window = 0.0;
        for (int s = 0; s < T; ++s) window += sched.at(t + s).in_degree(i);
        if (!(window > 0.0)) report.activity_violation = ScheduleViolation{t, i};
      }
    }
  }
  return report;
}

}  // namespace biasdyn
