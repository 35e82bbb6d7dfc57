#pragma once

#include <cstdint>
#include <random>

namespace biasdyn {

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}
}  // namespace detail

/// Derives an independent child seed from a master seed and up to three salts.
/// Used to key per-case, per-vertex and per-trial generators so results do not
/// depend on scheduling order.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t salt_a,
                                 std::uint64_t salt_b = 0,
                                 std::uint64_t salt_c = 0) {
  std::uint64_t s = master;
  detail::splitmix64(s);
  s ^= salt_a;
  detail::splitmix64(s);
  s ^= salt_b;
  detail::splitmix64(s);
  s ^= salt_c;
  return detail::splitmix64(s);
}

/// Seeded generator wrapping std::mt19937_64. Floating-point draws are built
/// from raw bits so streams are reproducible independent of the standard
/// library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1) with 53-bit resolution.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  /// Uniform integer in [lo, hi] inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    const auto wide = static_cast<unsigned __int128>(next_u64()) * range;
    return lo + static_cast<std::int64_t>(wide >> 64);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace biasdyn
