#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace pcd {

/// SplitMix64 finalizer; used to derive independent stream keys.
std::uint64_t mix64(std::uint64_t x);

/// Derives a stream key from a root seed and a path of indices, e.g.
/// (seed, n, replicate). Equal paths always give equal keys.
std::uint64_t derive_key(std::uint64_t seed, std::initializer_list<std::uint64_t> path);

/// A seeded random stream. Each replicate owns one, keyed by derive_key, so
/// results never depend on which thread ran it.
class Stream {
 public:
  explicit Stream(std::uint64_t key) : engine_(mix64(key)) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0,1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform on (0,1].
  double uniform_open0() { return 1.0 - uniform(); }
  /// Standard exponential.
  double exponential();

 private:
  std::mt19937_64 engine_;
};

}  // namespace pcd
