#pragma once

#include <cstdint>
#include <random>

namespace quadlab {

using Rng = std::mt19937_64;

/// splitmix64 finalizer.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Stream splitting rule: every consumer of randomness gets its own engine,
/// seeded with splitmix64(splitmix64(run_seed) ^ splitmix64(stream_id + 1)).
/// Results therefore do not depend on how streams are mapped to workers.
inline std::uint64_t stream_seed(std::uint64_t run_seed, std::uint64_t stream_id) {
  return splitmix64(splitmix64(run_seed) ^ splitmix64(stream_id + 1));
}

inline Rng make_stream(std::uint64_t run_seed, std::uint64_t stream_id) { return Rng(stream_seed(run_seed, stream_id)); }

// Named stream ids. Environment i uses kEnvStreamBase + i.
inline constexpr std::uint64_t kInitStream = 1;
inline constexpr std::uint64_t kMinibatchStream = 2;
inline constexpr std::uint64_t kEvalStreamBase = 1ULL << 40;
inline constexpr std::uint64_t kEnvStreamBase = 1ULL << 20;

/// Uniform double in [0, 1) from the top 53 bits.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline double uniform(Rng& rng, double lo, double hi) { return lo + (hi - lo) * uniform01(rng); }

inline double standard_normal(Rng& rng) { return std::normal_distribution<double>(0.0, 1.0)(rng); }

}  // namespace quadlab
