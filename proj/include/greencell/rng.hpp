#pragma once

#include <cstdint>
#include <random>

namespace greencell {

using Rng64 = std::mt19937_64;

// SplitMix64 finalizer; good enough to decorrelate counter-derived seeds.
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// One stream per random concern so that toggling a feature (CoMP mode,
// sharing, ...) never perturbs the draws consumed by the others.
enum class Stream : uint64_t {
  UePositions = 1,
  RbAssignment = 2,
  Shadowing = 3,
  LoadFactors = 4,
  SolarFactors = 5,
  SinrSampling = 6,
};

inline uint64_t iteration_seed(uint64_t master_seed, uint64_t iteration) {
  return splitmix64(master_seed ^ splitmix64(iteration + 1));
}

inline Rng64 substream(uint64_t iter_seed, Stream s) {
  return Rng64(splitmix64(iter_seed ^ (static_cast<uint64_t>(s) * 0x51ED2700F77208E5ULL)));
}

}  // namespace greencell
