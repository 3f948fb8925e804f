#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace ssq {

// splitmix64 step; used to derive decorrelated seeds for substreams.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Seedable reproducible generator. One engine, named so reports can record
// it; substreams for Monte-Carlo batches come from split(), never from
// sharing the engine.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  static constexpr const char* algorithm() { return "mt19937_64"; }
  std::uint64_t seed() const { return seed_; }
  std::mt19937_64& engine() { return engine_; }

  // Independent substream #stream derived from the base seed.
  SeededRng split(std::uint64_t stream) const {
    std::uint64_t s = seed_ + 0x9E3779B97F4A7C15ULL * (stream + 1);
    splitmix64(s);
    return SeededRng(splitmix64(s));
  }

  double uniform() {
    return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
  }

  // Uniform integer in [0, n).
  int uniform_int(int n) {
    return std::uniform_int_distribution<int>(0, n - 1)(engine_);
  }

  double gaussian() {
    return std::normal_distribution<double>(0.0, 1.0)(engine_);
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace ssq
