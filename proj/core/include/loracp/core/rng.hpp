#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace loracp {

/// Deterministic labeled random stream. Every stochastic decision in a run
/// draws from a stream derived from (scenario seed, label), so traces are a
/// pure function of the scenario. mt19937_64 output and the hand-rolled
/// distributions below are fully specified, which keeps runs reproducible
/// across compilers and platforms (std::*_distribution is not).
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::string_view label);

  /// Uniform in [0, 1) with 53-bit resolution.
  double uniform01();

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi);

  /// Uniform integer in [lo, hi] (inclusive), unbiased via rejection.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  bool bernoulli(double p);

  /// N(mean, sigma) via the polar method.
  double gaussian(double mean, double sigma);

  /// N(mean, sigma) truncated to [mean - k*sigma, mean + k*sigma].
  double gaussian_trunc(double mean, double sigma, double k);

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// 64-bit FNV-1a over the label, mixed with the seed. Distinct labels give
/// statistically independent streams for the same scenario seed.
std::uint64_t derive_stream_seed(std::uint64_t seed, std::string_view label);

}  // namespace loracp
