#include "loracp/core/rng.hpp"

#include <cmath>

namespace loracp {

std::uint64_t derive_stream_seed(std::uint64_t seed, std::string_view label) {
  std::uint64_t h = 1469598103934665603ull;  // FNV offset basis
  for (unsigned char c : label) {
    h ^= c;
    h *= 1099511628211ull;  // FNV prime
  }
  // splitmix64 finalizer over (hash ^ seed) to decorrelate nearby seeds.
  std::uint64_t z = h ^ (seed + 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

RngStream::RngStream(std::uint64_t seed, std::string_view label)
    : engine_(derive_stream_seed(seed, label)) {}

double RngStream::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform01();
}

std::int64_t RngStream::uniform_int(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

bool RngStream::bernoulli(double p) { return uniform01() < p; }

double RngStream::gaussian(double mean, double sigma) {
  if (has_spare_) {
    has_spare_ = false;
    return mean + sigma * spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform01() - 1.0;
    v = 2.0 * uniform01() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double m = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * m;
  has_spare_ = true;
  return mean + sigma * u * m;
}

double RngStream::gaussian_trunc(double mean, double sigma, double k) {
  if (sigma <= 0.0) return mean;
  double x;
  do {
    x = gaussian(0.0, 1.0);
  } while (std::abs(x) > k);
  return mean + sigma * x;
}

}  // namespace loracp
