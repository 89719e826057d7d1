#include "pframe/rng.hpp"

#include <cmath>

namespace pframe {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::mt19937_64 stream_engine(std::uint64_t seed, std::uint64_t stream) {
  return std::mt19937_64(splitmix64(seed + (stream + 1) * 0x9E3779B97F4A7C15ULL));
}

double uniform01(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

double gaussian(std::mt19937_64& eng) {
  const double u1 = (static_cast<double>(eng() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
  const double u2 = static_cast<double>(eng() >> 11) * 0x1.0p-53;         // [0, 1)
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

Configuration random_configuration(std::size_t d, std::size_t n, std::mt19937_64& eng) {
  Configuration x(d, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto v = x.vec(i);
    double sq = 0.0;
    do {
      sq = 0.0;
      for (std::size_t k = 0; k < d; ++k) {
        v[k] = gaussian(eng);
        sq += v[k] * v[k];
      }
    } while (sq < 1e-18);
    const double inv = 1.0 / std::sqrt(sq);
    for (std::size_t k = 0; k < d; ++k) v[k] *= inv;
  }
  return x;
}

}  // namespace pframe
