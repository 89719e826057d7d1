#pragma once

#include "pframe/configs.hpp"

#include <cstdint>
#include <random>

namespace pframe {

/// SplitMix64 finalizer; used to spread user seeds into engine seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Stream-splitting rule: restart (or any parallel stream) r of a run
/// with base seed s draws from mt19937_64 seeded with
/// splitmix64(s + (r + 1) * 0x9E3779B97F4A7C15). mt19937_64 output is
/// specified by the standard, so streams are identical on every platform.
std::mt19937_64 stream_engine(std::uint64_t seed, std::uint64_t stream);

/// Uniform double in [0, 1) from the top 53 bits of one engine draw.
double uniform01(std::mt19937_64& eng);

/// Standard normal via Box-Muller on explicit uniforms (two draws per
/// sample; no reliance on implementation-defined std distributions).
double gaussian(std::mt19937_64& eng);

/// N independent draws from the rotation-invariant distribution on
/// S^(d-1) (normalized Gaussian vectors).
Configuration random_configuration(std::size_t d, std::size_t n, std::mt19937_64& eng);

}  // namespace pframe
