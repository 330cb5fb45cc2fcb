#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace ldlab {

/// splitmix64 finalizer; used to derive independent per-trial seeds.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return mix64(mix64(seed) ^ (index * 0xD1B54A32D192ED03ull));
}

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) without modulo bias.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// A uniformly random m-subset of {0..n-1}, sorted ascending.
std::vector<std::size_t> sample_subset(Rng& rng, std::size_t n, std::size_t m);

}  // namespace ldlab
