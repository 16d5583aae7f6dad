#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace nmc::rng {

using Engine = std::mt19937_64;

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Derives an independent stream seed from (seed, stream name, index) so that
// one user-facing --seed drives every source of randomness.
inline std::uint64_t sub_seed(std::uint64_t seed, std::string_view stream,
                              std::uint64_t index = 0) {
  std::uint64_t h = splitmix64(seed);
  for (char c : stream) h = splitmix64(h ^ static_cast<std::uint64_t>(static_cast<unsigned char>(c)));
  return splitmix64(h ^ index);
}

// [0,1) with 53 random bits. std::uniform_real_distribution is
// implementation-defined; this is not.
inline double uniform01(Engine& eng) { return (eng() >> 11) * 0x1.0p-53; }

// Unbiased integer in [0, n), n >= 1. Rejection sampling, portable output.
inline std::uint64_t below(Engine& eng, std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x;
  do {
    x = eng();
  } while (x >= limit);
  return x % n;
}

// Fisher-Yates; same caveat as above about std::shuffle.
template <typename T>
void shuffle(std::vector<T>& v, Engine& eng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[below(eng, i)]);
  }
}

}  // namespace nmc::rng
