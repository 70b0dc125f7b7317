#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace sarsim {

/// splitmix64 finalizer; mixes words into well-spread engine seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Deterministic seed derivation: fold every word through splitmix64.
inline std::uint64_t seed_mix(std::initializer_list<std::uint64_t> words) {
  std::uint64_t h = 0x53415253494d5345ull;
  for (auto w : words) h = splitmix64(h ^ w);
  return h;
}

inline std::mt19937_64 make_engine(std::uint64_t seed) {
  return std::mt19937_64(splitmix64(seed));
}

}  // namespace sarsim
