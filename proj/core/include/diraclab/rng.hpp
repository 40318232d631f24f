#pragma once

#include <array>
#include <cstdint>

namespace diraclab::rng {

/** Philox2x64-10: a counter-based generator.  Each (key, counter) pair maps
 *  to two independent 64-bit words through ten bijective rounds, so streams
 *  are random-access and trivially parallel: we key by seed and counter by
 *  (walker index, draw index). */
struct Philox2x64 {
  static constexpr std::uint64_t kMultiplier = 0xD2B74407B1CE6E93ull;
  static constexpr std::uint64_t kKeyBump = 0x9E3779B97F4A7C15ull;

  static std::array<std::uint64_t, 2> block(std::uint64_t key, std::uint64_t c0, std::uint64_t c1) {
    std::uint64_t x0 = c0, x1 = c1;
    for (int round = 0; round < 10; ++round) {
      const unsigned __int128 prod = static_cast<unsigned __int128>(kMultiplier) * x0;
      const std::uint64_t hi = static_cast<std::uint64_t>(prod >> 64);
      const std::uint64_t lo = static_cast<std::uint64_t>(prod);
      x0 = hi ^ key ^ x1;
      x1 = lo;
      key += kKeyBump;
    }
    return {x0, x1};
  }
};

/** Uniform double in [0, 1) from the top 53 bits of a word. */
inline double uniform01(std::uint64_t word) {
  return static_cast<double>(word >> 11) * 0x1.0p-53;
}

}  // namespace diraclab::rng
