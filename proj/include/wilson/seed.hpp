#ifndef WILSON_SEED_HPP_
#define WILSON_SEED_HPP_

#include <cstdint>

namespace wilson {

  constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  //! Stable per-unit seed derived from the run seed.
  constexpr std::uint64_t derive_seed(std::uint64_t seed,
                                      std::uint64_t a,
                                      std::uint64_t b = 0,
                                      std::uint64_t c = 0) noexcept {
    std::uint64_t h = splitmix64(seed);
    h               = splitmix64(h ^ a);
    h               = splitmix64(h ^ b);
    return splitmix64(h ^ c);
  }

}  // namespace wilson

#endif  // WILSON_SEED_HPP_
