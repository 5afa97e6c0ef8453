#ifndef MAPGLUE_RANDOM_HPP
#define MAPGLUE_RANDOM_HPP

#include <cstdint>

namespace mapglue {

// SplitMix64. Streams are addressed by (seed, index) so that draw i never
// depends on how many draws were made before it.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index)
  {
    SplitMix64 g(seed);
    const std::uint64_t base = g.next();
    return SplitMix64(base ^ mix(index + 0x632be59bd9b4e019ULL));
  }

  std::uint64_t next()
  {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  // Uniform on [0, bound), bound > 0. Rejection keeps it exact.
  std::uint64_t below(std::uint64_t bound)
  {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

private:
  static std::uint64_t mix(std::uint64_t z)
  {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

} // namespace mapglue

#endif // MAPGLUE_RANDOM_HPP
