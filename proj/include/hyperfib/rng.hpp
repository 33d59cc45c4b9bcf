#ifndef HYPERFIB_RNG_HPP
#define HYPERFIB_RNG_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace hyperfib {

// Counter-based 64-bit generator (splitmix64). The whole stream is a pure
// function of (seed, counter), so sequences are reproducible across
// platforms and languages.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Unbiased integer in [0, n) via rejection sampling.
  std::uint64_t next_below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  // Uniform double in [0, 1) with 53 bits of precision.
  double next_double() { return (next() >> 11) * 0x1.0p-53; }

  // Independent stream for worker `index` under the same master seed.
  static SplitMix64 derive(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mixer(seed ^ (index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
    return SplitMix64(mixer.next());
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(next_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace hyperfib

#endif
