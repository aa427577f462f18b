#ifndef SWNET_RNG_HPP
#define SWNET_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace swnet {

// Seeded generator with portable derived operations. mt19937_64 itself is
// pinned by the standard, but uniform_int_distribution / std::shuffle are not,
// so bounded draws and shuffles are implemented here to keep build outputs
// byte-identical across standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next() { return gen_(); }

  // Uniform in [0, bound). Rejection sampling; bound > 0.
  uint64_t below(uint64_t bound) {
    uint64_t reject_below = (-bound) % bound;  // == 2^64 mod bound
    for (;;) {
      uint64_t v = gen_();
      if (v >= reject_below) return v % bound;
    }
  }

  int below_int(int bound) { return static_cast<int>(below(static_cast<uint64_t>(bound))); }

  // Fisher-Yates.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = below(i);
      std::swap(v[i - 1], v[j]);
    }
  }

  // Independent stream seed for chunked work (splitmix64 step over seed^stream).
  static uint64_t substream(uint64_t seed, uint64_t stream) {
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace swnet

#endif
