#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace graphprompt {

// Deterministic RNG wrapper. All randomness in the library flows through this
// class so that a (seed, call sequence) pair fully determines every draw,
// independent of platform or standard-library distribution internals.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next() { return gen_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n). Rejection sampling keeps the draw unbiased.
  int uniform_int(int n) {
    const uint64_t bound = static_cast<uint64_t>(n);
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return static_cast<int>(x % bound);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
      std::swap(v[i], v[uniform_int(i + 1)]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

// FNV-1a over the label, mixed with the base seed and an index. Used to fan a
// master seed out to independent component streams: changing one stage's
// label or index never perturbs the others.
inline uint64_t mix_seed(uint64_t base, std::string_view label, uint64_t index = 0) {
  uint64_t h = 1469598103934665603ull;
  auto eat = [&h](uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  eat(base);
  for (char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  eat(index);
  return h;
}

}  // namespace graphprompt
