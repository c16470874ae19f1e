#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cgedit {

// Seedable generator with platform-independent output.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the standard. The standard
// distributions are not, so bounded integers use rejection sampling and reals use the top 53 bits.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [lo, hi].
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    if (hi < lo) throw std::invalid_argument("Rng::uniform: empty range");
    const std::uint64_t span = hi - lo;
    if (span == ~std::uint64_t{0}) return next();
    const std::uint64_t range = span + 1;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range + 1) % range;
    std::uint64_t x;
    do x = next();
    while (x > limit);
    return lo + x % range;
  }
  int uniform_int(int lo, int hi) {
    return static_cast<int>(static_cast<std::int64_t>(lo) +
                            static_cast<std::int64_t>(uniform(0, static_cast<std::uint64_t>(
                                                                     static_cast<std::int64_t>(hi) - lo))));
  }
  std::size_t index(std::size_t size) { return static_cast<std::size_t>(uniform(0, size - 1)); }

  // Uniform real in [0, 1).
  double uniform_real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform_real() < p; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[index(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cgedit
