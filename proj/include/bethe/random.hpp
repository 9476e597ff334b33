#pragma once

#include <cstdint>
#include <random>

namespace bethe {

// mt19937_64 with a platform-independent integer draw (the standard
// distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  // Uniform in [lo, hi].
  long uniform(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = g_();
    } while (x >= limit);
    return lo + static_cast<long>(x % span);
  }
  long nonzero(long lo, long hi) {
    long v;
    do {
      v = uniform(lo, hi);
    } while (v == 0);
    return v;
  }
  std::uint64_t next() { return g_(); }

 private:
  std::mt19937_64 g_;
};

}  // namespace bethe
