// rng.hpp — seeded random streams with deterministic per-chain substreams.
//
// Every stochastic routine in the library takes an explicit Rng.  Parallel
// work derives one substream per work item from (master seed, item index),
// so results are byte-identical regardless of thread count.

#pragma once

#include <cstdint>

namespace ellrmt {

// SplitMix64: used both as a seed scrambler and as the stream generator.
// Small state, passes BigCrush, and trivially reproducible across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0,1).  53-bit mantissa, identical on every IEEE platform.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [-w, w).
  double uniform_sym(double w) { return (2.0 * uniform() - 1.0) * w; }

  // Substream for work item `index` under master seed `seed`.
  static Rng substream(std::uint64_t seed, std::uint64_t index) {
    Rng mix(seed ^ (0xd1342543de82ef95ULL * (index + 1)));
    // burn a few outputs so nearby indices decorrelate fully
    mix.next_u64();
    mix.next_u64();
    return Rng(mix.next_u64());
  }

 private:
  std::uint64_t state_;
};

}  // namespace ellrmt
