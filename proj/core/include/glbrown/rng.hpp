#pragma once

#include <cmath>
#include <cstdint>

namespace glbrown {

// xoshiro256++ with splitmix64 seeding.  Hand-rolled so that streams are
// bit-identical across platforms and standard-library versions; substreams
// keyed by (seed, stream) make Monte Carlo results independent of thread
// scheduling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) { seed_state(seed); }

  static Rng substream(std::uint64_t seed, std::uint64_t stream) {
    Rng r(0);
    std::uint64_t x = seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1));
    r.seed_state(splitmix(x));
    return r;
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // uniform in [0, 1) with 53 random bits
  double uniform() { return double(next() >> 11) * 0x1.0p-53; }

  // standard normal via Marsaglia polar; second value cached
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u, v, q;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      q = u * u + v * v;
    } while (q >= 1.0 || q == 0.0);
    const double f = std::sqrt(-2.0 * std::log(q) / q);
    spare_ = v * f;
    have_spare_ = true;
    return u * f;
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  static std::uint64_t splitmix(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  void seed_state(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& s : s_) s = splitmix(x);
    have_spare_ = false;
  }

  std::uint64_t s_[4] = {};
  double spare_ = 0;
  bool have_spare_ = false;
};

}  // namespace glbrown
