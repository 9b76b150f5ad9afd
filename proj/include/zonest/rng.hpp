#ifndef ZONEST_RNG_HPP_
#define ZONEST_RNG_HPP_

#include <cstdint>
#include <initializer_list>
#include <random>

namespace zonest {

/// splitmix64 step; used to mix seeds and salts into independent streams.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed,
                                 std::initializer_list<std::uint64_t> salts) {
  std::uint64_t s = mix64(seed);
  for (std::uint64_t v : salts) s = mix64(s ^ v);
  return s;
}

/// Deterministic uniform stream. Doubles are produced from raw mt19937_64
/// output rather than std::uniform_real_distribution, whose mapping is
/// implementation defined.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : gen_(seed) {}

  RngStream(std::uint64_t seed, std::initializer_list<std::uint64_t> salts)
      : gen_(derive_seed(seed, salts)) {}

  std::uint64_t bits() { return gen_(); }

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform in [-1, 1].
  double symmetric() { return uniform(-1.0, 1.0); }

  std::uint64_t integer(std::uint64_t n) { return gen_() % n; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace zonest

#endif  // ZONEST_RNG_HPP_
