#ifndef GEOCONGEST_RNG_HPP
#define GEOCONGEST_RNG_HPP

#include <cstdint>
#include <random>

namespace geocongest {

/// Seeded 64-bit Mersenne Twister with independent substreams.
///
/// A (seed, stream) pair is expanded through std::seed_seq, so trial t of a
/// sweep can use stream t without correlating with its neighbours.
class Rng {
 public:
  using Engine = std::mt19937_64;
  using result_type = Engine::result_type;

  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream),
                      static_cast<std::uint32_t>(stream >> 32), 0x9e3779b9u};
    engine_.seed(seq);
  }

  static constexpr result_type min() { return Engine::min(); }
  static constexpr result_type max() { return Engine::max(); }
  result_type operator()() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_);
  }

  bool bernoulli(double p) { return uniform() < p; }

  Engine& engine() { return engine_; }

 private:
  Engine engine_;
};

}  // namespace geocongest

#endif  // GEOCONGEST_RNG_HPP
