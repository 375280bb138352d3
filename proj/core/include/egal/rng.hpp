#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <numbers>

namespace egal {

/// Seedable, platform-independent pseudo random generator (xoshiro256**).
///
/// State is expanded from a 64-bit seed with SplitMix64. Independent
/// substreams are obtained with `Rng::stream(seed, {k0, k1, ...})`, which
/// folds every key into the seed through SplitMix64 finalisation; two
/// different key tuples give unrelated streams. Algorithms in this library
/// key their streams by logical position (generation and individual, sigma
/// index and replicate, ...) so results do not depend on evaluation order.
///
/// All derived variates are computed here rather than through <random>
/// distributions, whose output is implementation-defined.
class Rng
{
public:
  using result_type = std::uint64_t;

  static constexpr const char* kAlgorithm = "xoshiro256**/splitmix64";
  static constexpr const char* kNormalSampler = "box-muller";

  explicit Rng(std::uint64_t seed = 0) noexcept
  {
    std::uint64_t x = seed;
    for (auto& s : state_)
    {
      s = splitmix64(x);
    }
  }

  static Rng stream(std::uint64_t seed, std::initializer_list<std::uint64_t> keys) noexcept
  {
    std::uint64_t h = seed;
    std::uint64_t mixed = splitmix64(h);
    for (auto k : keys)
    {
      h = mixed ^ (k + 0x632be59bd9b4e019ULL);
      mixed = splitmix64(h);
    }
    return Rng{mixed};
  }

  static constexpr result_type min() noexcept
  {
    return 0;
  }
  static constexpr result_type max() noexcept
  {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept
  {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() noexcept
  {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) noexcept
  {
    return lo + (hi - lo) * uniform01();
  }

  /// Uniform integer in [0, n), unbiased (modulo with rejection of the
  /// short lowest band).
  std::uint64_t below(std::uint64_t n) noexcept
  {
    if (n <= 1)
    {
      return 0;
    }
    const std::uint64_t threshold = (0 - n) % n;
    std::uint64_t x = (*this)();
    while (x < threshold)
    {
      x = (*this)();
    }
    return x % n;
  }

  bool bernoulli(double p) noexcept
  {
    return uniform01() < p;
  }

  /// Standard normal via the basic Box-Muller transform (cosine branch only).
  double normal() noexcept
  {
    const double u1 = 1.0 - uniform01();  // (0, 1]
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  double normal(double mean, double sd) noexcept
  {
    if (sd == 0.0)
    {
      return mean;
    }
    return mean + sd * normal();
  }

private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept
  {
    return (x << k) | (x >> (64 - k));
  }

  static constexpr std::uint64_t splitmix64(std::uint64_t& x) noexcept
  {
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_[4]{};
};

}  // namespace egal
