#pragma once
#include <cmath>
#include <cstdint>

namespace rma {

// xoshiro256++ seeded through splitmix64. Every stochastic component owns a
// stream derived from (seed, stream ids), so results never depend on worker
// scheduling or thread count.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& s : s_) s = splitmix64(x);
  }

  static Rng derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0) {
    std::uint64_t x = seed;
    std::uint64_t h = splitmix64(x);
    x ^= a + 0x9e3779b97f4a7c15ULL;
    h ^= splitmix64(x);
    x ^= b + 0xbf58476d1ce4e5b9ULL;
    h ^= splitmix64(x);
    x ^= c + 0x94d049bb133111ebULL;
    h ^= splitmix64(x);
    return Rng(h);
  }

  std::uint64_t next_u64() {
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

  // [0, 1)
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  // standard normal via Box-Muller; two fresh uniforms per call
  double normal() {
    double u1 = 0.0;
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  // [0, n)
  int uniform_int(int n) { return static_cast<int>(next_u64() % static_cast<std::uint64_t>(n)); }

  bool bernoulli(double p) { return uniform01() < p; }

 private:
  static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

  static std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t s_[4];
};

}  // namespace rma
