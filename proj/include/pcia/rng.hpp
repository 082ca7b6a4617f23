#ifndef PCIA_RNG_HPP
#define PCIA_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace pcia {

// Deterministic draw stream. The generator is std::mt19937_64 (bit-exact by
// the standard) and every mapping below is spelled out here instead of using
// std::*_distribution, whose output differs between standard libraries:
//
//   uniform01()    one 64-bit word, top 53 bits scaled to [0,1)
//   uniform(a,b)   a + (b-a) * uniform01()
//   symmetric()    uniform(-1,1)
//   index(n)       floor(uniform01() * n), clamped to n-1
//   normal()       Box-Muller, consumes exactly two uniform01() draws
//   sign()         +1 if uniform01() >= 0.5 else -1
//
// Identical seeds therefore yield identical draw sequences on any platform.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : gen_(seed) {}

  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  double symmetric() { return uniform(-1.0, 1.0); }

  std::size_t index(std::size_t n) {
    const auto k = static_cast<std::size_t>(uniform01() * static_cast<double>(n));
    return k < n ? k : n - 1;
  }

  double normal() {
    const double u1 = 1.0 - uniform01();  // (0,1], keeps the log finite
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
  }

  double sign() { return uniform01() < 0.5 ? -1.0 : 1.0; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace pcia

#endif  // PCIA_RNG_HPP
