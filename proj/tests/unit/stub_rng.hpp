#ifndef PCIA_TESTS_STUB_RNG_HPP
#define PCIA_TESTS_STUB_RNG_HPP

#include <cstddef>
#include <deque>

// Scripted draw source for pinning operator randomness in tests. Each method
// consumes from its own queue; the last value of a queue sticks, so a single
// pushed value pins every subsequent draw.
struct StubRng {
  std::deque<double> u01;
  std::deque<double> sym;
  std::deque<double> gauss;
  std::deque<double> signs;
  std::deque<std::size_t> indices;

  static double take(std::deque<double>& q) {
    const double v = q.front();
    if (q.size() > 1) q.pop_front();
    return v;
  }

  double uniform01() { return take(u01); }
  double uniform(double a, double b) { return a + (b - a) * take(u01); }
  double symmetric() { return take(sym); }
  double normal() { return take(gauss); }
  double sign() { return take(signs); }
  std::size_t index(std::size_t) {
    const std::size_t v = indices.front();
    if (indices.size() > 1) indices.pop_front();
    return v;
  }
};

#endif  // PCIA_TESTS_STUB_RNG_HPP
