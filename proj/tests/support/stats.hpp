#pragma once

#include <cmath>
#include <cstddef>

namespace subcount::testsupport {

// Streaming mean/variance accumulator (Welford).
struct Acc {
  std::size_t n = 0;
  double mu = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++n;
    double d = x - mu;
    mu += d / static_cast<double>(n);
    m2 += d * (x - mu);
  }
  double mean() const { return mu; }
  double var() const { return n > 1 ? m2 / static_cast<double>(n - 1) : 0.0; }
  double sd() const { return std::sqrt(var()); }
  double se() const { return n > 0 ? sd() / std::sqrt(static_cast<double>(n)) : 0.0; }
};

}  // namespace subcount::testsupport
