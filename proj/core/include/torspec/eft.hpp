#pragma once

#include <cmath>
#include <cstddef>
#include <span>

// Error-free transforms and compensated sums/dot products.
// The exceptional-pair search resolves |B(u1,u2)| at scales ~1e-7 against
// terms of size ~1; a naive dot product loses those digits.

namespace torspec {

struct TwoFold {
  double value = 0.0;
  double err = 0.0;
  double result() const { return value + err; }
};

/// Knuth two-sum: a + b = s + err exactly.
inline TwoFold two_sum(double a, double b) {
  const double s = a + b;
  const double bv = s - a;
  const double err = (a - (s - bv)) + (b - bv);
  return {s, err};
}

/// a * b = p + err exactly (fma-based).
inline TwoFold two_prod(double a, double b) {
  const double p = a * b;
  const double err = std::fma(a, b, -p);
  return {p, err};
}

/// Compensated sum of a span (Neumaier).
inline double comp_sum(std::span<const double> xs) {
  double s = 0.0, c = 0.0;
  for (double x : xs) {
    const auto t = two_sum(s, x);
    s = t.value;
    c += t.err;
  }
  return s + c;
}

/// Dot product in twofold working precision (Ogita-Rump-Oishi dot2).
inline double comp_dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0, c = 0.0;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto p = two_prod(a[i], b[i]);
    const auto t = two_sum(s, p.value);
    s = t.value;
    c += t.err + p.err;
  }
  return s + c;
}

/// x1*y1 + x2*y2 in twofold precision.
inline double comp_dot2(double x1, double y1, double x2, double y2) {
  const auto p1 = two_prod(x1, y1);
  const auto p2 = two_prod(x2, y2);
  const auto t = two_sum(p1.value, p2.value);
  return t.value + (t.err + p1.err + p2.err);
}

/// x1*y2 - x2*y1 in twofold precision.
inline double comp_cross(double x1, double y1, double x2, double y2) {
  return comp_dot2(x1, y2, -x2, y1);
}

}  // namespace torspec
