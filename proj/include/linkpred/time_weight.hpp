#pragma once

#include <cmath>
#include <stdexcept>

namespace linkpred {

// Convex polynomial link-age weight
//
//   f(t) = theta0 + (theta2 * (t - theta1))^theta3
//
// over normalized time t in [0, 1]. theta3 must be a positive even integer,
// so the power term is non-negative and the curve is high at both ends of
// the time range: old links (rooted concepts) and recent links (hot topics)
// both weigh more than links near t = theta1.
struct TimeWeightParams {
  double theta0;
  double theta1;
  double theta2;
  int theta3;

  TimeWeightParams(double t0, double t1, double t2, int t3)
      : theta0(t0), theta1(t1), theta2(t2), theta3(t3) {
    if (!(std::isfinite(t0) && t0 >= 0.0))
      throw std::invalid_argument("time weight: theta0 must be finite and >= 0");
    if (!(std::isfinite(t1) && t1 >= 0.0 && t1 <= 1.0))
      throw std::invalid_argument("time weight: theta1 must lie in [0, 1]");
    if (!(std::isfinite(t2) && t2 >= 0.0))
      throw std::invalid_argument("time weight: theta2 must be finite and >= 0");
    if (t3 <= 0 || t3 % 2 != 0)
      throw std::invalid_argument("time weight: theta3 must be a positive even integer");
  }
};

namespace detail {

// Exponentiation by squaring; fixed operation order keeps results
// bit-identical across platforms and libms.
inline double pow_uint(double base, int exp) {
  double result = 1.0;
  double acc = base;
  for (int e = exp; e > 0; e >>= 1) {
    if (e & 1) result *= acc;
    acc *= acc;
  }
  return result;
}

}  // namespace detail

inline double time_weight(const TimeWeightParams& p, double t_norm) {
  return p.theta0 + detail::pow_uint(p.theta2 * (t_norm - p.theta1), p.theta3);
}

}  // namespace linkpred
