#pragma once

// Entire functions with a removable singularity at zero, evaluated without
// cancellation. Below kSeriesRadius the Taylor series is summed (ten terms,
// truncation far below one ulp); above it the closed form is exact enough.
// Templated so dual numbers pass through unchanged.

#include <array>
#include <cmath>

#include "heislor/detail/dual.hpp"

namespace heislor::detail {

inline constexpr double kSeriesRadius = 0.5;

// Coefficients 1/(2k+1)!, 1/(2k+2)!, 1/(2k+3)!, k = 0..9.
inline constexpr std::array<double, 10> kInvOddFact = {
    1.0, 1.0 / 6.0, 1.0 / 120.0, 1.0 / 5040.0, 1.0 / 362880.0, 1.0 / 39916800.0,
    1.0 / 6227020800.0, 1.0 / 1307674368000.0, 1.0 / 355687428096000.0,
    1.0 / 121645100408832000.0};
inline constexpr std::array<double, 10> kInvEvenFact = {
    1.0 / 2.0, 1.0 / 24.0, 1.0 / 720.0, 1.0 / 40320.0, 1.0 / 3628800.0,
    1.0 / 479001600.0, 1.0 / 87178291200.0, 1.0 / 20922789888000.0,
    1.0 / 6402373705728000.0, 1.0 / 2432902008176640000.0};
inline constexpr std::array<double, 10> kInvOddFactShift = {
    1.0 / 6.0, 1.0 / 120.0, 1.0 / 5040.0, 1.0 / 362880.0, 1.0 / 39916800.0,
    1.0 / 6227020800.0, 1.0 / 1307674368000.0, 1.0 / 355687428096000.0,
    1.0 / 121645100408832000.0, 1.0 / 51090942171709440000.0};

template <class T>
T horner(const T& u, const std::array<double, 10>& c) {
  T acc(c[9]);
  for (int k = 8; k >= 0; --k) acc = acc * u + c[k];
  return acc;
}

template <class T>
bool in_series_range(const T& tau) {
  return std::abs(value_of(tau)) < kSeriesRadius;
}

/// sinh(t)/t
template <class T>
T sinhc(const T& tau) {
  using std::sinh;
  if (in_series_range(tau)) return horner(tau * tau, kInvOddFact);
  return sinh(tau) / tau;
}

/// (cosh(t) - 1)/t
template <class T>
T coshm1c(const T& tau) {
  using std::sinh;
  if (in_series_range(tau)) return tau * horner(tau * tau, kInvEvenFact);
  const T s = sinh(tau * 0.5);
  return 2.0 * s * s / tau;
}

/// (sinh(t) - t)/t^2
template <class T>
T sinhmc(const T& tau) {
  using std::sinh;
  if (in_series_range(tau)) return tau * horner(tau * tau, kInvOddFactShift);
  return (sinh(tau) - tau) / (tau * tau);
}

/// sin(t)/t
template <class T>
T sinc(const T& tau) {
  using std::sin;
  if (in_series_range(tau)) return horner(-(tau * tau), kInvOddFact);
  return sin(tau) / tau;
}

/// (cos(t) - 1)/t
template <class T>
T cosm1c(const T& tau) {
  using std::sin;
  if (in_series_range(tau)) return -(tau * horner(-(tau * tau), kInvEvenFact));
  const T s = sin(tau * 0.5);
  return -2.0 * s * s / tau;
}

/// (t - sin(t))/t^2
template <class T>
T sinmc(const T& tau) {
  using std::sin;
  if (in_series_range(tau)) return tau * horner(-(tau * tau), kInvOddFactShift);
  return (tau - sin(tau)) / (tau * tau);
}

/// sinh(t) - t without cancellation.
inline double sinh_minus_id(double tau) {
  if (std::abs(tau) < kSeriesRadius) return tau * tau * tau * horner(tau * tau, kInvOddFactShift);
  return std::sinh(tau) - tau;
}

}  // namespace heislor::detail
