#include "plumeloc/bessel.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "plumeloc/error.hpp"

namespace plumeloc {

namespace {

constexpr int kSeriesTerms = 20;

// c[m] = 1/(m!)^2 and h[m] = H_m/(m!)^2, so that for t = x^2/4
//   I0(x) = sum c[m] t^m,   K0(x) = -(ln(x/2) + gamma) I0(x) + sum h[m] t^m.
struct SeriesCoefficients {
  std::array<double, kSeriesTerms> c{};
  std::array<double, kSeriesTerms> h{};
};

constexpr SeriesCoefficients make_coefficients() {
  SeriesCoefficients s;
  double inv_fact_sq = 1.0;
  double harmonic = 0.0;
  for (int m = 0; m < kSeriesTerms; ++m) {
    if (m > 0) {
      inv_fact_sq /= static_cast<double>(m) * static_cast<double>(m);
      harmonic += 1.0 / m;
    }
    s.c[m] = inv_fact_sq;
    s.h[m] = harmonic * inv_fact_sq;
  }
  return s;
}

constexpr SeriesCoefficients kSeries = make_coefficients();

double k0_small(double x) {
  const double t = 0.25 * x * x;
  double i0 = 0.0;
  double tail = 0.0;
  for (int m = kSeriesTerms - 1; m >= 0; --m) {
    i0 = i0 * t + kSeries.c[m];
    tail = tail * t + kSeries.h[m];
  }
  return -(std::log(0.5 * x) + std::numbers::egamma) * i0 + tail;
}

// Steed's algorithm for the second continued fraction of K_nu at nu = 0,
// giving exp(x) K0(x) = sqrt(pi / 2x) / s.
double k0_large_scaled(double x) {
  constexpr double a1 = 0.25;
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double delh = d;
  double q1 = 0.0;
  double q2 = 1.0;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  for (int i = 1; i < 10000; ++i) {
    a -= 2 * i;
    c = -a * c / (i + 1.0);
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < std::numeric_limits<double>::epsilon() * 0.25) break;
  }
  return std::sqrt(std::numbers::pi / (2.0 * x)) / s;
}

}  // namespace

double bessel_k0(double x) {
  if (!(x > 0.0)) throw DomainError("bessel_k0 requires x > 0");
  if (std::isinf(x)) return 0.0;
  return x <= 2.0 ? k0_small(x) : std::exp(-x) * k0_large_scaled(x);
}

double bessel_k0_scaled(double x) {
  if (!(x > 0.0)) throw DomainError("bessel_k0_scaled requires x > 0");
  if (std::isinf(x)) return 0.0;
  return x <= 2.0 ? std::exp(x) * k0_small(x) : k0_large_scaled(x);
}

}  // namespace plumeloc
