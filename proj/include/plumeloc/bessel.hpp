#pragma once

namespace plumeloc {

/// Modified Bessel function of the second kind, order zero.
///
/// Ascending series for x <= 2, Steed's continued fraction (exp(-x)/sqrt(x)
/// scaled) above. Relative error is a few ulps on (0, 700]; the result
/// underflows to zero beyond that. Throws DomainError for x <= 0 or NaN.
double bessel_k0(double x);

/// exp(x) * K0(x); finite for all x > 0.
double bessel_k0_scaled(double x);

}  // namespace plumeloc
