#pragma once

namespace gfis {

/// Standard normal density.
double normal_pdf(double x);

/// Standard normal CDF.
double normal_cdf(double x);

/// Upper tail Psi(x) = P(Z > x).
///
/// Relative accuracy is ~1e-15 on [-8, 8] (erfc route) and better than 1e-12
/// out to x = 38, past which the value is no longer representable in double
/// precision and 0 is returned.
double normal_tail(double x);

/// log Psi(x), stable far into the tail (no underflow; x = 40 gives
/// -804.608...). Uses the asymptotic expansion of the Mills ratio for large
/// x, the erfc route otherwise.
double log_normal_tail(double x);

/// Phi^{-1}(p) for p in (0, 1). Wichura's PPND16 rational approximation,
/// accurate to ~1e-15 relative over the full representable range.
double normal_quantile(double p);

}  // namespace gfis
