// Complementary Gaussian CDF Q, its logarithm and its inverse.
//
// q() is accurate to full double precision for |u| <= 38 (the extreme tail
// values are denormal but representable). log_q() stays finite far beyond
// that and is the entry point for bounds evaluated deep in the tail.
#pragma once

namespace polar {

double q(double u);

// ln Q(u), finite for all practical u (no underflow up to u ~ 1e7).
double log_q(double u);

// Inverse of q on (0, 1). q_inv(q(u)) = u to ~1e-12 relative for |u| <= 38.
double q_inv(double p);

}  // namespace polar
