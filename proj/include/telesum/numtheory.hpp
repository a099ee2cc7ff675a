#pragma once

// Divisor sums and the Riemann zeta values the series checks compare
// against. zeta is evaluated by Euler-Maclaurin with an explicit error
// bound rather than a lookup table, so the zeta(2)/zeta(4) comparisons in
// the verification suite stay independent of the tree sums.

#include <cstdint>
#include <vector>

#include "telesum/lattice.hpp"

namespace telesum {

// Divisors of n in increasing order. n >= 1.
std::vector<Int> divisors(Int n);

// sigma_1(n) = sum of divisors. n >= 1.
Int sigma1(Int n);

// sigma_1(1..n) by a linear sieve; index 0 unused. n >= 1.
std::vector<Int> sigma1_table(Int n);

// zeta(s) for real s > 1: partial sum to K-1 plus the Euler-Maclaurin tail
//   K^(1-s)/(s-1) + K^(-s)/2 + s K^(-s-1)/12 - s(s+1)(s+2) K^(-s-3)/720,
// with K chosen adaptively so the first omitted term is below 1e-14 * value.
double zeta(double s);

// Same formula at a caller-fixed cutoff; exposes the convergence knob so
// tests can watch the estimate stabilise as K grows.
double zeta_with_cutoff(double s, Int cutoff);

// Dirichlet-series identity sum_{n<=N} sigma_1(n)/n^s vs zeta(s)*zeta(s-1)
// at s > 2. The dropped tail sum_{n>N} sigma_1(n)/n^s is bounded by writing
// n = d*m and splitting at d = N:
//   tail <= N^(2-s) * (1 + 1/(s-1) + zeta(s) * (1 + 1/(s-2))).
struct DirichletSigmaCheck {
    double truncated = 0.0;
    double reference = 0.0;
    double tail_bound = 0.0;
    double residual() const;  // |truncated - reference|
    bool within_bound() const;
};
DirichletSigmaCheck dirichlet_sigma_check(double s, Int cutoff);

}  // namespace telesum
