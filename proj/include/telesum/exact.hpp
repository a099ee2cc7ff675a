#pragma once

// Exact rational arithmetic for the finite telescoping identities. Series
// evaluation stays in floating point; everything here is big-integer exact.

#include <boost/multiprecision/cpp_int.hpp>

#include "telesum/lattice.hpp"

namespace telesum {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt big(Int128 v) { return BigInt(v); }

// F(x,y) as an exact rational.
Rational f_kernel_exact(Vec2 x, Vec2 y);

// F(x,y) - F(x+y,y) - F(x,x+y), exact. Verifies against the closed form
// -2 det(x,y)^2 / (|x|^2 |y|^2 |x+y|^2) and throws std::logic_error if the
// two sides ever disagree (they cannot, unless the arithmetic is broken).
// Requires x, y, x+y all nonzero.
Rational telescope_residual(Vec2 x, Vec2 y);

// Residuals of the two scalar splitting identities:
//   1/(mn) - 1/((m+n)n) - 1/(m(m+n))                       (split_residual)
//   G(m,n) - G(m+n,n) - G(m,m+n) - 2/(m^2 n^2)             (g_residual)
// where G(m,n) = 2/(m^3 n) + 1/(m^2 n^2) + 2/(m n^3). Both must be zero.
struct ScalarKernelReport {
    Rational split_residual;
    Rational g_residual;
    bool all_zero() const { return split_residual == 0 && g_residual == 0; }
};
ScalarKernelReport scalar_kernel_identities(Int m, Int n);

// The two routes of the unimodular-pair kernel sum over the box [0,N]^2,
// accumulated in exact rationals: direct sums 1/(|x|^2 |y|^2 |x+y|^2) over
// the tree interior, boundary sums (F(x,x+y) + F(x+y,y))/2 over the pruned
// frontier. Telescoping makes them equal at every N.
struct TreeRationalSums {
    Rational direct;
    Rational boundary;
    bool equal() const { return direct == boundary; }
};
TreeRationalSums theorem1_rational(Int box);

}  // namespace telesum
