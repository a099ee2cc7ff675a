#include "telesum/exact.hpp"

#include <stdexcept>

#include "telesum/enumerate.hpp"

namespace telesum {

std::string to_string(Int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
    char buf[48];
    int i = sizeof(buf);
    while (u != 0) {
        buf[--i] = char('0' + int(u % 10));
        u /= 10;
    }
    if (neg) buf[--i] = '-';
    return std::string(buf + i, buf + sizeof(buf));
}

namespace {

Rational ratio(BigInt num, BigInt den) { return Rational(std::move(num), std::move(den)); }

}  // namespace

Rational f_kernel_exact(Vec2 x, Vec2 y) {
    detail::require_nonzero(x, "f_kernel_exact");
    detail::require_nonzero(y, "f_kernel_exact");
    return ratio(big(dot(x, y)), big(norm_sq(x)) * big(norm_sq(y)));
}

Rational telescope_residual(Vec2 x, Vec2 y) {
    Vec2 s = x + y;
    detail::require_nonzero(x, "telescope_residual");
    detail::require_nonzero(y, "telescope_residual");
    detail::require_nonzero(s, "telescope_residual");
    Rational lhs = f_kernel_exact(x, y) - f_kernel_exact(s, y) - f_kernel_exact(x, s);
    BigInt d = big(det(x, y));
    Rational rhs = ratio(-2 * d * d, big(norm_sq(x)) * big(norm_sq(y)) * big(norm_sq(s)));
    if (lhs != rhs)
        throw std::logic_error("telescope_residual: kernel identity violated for (" +
                               std::to_string(x.a) + "," + std::to_string(x.b) + "),(" +
                               std::to_string(y.a) + "," + std::to_string(y.b) + ")");
    return lhs;
}

namespace {

// G(m,n) = 2/(m^3 n) + 1/(m^2 n^2) + 2/(m n^3).
Rational g_kernel(const BigInt& m, const BigInt& n) {
    return ratio(2, m * m * m * n) + ratio(1, m * m * n * n) + ratio(2, m * n * n * n);
}

}  // namespace

ScalarKernelReport scalar_kernel_identities(Int m_in, Int n_in) {
    if (m_in < 1 || n_in < 1)
        throw std::domain_error("scalar_kernel_identities: m, n must be >= 1");
    BigInt m = m_in, n = n_in, s = m + n;
    ScalarKernelReport out;
    out.split_residual = ratio(1, m * n) - ratio(1, s * n) - ratio(1, m * s);
    out.g_residual = g_kernel(m, n) - g_kernel(s, n) - g_kernel(m, s) - ratio(2, m * m * n * n);
    return out;
}

TreeRationalSums theorem1_rational(Int box) {
    TreeRationalSums out;
    visit_unimodular_tree(box, [&](Vec2 x, Vec2 y, Vec2 med, bool boundary) {
        out.direct += ratio(1, big(norm_sq(x)) * big(norm_sq(y)) * big(norm_sq(med)));
        if (boundary) {
            Rational half(1, 2);
            out.boundary += half * (f_kernel_exact(x, med) + f_kernel_exact(med, y));
        }
    });
    return out;
}

}  // namespace telesum
