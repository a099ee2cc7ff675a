#pragma once

// Exact integer 2-vectors and the pointwise kernels every lattice sum is
// built from. All integer-valued quantities are computed in 128-bit
// intermediates so coordinates up to 2^31 never overflow; the floating
// kernels round once at the end.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>

namespace telesum {

using Int = std::int64_t;
using Int128 = __int128;

std::string to_string(Int128 v);

inline double to_double(Int128 v) { return static_cast<double>(v); }

struct Vec2 {
    Int a = 0;
    Int b = 0;

    constexpr bool is_zero() const { return a == 0 && b == 0; }

    friend constexpr Vec2 operator+(Vec2 u, Vec2 v) { return {u.a + v.a, u.b + v.b}; }
    friend constexpr Vec2 operator-(Vec2 u, Vec2 v) { return {u.a - v.a, u.b - v.b}; }
    friend constexpr Vec2 operator-(Vec2 u) { return {-u.a, -u.b}; }
    friend constexpr bool operator==(Vec2 u, Vec2 v) { return u.a == v.a && u.b == v.b; }
    friend constexpr bool operator<(Vec2 u, Vec2 v) {
        return std::tie(u.a, u.b) < std::tie(v.a, v.b);
    }
};

constexpr Int128 det(Vec2 x, Vec2 y) {
    return Int128(x.a) * y.b - Int128(x.b) * y.a;
}

constexpr Int128 dot(Vec2 x, Vec2 y) {
    return Int128(x.a) * y.a + Int128(x.b) * y.b;
}

constexpr Int128 norm_sq(Vec2 x) { return dot(x, x); }

inline double norm(Vec2 x) { return std::sqrt(to_double(norm_sq(x))); }

namespace detail {
inline void require_nonzero(Vec2 v, const char* what) {
    if (v.is_zero()) throw std::domain_error(std::string(what) + ": zero vector");
}
inline double checked_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw std::domain_error(std::string(what) + ": non-finite result");
    return v;
}
}  // namespace detail

// F(x,y) = (x.y) / (|x|^2 |y|^2), the telescoping kernel.
inline double f_kernel(Vec2 x, Vec2 y) {
    detail::require_nonzero(x, "f_kernel");
    detail::require_nonzero(y, "f_kernel");
    double num = to_double(dot(x, y));
    double den = to_double(norm_sq(x)) * to_double(norm_sq(y));
    return detail::checked_finite(num / den, "f_kernel");
}

// |x| + |y| - |x+y| without cancellation. Multiplying by the conjugate gives
// numerator 2(|x||y| - x.y); for x.y >= 0 that difference is itself rewritten
// as det^2 / (|x||y| + x.y), whose numerator is an exact integer.
inline double defect(Vec2 x, Vec2 y) {
    double nx = norm(x);
    double ny = norm(y);
    double ns = norm(x + y);
    double d = to_double(dot(x, y));
    double prod = nx * ny;
    double num;
    if (d >= 0) {
        double cross = to_double(det(x, y));
        double denom = prod + d;
        if (denom == 0) return 0.0;  // both vectors zero
        num = cross * cross / denom;
    } else {
        num = prod - d;
    }
    return detail::checked_finite(2.0 * num / (nx + ny + ns), "defect");
}

// Unsigned angle between x and y in [0, pi], via atan2 of the exact integer
// (|det|, dot) pair; robust where arccos of a near-unit cosine is not.
inline double angle(Vec2 x, Vec2 y) {
    detail::require_nonzero(x, "angle");
    detail::require_nonzero(y, "angle");
    Int128 cross = det(x, y);
    if (cross < 0) cross = -cross;
    return std::atan2(to_double(cross), to_double(dot(x, y)));
}

// Ordered pair (x, y) with its determinant cached at construction.
struct VectorPair {
    Vec2 x;
    Vec2 y;
    Int d = 0;

    static VectorPair of(Vec2 x, Vec2 y) {
        Int128 dd = det(x, y);
        if (dd > Int128(INT64_MAX) || dd < Int128(INT64_MIN))
            throw std::overflow_error("VectorPair: determinant exceeds 64 bits");
        return {x, y, static_cast<Int>(dd)};
    }

    friend constexpr bool operator==(const VectorPair& p, const VectorPair& q) {
        return p.x == q.x && p.y == q.y;
    }
    friend constexpr bool operator<(const VectorPair& p, const VectorPair& q) {
        return std::tie(p.x.a, p.x.b, p.y.a, p.y.b) < std::tie(q.x.a, q.x.b, q.y.a, q.y.b);
    }
};

}  // namespace telesum
