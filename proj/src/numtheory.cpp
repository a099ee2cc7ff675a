#include "telesum/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "telesum/accumulate.hpp"

namespace telesum {

std::vector<Int> divisors(Int n) {
    if (n < 1) throw std::domain_error("divisors: n must be >= 1");
    std::vector<Int> out;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        if (d != n / d) out.push_back(n / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Int sigma1(Int n) {
    if (n < 1) throw std::domain_error("sigma1: n must be >= 1");
    Int sum = 0;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        sum += d;
        if (d != n / d) sum += n / d;
    }
    return sum;
}

std::vector<Int> sigma1_table(Int n) {
    if (n < 1) throw std::domain_error("sigma1_table: n must be >= 1");
    // Linear sieve. low[i] = the p^k part of i for its smallest prime p,
    // ps[i] = sigma_1(low[i]); sigma_1 is rebuilt multiplicatively.
    std::vector<Int> sigma(n + 1, 0), ps(n + 1, 0), low(n + 1, 0);
    std::vector<Int> primes;
    sigma[1] = ps[1] = low[1] = 1;
    for (Int i = 2; i <= n; ++i) {
        if (low[i] == 0) {
            primes.push_back(i);
            low[i] = i;
            ps[i] = sigma[i] = 1 + i;
        }
        for (Int p : primes) {
            if (p > n / i) break;
            Int j = p * i;
            if (i % p == 0) {
                low[j] = low[i] * p;
                ps[j] = ps[i] * p + 1;
                sigma[j] = sigma[i] / ps[i] * ps[j];
                break;
            }
            low[j] = p;
            ps[j] = 1 + p;
            sigma[j] = sigma[i] * (1 + p);
        }
    }
    return sigma;
}

namespace {

// Partial sum to cutoff-1 plus the Euler-Maclaurin tail through the
// Bernoulli B_4 term. The first omitted term (the B_6 one) bounds the error.
double zeta_euler_maclaurin(double s, Int cutoff) {
    KahanAccumulator acc;
    for (Int n = 1; n < cutoff; ++n) acc.add(std::pow(double(n), -s));
    double k = double(cutoff);
    acc.add(std::pow(k, 1.0 - s) / (s - 1.0));
    acc.add(0.5 * std::pow(k, -s));
    acc.add(s * std::pow(k, -s - 1.0) / 12.0);
    acc.add(-s * (s + 1.0) * (s + 2.0) * std::pow(k, -s - 3.0) / 720.0);
    return acc.value();
}

double first_omitted_term(double s, double k) {
    return s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * std::pow(k, -s - 5.0) / 30240.0;
}

}  // namespace

double zeta_with_cutoff(double s, Int cutoff) {
    if (!(s > 1.0)) throw std::domain_error("zeta: s must be > 1");
    if (cutoff < 2) throw std::domain_error("zeta: cutoff must be >= 2");
    return zeta_euler_maclaurin(s, cutoff);
}

double zeta(double s) {
    if (!(s > 1.0)) throw std::domain_error("zeta: s must be > 1");
    // zeta(s) >= 1, so an absolute 1e-15 on the first omitted term keeps the
    // relative error of the correction below 1e-14.
    Int cutoff = 8;
    while (cutoff < (Int(1) << 22) && first_omitted_term(s, double(cutoff)) > 1e-15)
        cutoff *= 2;
    return zeta_euler_maclaurin(s, cutoff);
}

double DirichletSigmaCheck::residual() const { return std::abs(truncated - reference); }

bool DirichletSigmaCheck::within_bound() const { return residual() <= tail_bound; }

DirichletSigmaCheck dirichlet_sigma_check(double s, Int cutoff) {
    if (!(s > 2.0)) throw std::domain_error("dirichlet_sigma_check: s must be > 2");
    if (cutoff < 1) throw std::domain_error("dirichlet_sigma_check: cutoff must be >= 1");
    std::vector<Int> sigma = sigma1_table(cutoff);
    KahanAccumulator acc;
    for (Int n = 1; n <= cutoff; ++n) acc.add(double(sigma[n]) * std::pow(double(n), -s));
    DirichletSigmaCheck out;
    out.truncated = acc.value();
    out.reference = zeta(s) * zeta(s - 1.0);
    // Tail of sum sigma_1(n)/n^s past N, via n = d*m split at d = N:
    // each d <= N contributes <= d N^-s + N^(1-s)/(s-1), the d > N block is
    // bounded by zeta(s) * sum_{d>N} d^(1-s).
    out.tail_bound = std::pow(double(cutoff), 2.0 - s) *
                     (1.0 + 1.0 / (s - 1.0) + zeta(s) * (1.0 + 1.0 / (s - 2.0)));
    return out;
}

}  // namespace telesum
