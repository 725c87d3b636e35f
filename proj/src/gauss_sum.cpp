#include <cmath>
#include <complex>
#include <vector>

#include "pmod4/congruence.hpp"
#include "pmod4/kronecker.hpp"

namespace pmod4 {

namespace {

std::complex<long double> twisted_sum(long long D, long long n,
                                      const std::vector<int>& chi) {
    const long double two_pi = 2.0L * 3.14159265358979323846264338327950288L;
    std::complex<long double> s(0.0L, 0.0L);
    for (long long b = 1; b < D; ++b) {
        if (chi[(std::size_t)b] == 0) continue;
        long double ang = -two_pi * (long double)((b * n) % D) / (long double)D;
        std::complex<long double> e(std::cos(ang), std::sin(ang));
        s += (long double)chi[(std::size_t)b] * e;
    }
    return s;
}

}  // namespace

GaussSumReport gauss_sum_check(long long D, int n_samples) {
    require_qualifying(D);
    std::vector<int> chi((std::size_t)D);
    for (long long b = 1; b < D; ++b) chi[(std::size_t)b] = kronecker(-D, b);

    GaussSumReport rep;
    rep.D = D;
    const double tol = 1e-9 * (double)D;

    std::complex<long double> g = twisted_sum(D, 1, chi);
    rep.norm_error = std::abs((double)std::norm(g) - (double)D);

    // deterministic sample: n = 2, 3, ... until n_samples coprime values seen
    int seen = 0;
    for (long long n = 2; seen < n_samples; ++n) {
        auto lhs = twisted_sum(D, n, chi);
        if (std::gcd(n, D) == 1) {
            auto rhs = (long double)kronecker(-D, n) * g;
            rep.max_identity_error =
                std::max(rep.max_identity_error, (double)std::abs(lhs - rhs));
            ++seen;
        } else {
            // both sides vanish: lhs directly, rhs because chi_{-D}(n) = 0
            rep.max_vanishing_error =
                std::max(rep.max_vanishing_error, (double)std::abs(lhs));
        }
    }
    // make sure at least one gcd > 1 case was exercised
    auto at_d = twisted_sum(D, D, chi);
    rep.max_vanishing_error = std::max(rep.max_vanishing_error, (double)std::abs(at_d));

    rep.ok = rep.norm_error < tol && rep.max_identity_error < tol &&
             rep.max_vanishing_error < tol;
    return rep;
}

}  // namespace pmod4
