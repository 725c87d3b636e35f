#ifndef PMOD4_MOCK_THETA_HPP
#define PMOD4_MOCK_THETA_HPP

#include <array>
#include <stdexcept>
#include <vector>

#include "pmod4/kronecker.hpp"
#include "pmod4/series.hpp"

namespace pmod4 {

namespace detail {

// In-place quotient by (1 + s*q^step): d[i] = c[i] - s*d[i-step].
template <class R>
void divide_binomial(std::vector<R>& c, long step, int s) {
    if (s == 1) {
        for (std::size_t i = std::size_t(step); i < c.size(); ++i)
            c[i] -= c[i - std::size_t(step)];
    } else {
        for (std::size_t i = std::size_t(step); i < c.size(); ++i)
            c[i] += c[i - std::size_t(step)];
    }
}

}  // namespace detail

// Ramanujan's third-order f(q) = 1 + sum_{n>=1} q^{n^2} / prod_{k<=n}(1+q^k)^2,
// through q^N.  A running inverse of the denominator product is kept and
// updated by two binomial divisions per step; n stops once n^2 > N.
template <class R>
Series<R> f_series(long N) {
    if (N < 0) throw std::invalid_argument("f_series: N >= 0 required");
    std::vector<R> out(std::size_t(N) + 1);
    out[0] = ring_traits<R>::from_long(1);
    std::vector<R> inv(std::size_t(N) + 1);
    inv[0] = ring_traits<R>::from_long(1);
    for (long n = 1; n * n <= N; ++n) {
        detail::divide_binomial(inv, n, +1);
        detail::divide_binomial(inv, n, +1);
        const long e = n * n;
        for (std::size_t i = 0; i + std::size_t(e) < out.size(); ++i)
            out[i + std::size_t(e)] += inv[i];
    }
    return Series<R>(0, std::move(out));
}

// omega(q) = sum_{n>=0} q^{2n^2+2n} / ((q;q^2)_{n+1})^2 through q^N.
template <class R>
Series<R> omega_series(long N) {
    if (N < 0) throw std::invalid_argument("omega_series: N >= 0 required");
    std::vector<R> out(std::size_t(N) + 1);
    std::vector<R> inv(std::size_t(N) + 1);
    inv[0] = ring_traits<R>::from_long(1);
    for (long n = 0; 2 * n * n + 2 * n <= N; ++n) {
        const long s = 2 * n + 1;
        detail::divide_binomial(inv, s, -1);
        detail::divide_binomial(inv, s, -1);
        const long e = 2 * n * n + 2 * n;
        for (std::size_t i = 0; i + std::size_t(e) < out.size(); ++i)
            out[i + std::size_t(e)] += inv[i];
    }
    return Series<R>(0, std::move(out));
}

// The twelve components R_0..R_11 of the vector-valued form built from f and
// omega.  Components 0,3,6,9 vanish; 1,5,7,11 are chi_{-12}(j) q^{-1} f(q^24);
// the even ones are the +-2(omega(q^12) -+ omega(-q^12)) combinations, which
// have support on exponents 8 mod 12 and coefficients +-4*omega_k.
template <class R>
struct RComponents {
    std::array<Series<R>, 12> comp;
    long order = 0;

    // C_R(j; n): 0 below the valuation or off the support class,
    // out_of_range past the computed order.
    R c(int j, long n) const {
        int jj = ((j % 12) + 12) % 12;
        return comp[std::size_t(jj)].coeff(n);
    }
};

template <class R>
RComponents<R> r_components(long N) {
    if (N < -1) throw std::invalid_argument("r_components: N >= -1 required");
    // Coefficients of f over Z grow fast; cap exact-integer requests.
    if (ring_traits<R>::tag == RingTag::Integers && N > 10000)
        throw std::domain_error(
            "r_components: integer-ring components capped at order 10^4; use Z/4");
    RComponents<R> r;
    r.order = N;

    // q^{-1} f(q^24) through q^N.
    const long fN = (N + 24) / 24;
    Series<R> f24 = f_series<R>(fN).stretched(24).shifted(-1).truncated(N);
    for (int j : {1, 5, 7, 11}) {
        int s = kronecker(-12, j);
        r.comp[std::size_t(j)] =
            (s == 1) ? f24 : f24.scaled(ring_traits<R>::from_long(-1));
    }
    for (int j : {0, 3, 6, 9}) r.comp[std::size_t(j)] = Series<R>::zero(N);

    if (N < 8) {
        for (int j : {2, 4, 8, 10}) r.comp[std::size_t(j)] = Series<R>::zero(N);
        return r;
    }
    std::vector<R> w = omega_series<R>((N - 8) / 12).coeffs();
    auto even_component = [&](long parity, long long scale) {
        // scale * omega_k at exponent 12k+8 for k of the given parity
        std::vector<R> c(std::size_t(N) + 1);
        R f = ring_traits<R>::from_long(scale);
        for (long k = parity; 12 * k + 8 <= N; k += 2)
            c[std::size_t(12 * k + 8)] = f * w[std::size_t(k)];
        return Series<R>(0, std::move(c));
    };
    r.comp[2] = even_component(1, -4);
    r.comp[4] = even_component(0, -4);
    r.comp[8] = even_component(0, +4);
    r.comp[10] = even_component(1, +4);
    return r;
}

}  // namespace pmod4

#endif
