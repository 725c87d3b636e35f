#ifndef PMOD4_CONGRUENCE_HPP
#define PMOD4_CONGRUENCE_HPP

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pmod4/binary_qf.hpp"
#include "pmod4/classical.hpp"
#include "pmod4/kronecker.hpp"
#include "pmod4/mock_theta.hpp"
#include "pmod4/series.hpp"

namespace pmod4 {

enum class Provenance { Direct, LogDeriv, Normalized };

template <class R>
struct TwistedSeries {
    long long D = 0;
    Series<R> series;
    Provenance provenance = Provenance::Direct;
    long h_s = -1;  // only for Normalized
};

inline void require_qualifying(long long D) {
    if (!is_qualifying_discriminant(D))
        throw std::domain_error("D=" + std::to_string(D) +
                                " is not square-free with D == 23 (mod 24), D > 1");
}

namespace detail {

// The m-sum of both P(D;q) and L_D: for each m, add
// w_m * sum_{n <= N/m} chi_{-D}(n) q^{mn}.  Partitioned over m with
// per-thread accumulators merged additively; `parallel` false gives the
// serial reference.
template <class R>
std::vector<R> chi_lattice_sum(long long D, long N, const std::vector<R>& weight_by_m,
                               bool parallel) {
    std::vector<int> chi_d(std::size_t(N) + 1);
    for (long n = 1; n <= N; ++n) chi_d[std::size_t(n)] = kronecker(-D, n);

    std::vector<R> out(std::size_t(N) + 1);
    auto add_m = [&](long m, std::vector<R>& acc) {
        const R& w = weight_by_m[std::size_t(m)];
        if (ring_traits<R>::is_zero(w)) return;
        for (long n = 1; m * n <= N; ++n) {
            int s = chi_d[std::size_t(n)];
            if (s == 0) continue;
            if (s > 0)
                acc[std::size_t(m * n)] += w;
            else
                acc[std::size_t(m * n)] -= w;
        }
    };
    if (!parallel) {
        for (long m = 1; m <= N; ++m) add_m(m, out);
        return out;
    }
#pragma omp parallel
    {
        std::vector<R> local(std::size_t(N) + 1);
#pragma omp for schedule(dynamic, 16) nowait
        for (long m = 1; m <= N; ++m) add_m(m, local);
#pragma omp critical
        {
            for (std::size_t i = 0; i < out.size(); ++i) out[i] += local[i];
        }
    }
    return out;
}

}  // namespace detail

// P(D;q) = sum_{m,n>=1} chi_{-D}(n) chi_12(m) p((Dm^2+1)/24) q^{mn}.
// Only m coprime to 6 contribute (the p-argument is integral exactly then).
template <class R>
TwistedSeries<R> twisted_series(long long D, long N, bool parallel = true,
                                const std::atomic<bool>* cancel = nullptr) {
    require_qualifying(D);
    if (N < 1) throw std::invalid_argument("twisted_series: N >= 1 required");
    long pmax = (D * N * N + 1) / 24;
    std::vector<R> p = partition_table<R>(pmax, cancel);
    std::vector<R> w(std::size_t(N) + 1);
    for (long m = 1; m <= N; ++m) {
        if (std::gcd(m, 6LL) != 1) continue;
        R pm = p[std::size_t((D * m * m + 1) / 24)];
        w[std::size_t(m)] =
            kronecker(12, m) == 1 ? pm : -pm;
    }
    auto c = detail::chi_lattice_sum<R>(D, N, w, parallel);
    return {D, Series<R>(0, std::move(c)).truncated(N), Provenance::Direct, -1};
}

// L_D = sum_m C_R(m mod 12; Dm^2) m sum_{n, gcd(n,D)=1} chi_{-D}(n) q^{mn},
// with C_R sourced from computed mock theta components.
template <class R>
TwistedSeries<R> logderiv_series(long long D, long N, const RComponents<R>& comps,
                                 bool parallel = true) {
    require_qualifying(D);
    if (N < 1) throw std::invalid_argument("logderiv_series: N >= 1 required");
    if (comps.order < D * N * N)
        throw std::invalid_argument("logderiv_series: components computed only to order " +
                                    std::to_string(comps.order) + ", need " +
                                    std::to_string(D * N * N));
    std::vector<R> w(std::size_t(N) + 1);
    for (long m = 1; m <= N; ++m)
        w[std::size_t(m)] = comps.c(int(m % 12), D * m * m) * ring_traits<R>::from_long(m);
    auto c = detail::chi_lattice_sum<R>(D, N, w, parallel);
    // chi_{-D}(n) already vanishes for gcd(n,D) > 1, so the gcd restriction
    // in the m-sum is automatic.
    return {D, Series<R>(0, std::move(c)).truncated(N), Provenance::LogDeriv, -1};
}

// Fast mod-4 C_R path: over Z/4 the even components vanish and
// C_R(m;Dm^2) = chi_{-12}(m) p((Dm^2+1)/24) for gcd(m,12)=1 (f == P mod 4).
inline TwistedSeries<Mod4> logderiv_fast_mod4(long long D, long N,
                                              const std::vector<Mod4>& ptable,
                                              bool parallel = true) {
    require_qualifying(D);
    if (N < 1) throw std::invalid_argument("logderiv_fast_mod4: N >= 1 required");
    if ((long)ptable.size() <= (D * N * N + 1) / 24)
        throw std::invalid_argument("logderiv_fast_mod4: partition table too short");
    std::vector<Mod4> w(std::size_t(N) + 1);
    for (long m = 1; m <= N; ++m) {
        if (std::gcd(m, 12LL) != 1) continue;
        Mod4 pm = ptable[std::size_t((D * m * m + 1) / 24)];
        Mod4 cm = kronecker(-12, m) == 1 ? pm : -pm;
        w[std::size_t(m)] = cm * ring_traits<Mod4>::from_long(m);
    }
    auto c = detail::chi_lattice_sum<Mod4>(D, N, w, parallel);
    return {D, Series<Mod4>(0, std::move(c)).truncated(N), Provenance::LogDeriv, -1};
}

enum class CrSource { Fast, Definition };

struct Theorem1Report {
    long long D = 0;
    long checked = 0;
    RingTag ring = RingTag::Mod4;
    std::optional<long> first_mismatch;
    bool ok() const { return !first_mismatch.has_value(); }
};

inline Theorem1Report compare_mod4(long long D, long N, const Series<Mod4>& a,
                                   const Series<Mod4>& b) {
    Theorem1Report rep{D, N, RingTag::Mod4, std::nullopt};
    for (long e = 1; e <= N; ++e) {
        if (!(a.coeff(e) == b.coeff(e))) {
            rep.first_mismatch = e;
            break;
        }
    }
    return rep;
}

// P(D;q) == L_D (mod 4) through q^N.
inline Theorem1Report verify_theorem1(long long D, long N,
                                      CrSource source = CrSource::Fast) {
    require_qualifying(D);
    if (source == CrSource::Fast) {
        long pmax = (D * N * N + 1) / 24;
        auto ptable = partition_table<Mod4>(pmax);
        auto lhs = twisted_series<Mod4>(D, N);
        auto rhs = logderiv_fast_mod4(D, N, ptable);
        return compare_mod4(D, N, lhs.series, rhs.series);
    }
    auto comps = r_components<Mod4>(D * N * N);
    auto lhs = twisted_series<Mod4>(D, N);
    auto rhs = logderiv_series<Mod4>(D, N, comps);
    return compare_mod4(D, N, lhs.series, rhs.series);
}

// P_hat_S(D;q) = P(D;q) Delta^{h_S} H_{-D}(1/Delta), expanded as
// P * sum_k c_k Delta^{h_S - k} with c_k the reduced Hilbert coefficients.
template <class R>
TwistedSeries<R> normalized_series(long long D, long h_S, long N,
                                   const std::vector<R>& hilbert_coeffs,
                                   const TwistedSeries<R>& P) {
    require_qualifying(D);
    long h = (long)hilbert_coeffs.size() - 1;
    if (h < 0) throw std::invalid_argument("normalized_series: empty polynomial");
    if (h_S < h)
        throw std::invalid_argument("normalized_series: h_S must be >= h(-D)");
    if (P.series.order() < N)
        throw std::invalid_argument("normalized_series: P(D;q) known only to order " +
                                    std::to_string(P.series.order()));

    Series<R> delta = delta_series<R>(N);
    Series<R> acc = Series<R>::zero(N);
    Series<R> dpow = Series<R>::one(N);  // Delta^j, j ascending
    for (long j = 0; j <= h_S; ++j) {
        long k = h_S - j;  // coefficient index: c_k multiplies Delta^{h_S-k}
        if (k <= h && !ring_traits<R>::is_zero(hilbert_coeffs[std::size_t(k)])) {
            acc = acc + dpow.scaled(hilbert_coeffs[std::size_t(k)]).truncated(N);
        }
        if (j < h_S) dpow = dpow * delta;
    }
    Series<R> result = (P.series.truncated(N) * acc).truncated(N);
    return {D, std::move(result), Provenance::Normalized, h_S};
}

struct GaussSumReport {
    long long D = 0;
    bool ok = false;
    double norm_error = 0.0;        // | |g|^2 - D |
    double max_identity_error = 0;  // worst sampled twisted-sum deviation
    double max_vanishing_error = 0;
};

// Numeric check of the Gauss-sum identity behind the L_D expansion:
// sum_b chi_{-D}(b) e(-bn/D) = chi_{-D}(n) g for gcd(n,D)=1, both sides
// vanish otherwise, and |g|^2 = D.
GaussSumReport gauss_sum_check(long long D, int n_samples);

}  // namespace pmod4

#endif
