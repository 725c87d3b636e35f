#ifndef PMOD4_CLASSICAL_HPP
#define PMOD4_CLASSICAL_HPP

#include <atomic>
#include <stdexcept>
#include <vector>

#include "pmod4/series.hpp"

namespace pmod4 {

struct OperationCancelled : std::runtime_error {
    OperationCancelled() : std::runtime_error("operation cancelled") {}
};

// p(0..N) by the pentagonal-number recurrence.  Checks `cancel` every ~10^4
// outer steps so long builds can be abandoned cooperatively.
template <class R>
std::vector<R> partition_table(long N, const std::atomic<bool>* cancel = nullptr) {
    if (N < 0) throw std::invalid_argument("partition_table: N >= 0 required");
    std::vector<R> p(static_cast<std::size_t>(N) + 1);
    p[0] = ring_traits<R>::from_long(1);
    for (long n = 1; n <= N; ++n) {
        if (cancel && n % 10000 == 0 && cancel->load(std::memory_order_relaxed))
            throw OperationCancelled();
        R acc{};
        for (long k = 1;; ++k) {
            long g1 = k * (3 * k - 1) / 2;
            if (g1 > n) break;
            long g2 = k * (3 * k + 1) / 2;
            if (k % 2 == 1) {
                acc += p[std::size_t(n - g1)];
                if (g2 <= n) acc += p[std::size_t(n - g2)];
            } else {
                acc -= p[std::size_t(n - g1)];
                if (g2 <= n) acc -= p[std::size_t(n - g2)];
            }
        }
        p[std::size_t(n)] = std::move(acc);
    }
    return p;
}

template <class R>
Series<R> partition_series(long N, const std::atomic<bool>* cancel = nullptr) {
    return Series<R>(0, partition_table<R>(N, cancel));
}

// prod_{n>=1} (1 - q^n) through q^N, via Euler's pentagonal number theorem.
template <class R>
Series<R> eta_quotient_unit(long N) {
    if (N < 0) throw std::invalid_argument("eta_quotient_unit: N >= 0 required");
    std::vector<R> c(static_cast<std::size_t>(N) + 1);
    c[0] = ring_traits<R>::from_long(1);
    for (long k = 1;; ++k) {
        long g1 = k * (3 * k - 1) / 2;
        if (g1 > N) break;
        R s = ring_traits<R>::from_long(k % 2 == 1 ? -1 : 1);
        c[std::size_t(g1)] = s;
        long g2 = k * (3 * k + 1) / 2;
        if (g2 <= N) c[std::size_t(g2)] = s;
    }
    return Series<R>(0, std::move(c));
}

// Delta = q prod (1-q^n)^24, valuation 1, through q^N.
template <class R>
Series<R> delta_series(long N) {
    if (N < 1) throw std::invalid_argument("delta_series: N >= 1 required");
    Series<R> eta = eta_quotient_unit<R>(N - 1);
    Series<R> p = Series<R>::one(N - 1);
    // 24 sparse multiplications beat binary powering here: eta has
    // O(sqrt N) nonzero terms.
    for (int i = 0; i < 24; ++i) p = Series<R>::mul(eta, p, MulPolicy::Serial);
    return p.shifted(1);
}

// sigma_k(n) for n = 1..N by divisor sieve.
inline std::vector<long long> sigma_table(long N, int k) {
    std::vector<long long> s(static_cast<std::size_t>(N) + 1, 0);
    for (long d = 1; d <= N; ++d) {
        long long dk = 1;
        for (int i = 0; i < k; ++i) dk *= d;
        for (long m = d; m <= N; m += d) s[std::size_t(m)] += dk;
    }
    return s;
}

// E4 = 1 + 240 sum sigma_3(n) q^n through q^N.
template <class R>
Series<R> e4_series(long N) {
    if (N < 1) throw std::invalid_argument("e4_series: N >= 1 required");
    auto s3 = sigma_table(N, 3);
    std::vector<R> c(static_cast<std::size_t>(N) + 1);
    c[0] = ring_traits<R>::from_long(1);
    for (long n = 1; n <= N; ++n)
        c[std::size_t(n)] = ring_traits<R>::from_long(240) * ring_traits<R>::from_long(s3[std::size_t(n)]);
    return Series<R>(0, std::move(c));
}

// j = E4^3 / Delta, valuation -1, through q^N.
template <class R>
Series<R> j_series(long N) {
    if (N < 1) throw std::invalid_argument("j_series: N >= 1 required");
    Series<R> e4 = e4_series<R>(N + 2);
    Series<R> inv_delta = delta_series<R>(N + 2).invert();  // order N, valuation -1
    return (e4.pow(3) * inv_delta).truncated(N);
}

template <class R>
Series<R> inverse_delta_series(long N) {
    return delta_series<R>(N + 2).invert();
}

}  // namespace pmod4

#endif
