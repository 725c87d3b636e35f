#ifndef PMOD4_SERIES_HPP
#define PMOD4_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pmod4/rings.hpp"

namespace pmod4 {

enum class MulPolicy { Auto, Serial, Parallel };

namespace kernels {

// out[k] += sum_i a[i] * b[k-i].  `out` must be pre-sized and zeroed.
// The serial kernel skips zero terms of `a`, which makes sparse-by-dense
// products cheap (eta-quotient builders rely on this).
template <class R>
void convolve_serial(const std::vector<R>& a, const std::vector<R>& b,
                     std::vector<R>& out) {
    const std::size_t nb = b.size(), no = out.size();
    for (std::size_t i = 0; i < a.size() && i < no; ++i) {
        if (ring_traits<R>::is_zero(a[i])) continue;
        const std::size_t lim = std::min(nb, no - i);
        for (std::size_t k = 0; k < lim; ++k) out[i + k] += a[i] * b[k];
    }
}

// Same contract, parallel over output indices.
template <class R>
void convolve_parallel(const std::vector<R>& a, const std::vector<R>& b,
                       std::vector<R>& out) {
    const long long na = (long long)a.size(), nb = (long long)b.size();
    const long long no = (long long)out.size();
#pragma omp parallel for schedule(static)
    for (long long k = 0; k < no; ++k) {
        R acc = out[k];
        const long long lo = std::max(0LL, k - nb + 1);
        const long long hi = std::min(na - 1, k);
        for (long long i = lo; i <= hi; ++i) acc += a[i] * b[k - i];
        out[k] = acc;
    }
}

}  // namespace kernels

// Truncated Laurent series over R: coefficients are known exactly for
// exponents in [valuation, order].  Reading past `order` throws; reading
// below the valuation returns 0 (the leading stored coefficient is nonzero,
// so everything below it is genuinely zero).
template <class R>
class Series {
  public:
    using traits = ring_traits<R>;

    static Series zero(long order) {
        Series s;
        s.order_ = order;
        s.val_ = order + 1;
        return s;
    }
    static Series constant(R c, long order) { return monomial(0, std::move(c), order); }
    static Series one(long order) { return constant(traits::from_long(1), order); }
    static Series monomial(long exp, R c, long order) {
        if (exp > order) throw std::invalid_argument("Series::monomial: exp > order");
        std::vector<R> cs(static_cast<std::size_t>(order - exp + 1));
        cs[0] = std::move(c);
        return Series(exp, std::move(cs));
    }

    Series() = default;
    Series(long valuation, std::vector<R> coeffs)
        : val_(valuation),
          order_(valuation + (long)coeffs.size() - 1),
          c_(std::move(coeffs)) {
        normalize();
    }

    long valuation() const { return val_; }
    long order() const { return order_; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<R>& coeffs() const { return c_; }

    R coeff(long e) const {
        if (e > order_)
            throw std::out_of_range("Series::coeff: exponent beyond known order");
        if (e < val_) return R{};
        return c_[static_cast<std::size_t>(e - val_)];
    }

    Series truncated(long new_order) const {
        if (new_order > order_)
            throw std::out_of_range("Series::truncated: cannot extend precision");
        if (new_order < val_) return zero(new_order);
        std::vector<R> cs(c_.begin(), c_.begin() + (new_order - val_ + 1));
        return Series(val_, std::move(cs));
    }

    // q^k * this
    Series shifted(long k) const {
        Series s(*this);
        s.val_ += k;
        s.order_ += k;
        return s;
    }

    Series scaled(const R& f) const {
        Series s(*this);
        for (auto& c : s.c_) c = c * f;
        s.normalize();
        return s;
    }

    // Substitution q -> q^k (k >= 1); with `alternate`, q -> -q^k
    // (sign flip on odd source exponents).  Exact exponent bookkeeping:
    // source exponents [v, N] map to [k*v, k*N]; everything between known.
    Series stretched(long k, bool alternate = false) const {
        if (k < 1) throw std::invalid_argument("Series::stretched: k >= 1 required");
        if (is_zero()) return zero(k * order_);
        std::vector<R> cs(static_cast<std::size_t>(k * (order_ - val_) + 1));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            long src = val_ + (long)i;
            R c = c_[i];
            if (alternate && (((src % 2) + 2) % 2 == 1)) c = -c;
            cs[k * (long)i] = std::move(c);
        }
        return Series(k * val_, std::move(cs));
    }

    friend Series operator-(const Series& a) {
        Series s(a);
        for (auto& c : s.c_) c = -c;
        return s;
    }

    friend Series operator+(const Series& a, const Series& b) {
        long order = std::min(a.order_, b.order_);
        long val = std::min(a.val_, b.val_);
        if (val > order) return zero(order);
        std::vector<R> cs(static_cast<std::size_t>(order - val + 1));
        for (long e = val; e <= order; ++e) {
            R x{};
            if (e >= a.val_ && e <= a.order_) x += a.c_[std::size_t(e - a.val_)];
            if (e >= b.val_ && e <= b.order_) x += b.c_[std::size_t(e - b.val_)];
            cs[std::size_t(e - val)] = std::move(x);
        }
        return Series(val, std::move(cs));
    }

    friend Series operator-(const Series& a, const Series& b) { return a + (-b); }

    static Series mul(const Series& a, const Series& b, MulPolicy policy) {
        long order = std::min(a.order_ + b.val_, b.order_ + a.val_);
        if (a.is_zero() || b.is_zero()) return zero(order);
        long val = a.val_ + b.val_;
        std::vector<R> out(static_cast<std::size_t>(order - val + 1));
        bool parallel = (policy == MulPolicy::Parallel);
        if (policy == MulPolicy::Auto)
            parallel = (a.c_.size() > 512 && b.c_.size() > 512);
        if (parallel)
            kernels::convolve_parallel(a.c_, b.c_, out);
        else
            kernels::convolve_serial(a.c_, b.c_, out);
        return Series(val, std::move(out));
    }

    friend Series operator*(const Series& a, const Series& b) {
        return mul(a, b, MulPolicy::Auto);
    }

    // Long division this / d; requires unit leading coefficient of d.
    Series divided_by(const Series& d) const {
        if (d.is_zero())
            throw std::domain_error("Series::divided_by: division by zero series");
        const R lead_inv = traits::unit_inverse(d.c_[0]);
        long rel = std::min(order_ - val_, d.order_ - d.val_);
        if (is_zero()) return zero(rel + val_ - d.val_);
        rel = std::min(rel, order_ - val_);
        std::vector<R> q(static_cast<std::size_t>(rel + 1));
        for (long i = 0; i <= rel; ++i) {
            R acc = (i <= order_ - val_) ? c_[std::size_t(i)] : R{};
            long kmax = std::min<long>(i, (long)d.c_.size() - 1);
            for (long k = 1; k <= kmax; ++k) acc -= d.c_[std::size_t(k)] * q[std::size_t(i - k)];
            q[std::size_t(i)] = acc * lead_inv;
        }
        return Series(val_ - d.val_, std::move(q));
    }

    Series invert() const {
        if (is_zero()) throw std::domain_error("Series::invert: zero series");
        if (!traits::is_unit(c_[0]))
            throw std::domain_error("Series::invert: leading coefficient is not a unit");
        return one(order_ - val_).divided_by(*this);
    }

    Series pow(unsigned long k) const {
        if (k == 0) return one(is_zero() ? order_ : order_ - val_);
        Series base(*this);
        Series acc = one(order_ - val_);
        bool have = false;
        while (k > 0) {
            if (k & 1UL) {
                acc = have ? acc * base : base;
                have = true;
            }
            k >>= 1;
            if (k > 0) base = base * base;
        }
        return acc;
    }

    // D = q d/dq applied termwise.
    Series derivative_qddq() const {
        Series s(*this);
        for (std::size_t i = 0; i < s.c_.size(); ++i)
            s.c_[i] = s.c_[i] * traits::from_long(s.val_ + (long)i);
        s.normalize();
        return s;
    }

    // (D this)/this.  Exact only over Z; residue rings are rejected because
    // the quotient need not exist there.
    Series dlog() const {
        if (traits::tag != RingTag::Integers)
            throw std::domain_error("Series::dlog: defined over Z only");
        if (is_zero()) throw std::domain_error("Series::dlog: zero series");
        if (!traits::is_unit(c_[0]))
            throw std::domain_error("Series::dlog: leading coefficient is not a unit");
        return derivative_qddq().divided_by(*this);
    }

    friend bool operator==(const Series& a, const Series& b) {
        return a.val_ == b.val_ && a.order_ == b.order_ && a.c_ == b.c_;
    }

  private:
    void normalize() {
        std::size_t lead = 0;
        while (lead < c_.size() && traits::is_zero(c_[lead])) ++lead;
        if (lead == c_.size()) {
            c_.clear();
            val_ = order_ + 1;
        } else if (lead > 0) {
            c_.erase(c_.begin(), c_.begin() + (long)lead);
            val_ += (long)lead;
        }
    }

    long val_ = 1;
    long order_ = 0;  // default-constructed series is zero with order 0
    std::vector<R> c_;
};

// Coefficientwise reduction Z -> Z/2 or Z/4.
template <class To>
Series<To> reduce_mod(const Series<mpz_class>& a) {
    static_assert(ring_traits<To>::tag != RingTag::Integers);
    const unsigned long m = (ring_traits<To>::tag == RingTag::Mod2) ? 2 : 4;
    if (a.is_zero()) return Series<To>::zero(a.order());
    std::vector<To> c(a.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = ring_traits<To>::from_long(
            (long long)mpz_fdiv_ui(a.coeffs()[i].get_mpz_t(), m));
    return Series<To>(a.valuation(), std::move(c));
}

}  // namespace pmod4

#endif
