#include "pmod4/hilbert.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "pmod4/classical.hpp"

namespace pmod4 {

BigComplex heegner_point(const QuadForm& q, mpfr_prec_t prec) {
    long long D = -q.discriminant();
    if (D <= 0 || q.a <= 0)
        throw std::domain_error("heegner_point: form must be positive definite");
    BigFloat d((long)D, prec);
    BigFloat two_a((long)(2 * q.a), prec);
    return {BigFloat((long)-q.b, prec) / two_a, d.sqrt() / two_a};
}

namespace {

// Terms needed so that |q|^M * M^8 < 2^{-prec-8}, with |q| = e^{-2pi Im tau}.
long terms_for(double im_tau, mpfr_prec_t prec) {
    const double bits_per_term = 2.0 * M_PI * im_tau / std::log(2.0);
    long m = 16;
    while (m * bits_per_term < (double)prec + 8.0 + 8.0 * std::log2((double)m))
        ++m;
    return m;
}

BigComplex horner(const std::vector<mpz_class>& coeffs, const BigComplex& q,
                  mpfr_prec_t prec) {
    BigComplex acc(prec);
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        acc = acc * q;
        acc.re = acc.re + BigFloat(coeffs[i], prec);
    }
    return acc;
}

BigComplex j_from_tables(const BigComplex& tau, mpfr_prec_t prec,
                         const std::vector<mpz_class>& e4c,
                         const std::vector<mpz_class>& deltac) {
    // q = e^{2 pi i tau}
    BigFloat two_pi = BigFloat::pi(prec) + BigFloat::pi(prec);
    BigFloat mod = (-(two_pi * tau.im)).exp();
    BigFloat ang = two_pi * tau.re;
    BigComplex q{mod * ang.cos(), mod * ang.sin()};
    BigComplex e4 = horner(e4c, q, prec);
    BigComplex delta_unit = horner(deltac, q, prec);  // Delta / q
    BigComplex num = e4 * e4 * e4;
    // j = E4^3 / (q * delta_unit)
    BigComplex den = q * delta_unit;
    BigFloat n2 = den.re * den.re + den.im * den.im;
    return {(num.re * den.re + num.im * den.im) / n2,
            (num.im * den.re - num.re * den.im) / n2};
}

}  // namespace

BigComplex j_eval(const BigComplex& tau, mpfr_prec_t prec) {
    double im = tau.im.to_double();
    if (!(im >= 0.866))
        throw std::domain_error("j_eval: Im(tau) >= sqrt(3)/2 required");
    long M = terms_for(im, prec);
    auto e4 = e4_series<mpz_class>(M).coeffs();
    auto delta_unit = eta_quotient_unit<mpz_class>(M).pow(24).coeffs();
    return j_from_tables(tau, prec, e4, delta_unit);
}

mpfr_prec_t hilbert_initial_prec(long long D, const ClassGroupData& cg) {
    double s = 0.0;
    for (const auto& f : cg.forms) s += 1.0 / (double)f.a;
    double bits = M_PI * std::sqrt((double)D) * s / std::log(2.0);
    return (mpfr_prec_t)std::ceil(bits) + 64;
}

HilbertResult hilbert_poly(long long D, const ClassGroupData& cg,
                           mpfr_prec_t initial_prec) {
    if (cg.D != D || cg.forms.empty())
        throw std::invalid_argument("hilbert_poly: class group data mismatch");
    mpfr_prec_t prec = initial_prec > 0 ? initial_prec : hilbert_initial_prec(D, cg);

    for (int attempt = 0; attempt < 8; ++attempt, prec *= 2) {
        double min_im = 1e300;
        std::vector<BigComplex> taus;
        taus.reserve(cg.forms.size());
        for (const auto& f : cg.forms) {
            taus.push_back(heegner_point(f, prec));
            min_im = std::min(min_im, taus.back().im.to_double());
        }
        long M = terms_for(min_im, prec);
        auto e4 = e4_series<mpz_class>(M).coeffs();
        auto delta_unit = eta_quotient_unit<mpz_class>(M).pow(24).coeffs();

        std::vector<BigComplex> roots((std::size_t)cg.forms.size(), BigComplex(prec));
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < (long long)taus.size(); ++i)
            roots[(std::size_t)i] = j_from_tables(taus[(std::size_t)i], prec, e4, delta_unit);

        // prod (X - j)
        std::vector<BigComplex> poly{BigComplex(BigFloat(1L, prec), BigFloat(0L, prec))};
        for (const auto& r : roots) {
            std::vector<BigComplex> next((std::size_t)poly.size() + 1, BigComplex(prec));
            for (std::size_t i = 0; i < poly.size(); ++i) {
                next[i] = next[i] - poly[i] * r;
                next[i + 1] = next[i + 1] + poly[i];
            }
            poly = std::move(next);
        }

        bool ok = true;
        IntPolynomial out;
        out.coeffs.reserve(poly.size());
        for (const auto& c : poly) {
            if (c.re.distance_to_integer() > 0.25 || c.im.abs().to_double() > 0.25) {
                ok = false;
                break;
            }
            out.coeffs.push_back(c.re.round_to_integer());
        }
        if (ok) return {std::move(out), prec};
    }
    throw std::runtime_error("hilbert_poly: precision retry budget exhausted for D=" +
                             std::to_string(D));
}

BigFloat eval_abs(const IntPolynomial& p, const BigComplex& z) {
    mpfr_prec_t prec = z.re.prec();
    BigComplex acc(prec);
    for (std::size_t i = p.coeffs.size(); i-- > 0;) {
        acc = acc * z;
        acc.re = acc.re + BigFloat(p.coeffs[i], prec);
    }
    return acc.abs();
}

}  // namespace pmod4
