#ifndef PMOD4_HILBERT_HPP
#define PMOD4_HILBERT_HPP

#include <gmpxx.h>

#include <vector>

#include "pmod4/bigfloat.hpp"
#include "pmod4/binary_qf.hpp"
#include "pmod4/rings.hpp"

namespace pmod4 {

// Exact integer polynomial, coefficients ascending by degree.
struct IntPolynomial {
    std::vector<mpz_class> coeffs;
    long degree() const { return (long)coeffs.size() - 1; }
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
};

// tau_Q = (-b + sqrt(-D)) / (2a)
BigComplex heegner_point(const QuadForm& q, mpfr_prec_t prec);

// j(tau) from truncated q-expansions of E4^3 and Delta.  Requires
// Im(tau) >= sqrt(3)/2 so the series tail can be bounded.
BigComplex j_eval(const BigComplex& tau, mpfr_prec_t prec);

struct HilbertResult {
    IntPolynomial poly;
    mpfr_prec_t prec_used = 0;
};

// H_{-D}(X) = prod (X - j(tau_Q)) over the reduced forms, computed in
// arbitrary-precision complex arithmetic and rounded to integers.  Rounding
// is certified: every coefficient must land within 1/4 of an integer
// (imaginary part included), else precision doubles and the whole
// computation retries.  Throws when the retry budget is exhausted.
HilbertResult hilbert_poly(long long D, const ClassGroupData& cg,
                           mpfr_prec_t initial_prec = 0);

// Classical size-based starting precision: pi sqrt(D) sum_Q 1/a_Q bits
// plus guard bits.
mpfr_prec_t hilbert_initial_prec(long long D, const ClassGroupData& cg);

// |H(z)| evaluated in BigComplex, for root-residual checks.
BigFloat eval_abs(const IntPolynomial& p, const BigComplex& z);

template <class R>
std::vector<R> hilbert_mod(const IntPolynomial& p) {
    static_assert(ring_traits<R>::tag != RingTag::Integers);
    const unsigned long m = (ring_traits<R>::tag == RingTag::Mod2) ? 2 : 4;
    std::vector<R> out(p.coeffs.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = ring_traits<R>::from_long(
            (long long)mpz_fdiv_ui(p.coeffs[i].get_mpz_t(), m));
    return out;
}

}  // namespace pmod4

#endif
