#ifndef PMOD4_BIGFLOAT_HPP
#define PMOD4_BIGFLOAT_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace pmod4 {

// RAII value wrapper around mpfr_t.  Precision is explicit per value and
// propagates as the max of the operands; round-to-nearest throughout.
class BigFloat {
  public:
    explicit BigFloat(mpfr_prec_t prec = 64) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigFloat(long x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, x, MPFR_RNDN); }
    BigFloat(const mpz_class& x, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN);
    }
    BigFloat(const BigFloat& o) { mpfr_init2(v_, o.prec()); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, o.prec()); mpfr_swap(v_, o.v_); }
    BigFloat& operator=(BigFloat o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    static BigFloat pi(mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    BigFloat operator-() const {
        BigFloat r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    BigFloat sqrt() const { BigFloat r(prec()); mpfr_sqrt(r.v_, v_, MPFR_RNDN); return r; }
    BigFloat exp() const { BigFloat r(prec()); mpfr_exp(r.v_, v_, MPFR_RNDN); return r; }
    BigFloat cos() const { BigFloat r(prec()); mpfr_cos(r.v_, v_, MPFR_RNDN); return r; }
    BigFloat sin() const { BigFloat r(prec()); mpfr_sin(r.v_, v_, MPFR_RNDN); return r; }
    BigFloat abs() const { BigFloat r(prec()); mpfr_abs(r.v_, v_, MPFR_RNDN); return r; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    mpz_class round_to_integer() const {
        BigFloat t(prec());
        mpfr_round(t.v_, v_);
        mpz_class z;
        mpfr_get_z(z.get_mpz_t(), t.v_, MPFR_RNDN);
        return z;
    }

    // |x - nearest integer|
    double distance_to_integer() const {
        BigFloat n(round_to_integer(), prec());
        return (*this - n).abs().to_double();
    }

    friend bool operator<(const BigFloat& a, const BigFloat& b) {
        return mpfr_cmp(a.v_, b.v_) < 0;
    }

  private:
    mpfr_t v_;
};

struct BigComplex {
    BigFloat re, im;

    explicit BigComplex(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    BigComplex operator-() const { return {-re, -im}; }

    BigFloat abs() const { return (re * re + im * im).sqrt(); }
};

}  // namespace pmod4

#endif
