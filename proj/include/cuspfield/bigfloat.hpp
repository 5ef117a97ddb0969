#pragma once

#include <mpfr.h>
#include <gmpxx.h>
#include <string>
#include <utility>

namespace cuspfield {

/// Arbitrary-precision binary floating point value (MPFR backed).
///
/// Every value carries its own mantissa precision in bits. Binary operations
/// round to the larger of the two operand precisions with round-to-nearest-even,
/// so a fixed sequence of operations is bit-deterministic. Elementary functions
/// are correctly rounded by MPFR at the working precision.
class big_float {
public:
    big_float() { mpfr_init2(v_, 64); mpfr_set_nan(v_); }
    big_float(long v, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, v, MPFR_RNDN); }
    big_float(double v, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, v, MPFR_RNDN); }
    big_float(const mpz_class& v, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
    }
    big_float(const mpq_class& v, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
    }

    big_float(const big_float& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    big_float(big_float&& o) noexcept {
        mpfr_init2(v_, 2);
        mpfr_swap(v_, o.v_);
    }
    big_float& operator=(const big_float& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    big_float& operator=(big_float&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~big_float() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    big_float round_to(mpfr_prec_t prec) const;

    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Nearest integer as an exact bignum.
    mpz_class to_integer() const;
    /// Decimal string with enough digits to identify the value at its precision.
    std::string to_string() const;
    static big_float from_string(const std::string& s, mpfr_prec_t prec);

    static big_float pi(mpfr_prec_t prec);
    /// 2^e as an exact value (e may be negative).
    static big_float pow2(long e, mpfr_prec_t prec);

    friend big_float operator+(const big_float& a, const big_float& b);
    friend big_float operator-(const big_float& a, const big_float& b);
    friend big_float operator*(const big_float& a, const big_float& b);
    friend big_float operator/(const big_float& a, const big_float& b);
    friend big_float operator-(const big_float& a);

    friend int cmp(const big_float& a, const big_float& b) { return mpfr_cmp(a.v_, b.v_); }
    friend bool operator<(const big_float& a, const big_float& b) { return cmp(a, b) < 0; }
    friend bool operator>(const big_float& a, const big_float& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const big_float& a, const big_float& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const big_float& a, const big_float& b) { return cmp(a, b) >= 0; }
    friend bool operator==(const big_float& a, const big_float& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

    friend big_float abs(const big_float& a);
    friend big_float sqrt(const big_float& a);
    friend big_float exp(const big_float& a);
    friend big_float log(const big_float& a);
    friend big_float sin(const big_float& a);
    friend big_float cos(const big_float& a);
    friend big_float atan2(const big_float& y, const big_float& x);
    friend big_float hypot(const big_float& x, const big_float& y);

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

private:
    mpfr_t v_;
};

big_float max(const big_float& a, const big_float& b);

} // namespace cuspfield
