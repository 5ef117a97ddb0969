#pragma once

#include "cuspfield/bigfloat.hpp"

namespace cuspfield {

/// Complex number over big_float. Rectangular form; elementary functions are
/// computed with internal guard bits so the rounded result is accurate to
/// about 1 ulp of the working precision.
struct big_complex {
    big_float re, im;

    big_complex() = default;
    big_complex(big_float r, big_float i) : re(std::move(r)), im(std::move(i)) {}
    big_complex(long r, mpfr_prec_t prec) : re(r, prec), im(0L, prec) {}
    big_complex(double r, double i, mpfr_prec_t prec) : re(r, prec), im(i, prec) {}

    mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }
    big_complex round_to(mpfr_prec_t prec) const { return {re.round_to(prec), im.round_to(prec)}; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    big_complex conj() const { return {re, -im}; }
};

big_complex operator+(const big_complex& a, const big_complex& b);
big_complex operator-(const big_complex& a, const big_complex& b);
big_complex operator*(const big_complex& a, const big_complex& b);
big_complex operator/(const big_complex& a, const big_complex& b);
big_complex operator-(const big_complex& a);

bool operator==(const big_complex& a, const big_complex& b);

big_float abs(const big_complex& a);
big_float arg(const big_complex& a);
big_complex exp(const big_complex& a);
/// Principal logarithm, imaginary part in (-pi, pi].
big_complex log(const big_complex& a);
/// Principal square root (nonnegative real part).
big_complex sqrt(const big_complex& a);

/// Total order used for deterministic sorting: real part, then imaginary.
int cmp_lex(const big_complex& a, const big_complex& b);

} // namespace cuspfield
