#include "cuspfield/bigfloat.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace cuspfield {

namespace {
mpfr_prec_t joint_prec(const big_float& a, const big_float& b) {
    return std::max(a.prec(), b.prec());
}
} // namespace

big_float big_float::round_to(mpfr_prec_t prec) const {
    big_float r(0L, prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

mpz_class big_float::to_integer() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
    return z;
}

std::string big_float::to_string() const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
    if (mpfr_zero_p(v_)) return "0";
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, 0, v_, MPFR_RNDN);
    std::string digits(s);
    mpfr_free_str(s);
    std::string sign;
    if (digits[0] == '-') {
        sign = "-";
        digits.erase(0, 1);
    }
    // strip trailing zeros of the mantissa, keep at least one digit
    auto last = digits.find_last_not_of('0');
    digits.erase(last + 1);
    std::ostringstream out;
    out << sign << digits[0];
    if (digits.size() > 1) out << '.' << digits.substr(1);
    out << 'e' << (e - 1);
    return out.str();
}

big_float big_float::from_string(const std::string& s, mpfr_prec_t prec) {
    big_float r(0L, prec);
    mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN);
    return r;
}

big_float big_float::pi(mpfr_prec_t prec) {
    big_float r(0L, prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

big_float big_float::pow2(long e, mpfr_prec_t prec) {
    big_float r(1L, prec);
    mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
    return r;
}

big_float operator+(const big_float& a, const big_float& b) {
    big_float r(0L, joint_prec(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

big_float operator-(const big_float& a, const big_float& b) {
    big_float r(0L, joint_prec(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

big_float operator*(const big_float& a, const big_float& b) {
    big_float r(0L, joint_prec(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

big_float operator/(const big_float& a, const big_float& b) {
    big_float r(0L, joint_prec(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

big_float operator-(const big_float& a) {
    big_float r(0L, a.prec());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
}

big_float abs(const big_float& a) {
    big_float r(0L, a.prec());
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
}

big_float sqrt(const big_float& a) {
    big_float r(0L, a.prec());
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
}

big_float exp(const big_float& a) {
    big_float r(0L, a.prec());
    mpfr_exp(r.v_, a.v_, MPFR_RNDN);
    return r;
}

big_float log(const big_float& a) {
    big_float r(0L, a.prec());
    mpfr_log(r.v_, a.v_, MPFR_RNDN);
    return r;
}

big_float sin(const big_float& a) {
    big_float r(0L, a.prec());
    mpfr_sin(r.v_, a.v_, MPFR_RNDN);
    return r;
}

big_float cos(const big_float& a) {
    big_float r(0L, a.prec());
    mpfr_cos(r.v_, a.v_, MPFR_RNDN);
    return r;
}

big_float atan2(const big_float& y, const big_float& x) {
    big_float r(0L, joint_prec(y, x));
    mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
    return r;
}

big_float hypot(const big_float& x, const big_float& y) {
    big_float r(0L, joint_prec(x, y));
    mpfr_hypot(r.v_, x.v_, y.v_, MPFR_RNDN);
    return r;
}

big_float max(const big_float& a, const big_float& b) { return a < b ? b : a; }

} // namespace cuspfield
