#include "cuspfield/bigcomplex.hpp"

namespace cuspfield {

namespace {
constexpr mpfr_prec_t kGuard = 32;
} // namespace

big_complex operator+(const big_complex& a, const big_complex& b) {
    return {a.re + b.re, a.im + b.im};
}

big_complex operator-(const big_complex& a, const big_complex& b) {
    return {a.re - b.re, a.im - b.im};
}

big_complex operator*(const big_complex& a, const big_complex& b) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    big_float ar = a.re.round_to(p + kGuard), ai = a.im.round_to(p + kGuard);
    big_float br = b.re.round_to(p + kGuard), bi = b.im.round_to(p + kGuard);
    return {(ar * br - ai * bi).round_to(p), (ar * bi + ai * br).round_to(p)};
}

big_complex operator/(const big_complex& a, const big_complex& b) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    big_float ar = a.re.round_to(p + kGuard), ai = a.im.round_to(p + kGuard);
    big_float br = b.re.round_to(p + kGuard), bi = b.im.round_to(p + kGuard);
    big_float den = br * br + bi * bi;
    return {((ar * br + ai * bi) / den).round_to(p), ((ai * br - ar * bi) / den).round_to(p)};
}

big_complex operator-(const big_complex& a) { return {-a.re, -a.im}; }

bool operator==(const big_complex& a, const big_complex& b) {
    return a.re == b.re && a.im == b.im;
}

big_float abs(const big_complex& a) { return hypot(a.re, a.im); }

big_float arg(const big_complex& a) { return atan2(a.im, a.re); }

big_complex exp(const big_complex& a) {
    mpfr_prec_t p = a.prec();
    big_float x = a.re.round_to(p + kGuard), y = a.im.round_to(p + kGuard);
    big_float ex = exp(x);
    return {(ex * cos(y)).round_to(p), (ex * sin(y)).round_to(p)};
}

big_complex log(const big_complex& a) {
    mpfr_prec_t p = a.prec();
    big_float x = a.re.round_to(p + kGuard), y = a.im.round_to(p + kGuard);
    return {log(hypot(x, y)).round_to(p), atan2(y, x).round_to(p)};
}

big_complex sqrt(const big_complex& a) {
    mpfr_prec_t p = a.prec();
    if (a.is_zero()) return {big_float(0L, p), big_float(0L, p)};
    big_float x = a.re.round_to(p + kGuard), y = a.im.round_to(p + kGuard);
    big_float m = hypot(x, y);
    big_float two(2L, p + kGuard);
    big_float t = sqrt((m + abs(x)) / two);
    if (x.sign() >= 0) {
        return {t.round_to(p), (y / (two * t)).round_to(p)};
    }
    big_float u = abs(y) / (two * t);
    big_float v = y.sign() >= 0 ? t : -t;
    return {u.round_to(p), v.round_to(p)};
}

int cmp_lex(const big_complex& a, const big_complex& b) {
    int c = cmp(a.re, b.re);
    if (c != 0) return c;
    return cmp(a.im, b.im);
}

} // namespace cuspfield
