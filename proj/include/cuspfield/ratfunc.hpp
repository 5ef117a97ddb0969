#pragma once

#include "cuspfield/bigcomplex.hpp"

#include <gmpxx.h>
#include <string>
#include <vector>

namespace cuspfield {

/// Dense univariate polynomial over Q, constant coefficient first.
class qpoly {
public:
    qpoly() = default;
    explicit qpoly(mpq_class c) : c_{std::move(c)} { trim(); }
    static qpoly variable();
    static qpoly from_int_coeffs(const std::vector<mpz_class>& coeffs);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const std::vector<mpq_class>& coeffs() const { return c_; }
    const mpq_class& leading() const { return c_.back(); }

    friend qpoly operator+(const qpoly& a, const qpoly& b);
    friend qpoly operator-(const qpoly& a, const qpoly& b);
    friend qpoly operator*(const qpoly& a, const qpoly& b);
    qpoly operator-() const;
    friend bool operator==(const qpoly& a, const qpoly& b) { return a.c_ == b.c_; }

    qpoly monic() const;
    static void divmod(const qpoly& a, const qpoly& b, qpoly& quo, qpoly& rem);
    static qpoly gcd(qpoly a, qpoly b); // monic

    /// Primitive integer coefficients (denominators cleared, content 1,
    /// positive leading coefficient).
    std::vector<mpz_class> primitive_int_coeffs() const;

    big_complex eval(const big_complex& x, mpfr_prec_t bits) const;
    std::string to_string(const std::string& var = "x") const;

private:
    std::vector<mpq_class> c_;
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    friend class ratfunc;
};

/// Rational function num/den over Q in one variable, kept in lowest terms
/// with a monic denominator.
class ratfunc {
public:
    ratfunc() = default; // zero
    explicit ratfunc(mpq_class c) : num_(qpoly(std::move(c))), den_(qpoly(mpq_class(1))) {}
    ratfunc(qpoly num, qpoly den);
    static ratfunc variable();

    bool is_zero() const { return num_.is_zero(); }
    const qpoly& num() const { return num_; }
    const qpoly& den() const { return den_; }

    friend ratfunc operator+(const ratfunc& a, const ratfunc& b);
    friend ratfunc operator-(const ratfunc& a, const ratfunc& b);
    friend ratfunc operator*(const ratfunc& a, const ratfunc& b);
    friend ratfunc operator/(const ratfunc& a, const ratfunc& b);
    ratfunc operator-() const;
    friend bool operator==(const ratfunc& a, const ratfunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    big_complex eval(const big_complex& x, mpfr_prec_t bits) const;
    std::string to_string(const std::string& var = "x") const;

private:
    qpoly num_;
    qpoly den_{mpq_class(1)};
};

} // namespace cuspfield
