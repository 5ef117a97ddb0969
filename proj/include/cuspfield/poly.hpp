#pragma once

#include "cuspfield/bigcomplex.hpp"

#include <gmpxx.h>
#include <map>
#include <string>
#include <vector>

namespace cuspfield {

/// Monomial as a sorted sparse exponent vector (variable id, exponent > 0).
struct monomial {
    std::vector<std::pair<int, int>> powers;

    int total_degree() const {
        int d = 0;
        for (auto& [v, e] : powers) d += e;
        return d;
    }
    friend bool operator<(const monomial& a, const monomial& b) { return a.powers < b.powers; }
    friend bool operator==(const monomial& a, const monomial& b) { return a.powers == b.powers; }
};

/// Sparse multivariate polynomial with exact integer coefficients.
class int_poly {
public:
    int_poly() = default;

    static int_poly constant(long c);
    static int_poly constant(const mpz_class& c);
    static int_poly variable(int v);
    /// c1 * x_v + c0
    static int_poly affine(int v, long c1, long c0);

    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;
    int degree_in(int v) const;
    std::vector<int> variables() const;
    size_t num_terms() const { return terms_.size(); }
    const std::map<monomial, mpz_class>& terms() const { return terms_; }

    int_poly operator-() const;
    friend int_poly operator+(const int_poly& a, const int_poly& b);
    friend int_poly operator-(const int_poly& a, const int_poly& b);
    friend int_poly operator*(const int_poly& a, const int_poly& b);
    friend bool operator==(const int_poly& a, const int_poly& b) { return a.terms_ == b.terms_; }

    int_poly derivative(int v) const;
    /// Replace x_v by the affine form c1 * x_w + c0 (w < 0 means constant c0).
    int_poly substitute_affine(int v, int w, long c1, long c0) const;

    /// Evaluate at the assignment, in fixed monomial order with cached powers.
    big_complex eval(const std::vector<big_complex>& x, mpfr_prec_t prec) const;

    std::string to_string() const;

    void add_term(const monomial& m, const mpz_class& c);

private:
    std::map<monomial, mpz_class> terms_;
};

/// 2x2 matrix over integer polynomials, used to form region products in
/// PGL(2,C): the involution (0 w; 1 0) and the translation (1 u; 0 1).
struct poly_mat2 {
    int_poly a, b, c, d;

    static poly_mat2 identity();
    friend poly_mat2 operator*(const poly_mat2& x, const poly_mat2& y);
};

poly_mat2 intercusp_matrix_poly(const int_poly& w);
poly_mat2 translation_matrix_poly(const int_poly& u);

} // namespace cuspfield
