#pragma once

#include "cuspfield/bigcomplex.hpp"
#include "cuspfield/lll.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cuspfield {

/// Integer-coefficient polynomial certified to annihilate a numeric value:
/// content 1, positive leading coefficient, constant term first. Minimality
/// holds operationally: every lower degree was swept at the same height
/// bound and produced no relation.
struct min_poly {
    std::vector<mpz_class> coeffs;
    mpfr_prec_t certified_at_bits = 0;
    big_float residual;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    mpz_class height() const;
    std::string to_string() const;

    big_complex eval(const big_complex& z, mpfr_prec_t bits) const;
    friend bool operator==(const min_poly& a, const min_poly& b) { return a.coeffs == b.coeffs; }
};

struct field_options {
    int max_degree = 8;
    long height_bits = 64;
    mpfr_prec_t bits = 128;
};

/// Integer-relation search over (1, z, ..., z^d) by LLL, sweeping degrees
/// upward. At working precision `bits` a degree-d attempt supports
/// coefficient heights up to min(height_bits, (bits - 16 d)/4) bits; the
/// recommended precision for a full sweep is therefore
/// bits >= 16 max_degree + 4 height_bits. Accepts the first relation with
/// |p(z)| < 2^-bits/4 at full precision.
min_poly minimal_polynomial(const big_complex& z, int max_degree, long height_bits,
                            mpfr_prec_t bits);

/// Rational expression of z2 in powers of z1 (degree < deg1), found by an
/// integer relation over (1, z1, ..., z1^{deg1-1}, z2). Empty when no
/// relation exists at this precision.
std::optional<std::vector<mpq_class>> express_in(const big_complex& z1, int deg1,
                                                 const big_complex& z2, mpfr_prec_t bits);

struct same_field_result {
    bool same = false;
    std::vector<mpq_class> witness; // z2 = witness(z1) when nonempty
};

/// Q(z1) == Q(z2): membership both ways, or one-way membership with equal
/// degrees. deg1 is the degree of z1's minimal polynomial.
same_field_result same_field(const big_complex& z1, const big_complex& z2, int deg1,
                             mpfr_prec_t bits);

struct member_expr {
    int label = -1;
    std::vector<mpq_class> witness;
};

struct field_description {
    int generator_label = -1;
    // set when a primitive-element combination was needed:
    // generator = value(generator_label) + combo_k * value(combo_label)
    int combo_label = -1;
    long combo_k = 0;
    big_complex generator_value;
    min_poly poly;
    std::vector<member_expr> members; // one per label, in label order
    std::vector<int> failures;        // labels with no witness (empty on success)
};

/// Recognize the common number field of a full label assignment. `labels`
/// must carry at least 2*opts.bits precision; every minimal polynomial is
/// recomputed at both opts.bits and 2*opts.bits and must agree. Throws
/// FieldDescriptionIncomplete when some label cannot be expressed in the
/// chosen generator even after the bounded primitive-element search.
field_description describe_field(const std::vector<big_complex>& labels,
                                 const field_options& opts);

} // namespace cuspfield
