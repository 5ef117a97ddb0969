#pragma once

#include "cuspfield/numsolve.hpp"

#include <gmpxx.h>
#include <vector>

namespace cuspfield {

/// Complex distance between two horospheres: hyperbolic distance d between
/// the spheres plus the meridian-direction rotation angle, with
/// w = exp(-(d + i theta)).
struct complex_distance_t {
    big_float d;
    big_float theta; // in (-pi, pi]
};

complex_distance_t complex_distance(const big_complex& w);

/// -w / (u_prev * u_next): the shape parameter of the ideal simplex spanned
/// by two consecutive intercusp geodesics of a region and their translations.
big_complex shape_parameter(const big_complex& w, const big_complex& u_prev,
                            const big_complex& u_next);

/// Point of the sphere at infinity (C plus a point at infinity).
struct ext_point {
    bool inf = false;
    big_complex z;

    static ext_point infinity() { return {true, {}}; }
    static ext_point finite(big_complex v) { return {false, std::move(v)}; }
};

/// (p0-p1)(p2-p3) / ((p0-p2)(p1-p3)) with limit cancellation at infinity.
big_complex cross_ratio(const ext_point& p0, const ext_point& p1, const ext_point& p2,
                        const ext_point& p3);

/// Exact-rational variant used as an independent oracle for the symbolic
/// cross-ratio identity.
struct q_point {
    bool inf = false;
    mpq_class v;
};
mpq_class cross_ratio_exact(const q_point& p0, const q_point& p1, const q_point& p2,
                            const q_point& p3);

/// 2x2 complex matrix acting by Mobius transformations.
struct cmat2 {
    big_complex a, b, c, d;

    static cmat2 identity(mpfr_prec_t prec);
    friend cmat2 operator*(const cmat2& x, const cmat2& y);
    ext_point apply(const ext_point& p) const;
};

/// (0 w; 1 0): exchanges the two horospheres of an intercusp geodesic.
cmat2 intercusp_matrix(const big_complex& w);
/// (1 u; 0 1): translation within a horosphere.
cmat2 translation_matrix(const big_complex& u);

/// Horosphere centers of one lifted region, replaying the normalization walk
/// of the cycle relation: P1 = infinity, P2 = 0, and each further center is
/// the image of 0 under the partial product of the region's matrices.
struct developed_region {
    std::vector<ext_point> centers;
    bool degenerate = false; // consecutive geodesic lifts share their endpoints
};

developed_region develop_region(const poly_system& s, const region_rec& r,
                                const std::vector<big_complex>& labels, mpfr_prec_t bits);

/// Traversal-oriented translation parameter entering a region product at one
/// boundary step.
big_complex face_translation_value(const poly_system& s, const face_edge& e,
                                   const std::vector<big_complex>& labels);

/// Scalar-deviation residuals (|p01|, |p10|, |p00 - p11|) of the numeric
/// region cycle product started at the given corner offset.
std::array<big_float, 3> region_product_residual(const poly_system& s, const region_rec& r,
                                                 const std::vector<big_complex>& labels,
                                                 int start, mpfr_prec_t bits);

} // namespace cuspfield
