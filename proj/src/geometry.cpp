#include "cuspfield/geometry.hpp"
#include "cuspfield/errors.hpp"

namespace cuspfield {

complex_distance_t complex_distance(const big_complex& w) {
    const std::string where = "geometry.complex_distance";
    if (w.is_zero()) throw error(errc::degenerate_label, where, "zero intercusp parameter");
    mpfr_prec_t bits = w.prec();
    big_complex delta = -log(w); // principal branch
    big_float d = delta.re;
    big_float theta = delta.im;
    big_float pi = big_float::pi(bits);
    // -log maps arg pi to theta = -pi; fold it onto the (-pi, pi] convention
    if (theta <= -pi) theta = theta + (pi + pi);
    big_float tol = big_float::pow2(-static_cast<long>(bits) / 4, bits);
    if (d < -tol)
        throw error(errc::negative_distance, where,
                    "negative horosphere distance: " + d.to_string());
    return {d, theta};
}

big_complex shape_parameter(const big_complex& w, const big_complex& u_prev,
                            const big_complex& u_next) {
    if (u_prev.is_zero() || u_next.is_zero())
        throw error(errc::degenerate_label, "geometry.shape_parameter",
                    "zero translation parameter at this corner");
    return -w / (u_prev * u_next);
}

namespace {

bool same_point(const ext_point& a, const ext_point& b) {
    if (a.inf || b.inf) return a.inf && b.inf;
    return a.z == b.z;
}

} // namespace

big_complex cross_ratio(const ext_point& p0, const ext_point& p1, const ext_point& p2,
                        const ext_point& p3) {
    const std::string where = "geometry.cross_ratio";
    const ext_point* ps[4] = {&p0, &p1, &p2, &p3};
    int num_inf = 0;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j)
            if (same_point(*ps[i], *ps[j]))
                throw error(errc::coincident_points, where, "points must be pairwise distinct");
        if (ps[i]->inf) ++num_inf;
    }
    mpfr_prec_t bits = 64;
    for (int i = 0; i < 4; ++i)
        if (!ps[i]->inf) bits = std::max(bits, ps[i]->z.prec());
    big_complex one(1L, bits);
    if (num_inf == 0)
        return ((p0.z - p1.z) * (p2.z - p3.z)) / ((p0.z - p2.z) * (p1.z - p3.z));
    if (p0.inf) return (p2.z - p3.z) / (p1.z - p3.z);
    if (p1.inf) return -(p2.z - p3.z) / (p0.z - p2.z);
    if (p2.inf) return -(p0.z - p1.z) / (p1.z - p3.z);
    return (p0.z - p1.z) / (p0.z - p2.z); // p3 at infinity
}

mpq_class cross_ratio_exact(const q_point& p0, const q_point& p1, const q_point& p2,
                            const q_point& p3) {
    const std::string where = "geometry.cross_ratio";
    const q_point* ps[4] = {&p0, &p1, &p2, &p3};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            bool coincide = (ps[i]->inf || ps[j]->inf) ? (ps[i]->inf && ps[j]->inf)
                                                       : (ps[i]->v == ps[j]->v);
            if (coincide)
                throw error(errc::coincident_points, where, "points must be pairwise distinct");
        }
    if (p0.inf) return (p2.v - p3.v) / (p1.v - p3.v);
    if (p1.inf) return -(p2.v - p3.v) / (p0.v - p2.v);
    if (p2.inf) return -(p0.v - p1.v) / (p1.v - p3.v);
    if (p3.inf) return (p0.v - p1.v) / (p0.v - p2.v);
    return ((p0.v - p1.v) * (p2.v - p3.v)) / ((p0.v - p2.v) * (p1.v - p3.v));
}

cmat2 cmat2::identity(mpfr_prec_t prec) {
    return {big_complex(1L, prec), big_complex(0L, prec), big_complex(0L, prec),
            big_complex(1L, prec)};
}

cmat2 operator*(const cmat2& x, const cmat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

ext_point cmat2::apply(const ext_point& p) const {
    if (p.inf) {
        if (c.is_zero()) return ext_point::infinity();
        return ext_point::finite(a / c);
    }
    big_complex den = c * p.z + d;
    if (den.is_zero()) return ext_point::infinity();
    return ext_point::finite((a * p.z + b) / den);
}

cmat2 intercusp_matrix(const big_complex& w) {
    if (w.is_zero())
        throw error(errc::degenerate_label, "geometry.intercusp_matrix", "zero intercusp parameter");
    mpfr_prec_t p = w.prec();
    return {big_complex(0L, p), w, big_complex(1L, p), big_complex(0L, p)};
}

cmat2 translation_matrix(const big_complex& u) {
    mpfr_prec_t p = u.prec();
    return {big_complex(1L, p), u, big_complex(0L, p), big_complex(1L, p)};
}

big_complex face_translation_value(const poly_system& s, const face_edge& e,
                                   const std::vector<big_complex>& labels) {
    auto [lab, sgn] = face_translation(s.diagram, e);
    return sgn < 0 ? -labels[lab] : labels[lab];
}

developed_region develop_region(const poly_system& s, const region_rec& r,
                                const std::vector<big_complex>& labels, mpfr_prec_t bits) {
    const std::string where = "geometry.develop_region";
    int k = r.sides();
    developed_region out;
    out.centers.push_back(ext_point::infinity());
    out.centers.push_back(ext_point::finite(big_complex(0L, bits)));
    cmat2 acc = cmat2::identity(bits);
    for (int j = 2; j < k; ++j) {
        const big_complex& w = labels[r.edges[j - 2].corner];
        if (w.is_zero()) throw error(errc::degenerate_label, where, "zero crossing label");
        big_complex v = face_translation_value(s, r.edges[j - 1], labels).round_to(bits);
        acc = acc * intercusp_matrix(w.round_to(bits)) * translation_matrix(v);
        out.centers.push_back(acc.apply(ext_point::finite(big_complex(0L, bits))));
    }
    for (int j = 0; j < k; ++j) {
        big_complex v = face_translation_value(s, r.edges[j], labels);
        if (v.is_zero()) out.degenerate = true;
    }
    return out;
}

std::array<big_float, 3> region_product_residual(const poly_system& s, const region_rec& r,
                                                 const std::vector<big_complex>& labels,
                                                 int start, mpfr_prec_t bits) {
    int k = r.sides();
    cmat2 prod = cmat2::identity(bits);
    for (int i = 0; i < k; ++i) {
        const face_edge& corner_step = r.edges[(start + i) % k];
        const face_edge& next_step = r.edges[(start + i + 1) % k];
        big_complex w = labels[corner_step.corner].round_to(bits);
        big_complex v = face_translation_value(s, next_step, labels).round_to(bits);
        prod = prod * intercusp_matrix(w) * translation_matrix(v);
    }
    return {abs(prod.b), abs(prod.c), abs(prod.a - prod.d)};
}

} // namespace cuspfield
