#include "cuspfield/tt_system.hpp"
#include "cuspfield/errors.hpp"

#include <numeric>
#include <vector>

namespace cuspfield {

std::string label_var::name() const {
    if (kind == kind_t::crossing) return "w" + std::to_string(crossing);
    return "u" + std::to_string(arc) + (side == 0 ? "L" : "R");
}

namespace detail {
// calibration hook: when nonempty, overrides the per-arc relation signs
std::vector<int> g_sigma_override;
} // namespace detail

int arc_relation_sign(const link_diagram& d, int arc) {
    if (!detail::g_sigma_override.empty()) return detail::g_sigma_override[arc];
    // +1 when the arc leaves its tail crossing under the other strand; the
    // choice of which sign goes with which end is the calibrated convention
    return d.arcs[arc].tail.slot == 2 ? +1 : -1;
}

namespace {

int edge_label_id(const link_diagram& d, int arc, int side) {
    return d.num_crossings() + 2 * arc + side;
}

void require_alternating(const link_diagram& d, const std::string& where) {
    if (!is_alternating(d))
        throw error(errc::unsupported_diagram, where,
                    "equation generation requires an alternating diagram");
}

} // namespace

int_poly arc_relation(const link_diagram& d, int arc) {
    require_alternating(d, "tt_system.arc_relation");
    int_poly p = int_poly::variable(edge_label_id(d, arc, 1)) -
                 int_poly::variable(edge_label_id(d, arc, 0)) -
                 int_poly::constant(arc_relation_sign(d, arc));
    return p;
}

std::pair<int, int> face_translation(const link_diagram& d, const face_edge& e) {
    if (e.forward) return {edge_label_id(d, e.arc, 0), +1};
    return {edge_label_id(d, e.arc, 1), -1};
}

std::array<int_poly, 3> region_relation(const link_diagram& d, const region_rec& r, int start,
                                        const std::function<int_poly(int)>& var_poly) {
    auto vp = var_poly ? var_poly : [](int lab) { return int_poly::variable(lab); };
    int k = r.sides();
    poly_mat2 prod = poly_mat2::identity();
    for (int i = 0; i < k; ++i) {
        const face_edge& corner_step = r.edges[(start + i) % k];
        const face_edge& next_step = r.edges[(start + i + 1) % k];
        prod = prod * intercusp_matrix_poly(vp(corner_step.corner));
        auto [lab, sgn] = face_translation(d, next_step);
        int_poly u = vp(lab);
        if (sgn < 0) u = -u;
        prod = prod * translation_matrix_poly(u);
    }
    return {prod.b, prod.c, prod.a - prod.d};
}

std::vector<big_complex> poly_system::reconstruct_labels(const std::vector<big_complex>& x,
                                                         mpfr_prec_t prec) const {
    std::vector<big_complex> vals;
    vals.reserve(labels.size());
    for (int lab = 0; lab < num_labels(); ++lab) {
        if (unknown_of_label[lab] >= 0) {
            vals.push_back(x[unknown_of_label[lab]].round_to(prec));
            continue;
        }
        const sub_expr& s = *subs[lab];
        big_complex v(s.cnst, prec);
        if (s.unknown >= 0) {
            big_complex c(s.coeff, prec);
            v = v + c * x[s.unknown];
        }
        vals.push_back(v);
    }
    return vals;
}

poly_system build_system(const link_diagram& d, bool eager_reduction) {
    const std::string where = "tt_system.build_system";
    int n = d.num_crossings();
    if (n < 4 || !is_reduced(d))
        throw error(errc::not_hyperbolic_candidate, where,
                    "need a reduced diagram with at least 4 crossings");
    require_alternating(d, where);

    poly_system sys;
    sys.diagram = d;
    sys.reduced = eager_reduction;
    for (int c = 0; c < n; ++c)
        sys.labels.push_back({label_var::kind_t::crossing, c, -1, -1});
    for (int a = 0; a < d.num_arcs(); ++a)
        for (int side = 0; side < 2; ++side)
            sys.labels.push_back({label_var::kind_t::edge, -1, a, side});
    int total = sys.num_labels();
    sys.unknown_of_label.assign(total, -1);
    sys.subs.assign(total, std::nullopt);

    if (!eager_reduction) {
        sys.label_of_unknown.resize(total);
        std::iota(sys.label_of_unknown.begin(), sys.label_of_unknown.end(), 0);
        std::iota(sys.unknown_of_label.begin(), sys.unknown_of_label.end(), 0);
        for (const region_rec& r : d.regions) {
            auto rel = region_relation(d, r);
            for (int comp = 0; comp < 3; ++comp)
                if (!rel[comp].is_zero())
                    sys.equations.push_back({rel[comp], equation::source::region, r.id, comp});
        }
        for (int a = 0; a < d.num_arcs(); ++a)
            sys.equations.push_back({arc_relation(d, a), equation::source::arc, a, 0});
        return sys;
    }

    // bigon forcing: the cycle relation of a two-sided region collapses to
    // u = 0 on both inner sides and equality of the two crossing labels
    std::vector<int> root(n);
    std::iota(root.begin(), root.end(), 0);
    std::function<int(int)> find = [&](int c) { return root[c] == c ? c : root[c] = find(root[c]); };
    std::vector<int> zero_forced(total, -1); // label -> forcing region id
    for (const region_rec& r : d.regions) {
        if (r.sides() != 2) continue;
        for (const face_edge& e : r.edges) {
            int lab = edge_label_id(d, e.arc, e.forward ? 0 : 1);
            zero_forced[lab] = r.id;
        }
        int c0 = find(r.edges[0].corner), c1 = find(r.edges[1].corner);
        if (c0 != c1) root[std::max(c0, c1)] = std::min(c0, c1);
    }

    // crossing labels: one unknown per merge class
    for (int c = 0; c < n; ++c) {
        if (find(c) == c) {
            sys.unknown_of_label[c] = static_cast<int>(sys.label_of_unknown.size());
            sys.label_of_unknown.push_back(c);
        }
    }
    for (int c = 0; c < n; ++c) {
        if (find(c) != c)
            sys.subs[c] = sub_expr{sys.unknown_of_label[find(c)], 1, 0, sub_expr::forced_by::bigon, -1};
    }

    // arc relations: u_right = u_left + sigma, with bigon zeros folded in
    for (int a = 0; a < d.num_arcs(); ++a) {
        int ul = edge_label_id(d, a, 0), ur = edge_label_id(d, a, 1);
        long sigma = arc_relation_sign(d, a);
        bool zl = zero_forced[ul] >= 0, zr = zero_forced[ur] >= 0;
        if (zl && zr)
            throw error(errc::not_hyperbolic_candidate, where,
                        "two bigons share arc " + std::to_string(a));
        if (zl) {
            sys.subs[ul] = sub_expr{-1, 0, 0, sub_expr::forced_by::bigon, zero_forced[ul]};
            sys.subs[ur] = sub_expr{-1, 0, sigma, sub_expr::forced_by::arc_rel, a};
        } else if (zr) {
            sys.subs[ur] = sub_expr{-1, 0, 0, sub_expr::forced_by::bigon, zero_forced[ur]};
            sys.subs[ul] = sub_expr{-1, 0, -sigma, sub_expr::forced_by::arc_rel, a};
        } else {
            sys.unknown_of_label[ul] = static_cast<int>(sys.label_of_unknown.size());
            sys.label_of_unknown.push_back(ul);
            sys.subs[ur] = sub_expr{sys.unknown_of_label[ul], 1, sigma, sub_expr::forced_by::arc_rel, a};
        }
    }

    auto mapper = [&](int lab) -> int_poly {
        if (sys.unknown_of_label[lab] >= 0) return int_poly::variable(sys.unknown_of_label[lab]);
        const sub_expr& s = *sys.subs[lab];
        if (s.unknown < 0) return int_poly::constant(s.cnst);
        return int_poly::affine(s.unknown, s.coeff, s.cnst);
    };
    for (const region_rec& r : d.regions) {
        auto rel = region_relation(d, r, 0, mapper);
        if (r.sides() == 2) {
            for (const int_poly& p : rel)
                if (!p.is_zero())
                    throw error(errc::degenerate_system, where,
                                "bigon reduction left a nonzero relation in region " +
                                    std::to_string(r.id));
            continue;
        }
        for (int comp = 0; comp < 3; ++comp)
            if (!rel[comp].is_zero())
                sys.equations.push_back({rel[comp], equation::source::region, r.id, comp});
    }
    return sys;
}

} // namespace cuspfield
