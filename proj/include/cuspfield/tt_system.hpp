#pragma once

#include "cuspfield/diagram.hpp"
#include "cuspfield/poly.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace cuspfield {

/// Variable of the label system. A diagram with n crossings carries one
/// crossing label per crossing (the intercusp parameter of the crossing arc)
/// and one edge label per (arc, side) pair (the translation parameter on the
/// cusp torus, measured along the arc's orientation) - 5n labels in total.
struct label_var {
    enum class kind_t { crossing, edge };
    kind_t kind;
    int crossing = -1; // for crossing labels
    int arc = -1;      // for edge labels
    int side = -1;     // 0: the region traversing the arc forward, 1: backward
    std::string name() const;
};

/// Affine expression for an eliminated label: coeff * x[unknown] + cnst
/// (unknown < 0 means the label is the constant cnst).
struct sub_expr {
    int unknown = -1;
    long coeff = 0;
    long cnst = 0;
    enum class forced_by { bigon, arc_rel };
    forced_by why = forced_by::bigon;
    int forcing_id = -1; // region id or arc id
};

struct equation {
    int_poly poly; // variables are unknown indices
    enum class source { region, arc };
    source src = source::region;
    int id = -1;   // region or arc id
    int comp = 0;  // 0..2 for the three scalar region conditions
};

/// Polynomial system in the crossing/edge labels of a diagram. Either the
/// full 5n-variable system (3(n+2) region equations + 2n arc equations) or the
/// eagerly reduced one, where bigon-forced values and the linear arc
/// relations have been substituted away.
struct poly_system {
    link_diagram diagram;
    std::vector<label_var> labels;       // all 5n labels
    std::vector<int> unknown_of_label;   // -1 when eliminated
    std::vector<int> label_of_unknown;   // dense unknown -> label
    std::vector<std::optional<sub_expr>> subs; // per label, set when eliminated
    std::vector<equation> equations;
    bool reduced = false;

    int num_labels() const { return static_cast<int>(labels.size()); }
    int num_unknowns() const { return static_cast<int>(label_of_unknown.size()); }

    int crossing_label(int crossing) const { return crossing; }
    int edge_label(int arc, int side) const {
        return diagram.num_crossings() + 2 * arc + side;
    }

    /// Extend an assignment of the unknowns to all 5n labels.
    std::vector<big_complex> reconstruct_labels(const std::vector<big_complex>& x,
                                                mpfr_prec_t prec) const;
};

/// Sign of the arc relation: the two side labels of an arc differ by one
/// meridian, u_right - u_left = sigma(a). The sign is fixed by whether the
/// arc leaves its tail crossing as the under-strand; calibrated once against
/// the figure-eight knot and frozen (regression-tested).
int arc_relation_sign(const link_diagram& d, int arc);

/// u_right - u_left - sigma(a), linear with coefficients +-1, over label ids.
/// Requires an alternating diagram.
int_poly arc_relation(const link_diagram& d, int arc);

/// The three scalar conditions forcing the region cycle product to be scalar
/// in PGL(2,C): entries (0,1) and (1,0), and the difference of the diagonal.
/// Variables are mapped through `var_poly` (defaults to the label ids
/// themselves). `start` rotates the corner the product begins at.
std::array<int_poly, 3> region_relation(
    const link_diagram& d, const region_rec& r, int start = 0,
    const std::function<int_poly(int)>& var_poly = {});

/// The translation parameter entering a region product at one boundary step,
/// as (label id, sign): +u(a, left) when the region traverses the arc
/// forward, -u(a, right) otherwise.
std::pair<int, int> face_translation(const link_diagram& d, const face_edge& e);

poly_system build_system(const link_diagram& d, bool eager_reduction = true);

} // namespace cuspfield
