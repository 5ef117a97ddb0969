#include <doctest.h>

#include "cuspfield/errors.hpp"
#include "cuspfield/numsolve.hpp"

#include <cmath>

using namespace cuspfield;

namespace {
const mpfr_prec_t P = 128;
big_float tol(int log2e) { return big_float::pow2(log2e, P); }

// x^2 - 2 as a one-variable system
poly_system quadratic_system(long c0) {
    int_poly p = int_poly::variable(0) * int_poly::variable(0) + int_poly::constant(c0);
    return synthetic_system({p}, 1);
}
} // namespace

TEST_CASE("eval_system evaluates polynomials exactly at working precision") {
    poly_system s = quadratic_system(-2);
    std::vector<big_complex> x{big_complex(3L, P)};
    auto r = eval_system(s, x, P);
    REQUIRE(r.size() == 1);
    CHECK(abs(r[0] - big_complex(7L, P)).is_zero());
    CHECK_THROWS_AS(eval_system(s, x, 16), error);
}

TEST_CASE("bigon relations vanish on the forced locus") {
    link_diagram d = from_braid("aB", 2);
    const region_rec* bigon = nullptr;
    for (const auto& r : d.regions)
        if (r.sides() == 2) bigon = &r;
    REQUIRE(bigon != nullptr);
    auto rel = region_relation(d, *bigon);
    // assignment over all 5n labels: both crossing labels z, translations 0
    std::vector<big_complex> labels(5 * d.num_crossings(), big_complex(0L, P));
    labels[bigon->edges[0].corner] = big_complex(big_float(0.3, P), big_float(-1.7, P));
    labels[bigon->edges[1].corner] = labels[bigon->edges[0].corner];
    for (const auto& p : rel) CHECK(abs(p.eval(labels, P)).is_zero());
}

TEST_CASE("newton_step reproduces the classical iterates on x^2 - 2") {
    poly_system s = quadratic_system(-2);
    std::vector<big_complex> x{big_complex(1L, P)};
    x = newton_step(s, x, P);
    CHECK(abs(x[0] - big_complex(big_float(1.5, P), big_float(0L, P))) < tol(-100));
    x = newton_step(s, x, P);
    big_complex expect(big_float(mpq_class(17, 12), P), big_float(0L, P));
    CHECK(abs(x[0] - expect) < tol(-100));
}

TEST_CASE("newton_step detects a singular Jacobian") {
    poly_system s = quadratic_system(1); // x^2 + 1 from 0: derivative vanishes
    std::vector<big_complex> x{big_complex(0L, P)};
    try {
        newton_step(s, x, P);
        FAIL("expected throw");
    } catch (const error& e) {
        CHECK(e.code() == errc::singular_jacobian);
    }
}

TEST_CASE("error norm squares per step near a regular root") {
    poly_system s = quadratic_system(-2);
    big_complex root(sqrt(big_float(2L, P)), big_float(0L, P));
    std::vector<big_complex> x{big_complex(1L, P)};
    std::vector<double> log2_err;
    for (int it = 0; it < 7; ++it) {
        x = newton_step(s, x, P);
        big_float e = abs(x[0] - root);
        if (e.is_zero()) break;
        log2_err.push_back(std::log2(std::abs(e.to_double()) + 1e-300));
    }
    // compare consecutive error exponents over the last measurable steps
    int checked = 0;
    for (size_t i = 1; i < log2_err.size() && checked < 3; ++i) {
        if (log2_err[i - 1] > -50 && log2_err[i] > -120) {
            CHECK(log2_err[i] < 1.8 * log2_err[i - 1]);
            ++checked;
        }
    }
    CHECK(checked >= 2);
}

TEST_CASE("multistart finds both square roots deterministically") {
    poly_system s = quadratic_system(1); // roots +-i
    auto sols = multistart_solve(s, 42, 40, P);
    REQUIRE(sols.size() == 2);
    for (const auto& sol : sols) {
        CHECK(abs(abs(sol.x[0]) - big_float(1L, P)) < tol(-60));
        CHECK(abs(sol.x[0].re) < tol(-60));
        // conjugation closure: real coefficients
        std::vector<big_complex> conj_x{sol.x[0].conj()};
        CHECK(residual_norm(eval_system(s, conj_x, P), P) < tol(-60));
    }
    // bit-identical rerun
    auto again = multistart_solve(s, 42, 40, P);
    REQUIRE(again.size() == sols.size());
    for (size_t i = 0; i < sols.size(); ++i) {
        CHECK(sols[i].x[0].re.to_string() == again[i].x[0].re.to_string());
        CHECK(sols[i].x[0].im.to_string() == again[i].x[0].im.to_string());
        CHECK(sols[i].start_index == again[i].start_index);
    }
    CHECK_THROWS_AS(multistart_solve(s, 42, 0, P), error);
}

TEST_CASE("select_geometric filters by crossing label modulus") {
    poly_system s = quadratic_system(1);
    solution big_w;
    big_w.x = {big_complex(big_float(1.7, P), big_float(0L, P))};
    big_w.residual_norm = big_float(0L, P);
    big_w.precision_bits = P;
    try {
        select_geometric(s, {big_w});
        FAIL("expected throw");
    } catch (const error& e) {
        CHECK(e.code() == errc::no_geometric_solution);
    }
    CHECK_THROWS_AS(select_geometric(s, {}), error);

    solution good;
    good.x = {big_complex(big_float(0.25, P), big_float(0.5, P))};
    good.residual_norm = big_float(0L, P);
    good.precision_bits = P;
    solution picked = select_geometric(s, {big_w, good});
    CHECK(picked.x[0].re.to_double() == doctest::Approx(0.25));
}

TEST_CASE("refine doubles precision stages down to the target residual") {
    poly_system s = quadratic_system(-2);
    auto sols = multistart_solve(s, 7, 20, 64);
    REQUIRE(!sols.empty());
    solution r = refine(s, sols[0], 512);
    CHECK(r.precision_bits == 512);
    CHECK(r.residual_norm < big_float::pow2(-256, 512));
    CHECK(!r.refine_log.empty());
    // each stage lands under its own convergence threshold
    for (const auto& [bits, res] : r.refine_log)
        CHECK(res < big_float::pow2(-static_cast<long>(bits) / 2, bits));
}

TEST_CASE("refine on an exact root keeps residual zero") {
    int_poly p = int_poly::variable(0) * int_poly::variable(0) - int_poly::variable(0);
    poly_system s = synthetic_system({p}, 1);
    solution one;
    one.x = {big_complex(1L, 64)};
    one.residual_norm = big_float(0L, 64);
    one.precision_bits = 64;
    solution r = refine(s, one, 256);
    CHECK(r.residual_norm.is_zero());
}

TEST_CASE("refine rejects a non-solution") {
    int_poly p = int_poly::variable(0) * int_poly::variable(0) - int_poly::variable(0);
    poly_system s = synthetic_system({p}, 1);
    solution bad;
    // x = (1+sqrt(3))/2 gives x^2 - x = 1/2
    bad.x = {big_complex((big_float(1L, 64) + sqrt(big_float(3L, 64))) / big_float(2L, 64),
                         big_float(0L, 64))};
    bad.residual_norm = big_float(0.5, 64);
    bad.precision_bits = 64;
    try {
        refine(s, bad, 256);
        FAIL("expected throw");
    } catch (const error& e) {
        CHECK(e.code() == errc::refinement_stalled);
    }
}
