#pragma once

#include "cuspfield/tt_system.hpp"

#include <cstdint>
#include <vector>

namespace cuspfield {

/// A converged assignment of the system unknowns. residual_norm is the max
/// absolute value over all equations, recomputed from scratch after the last
/// accepted step.
struct solution {
    std::vector<big_complex> x;
    big_float residual_norm;
    mpfr_prec_t precision_bits = 0;
    uint64_t seed = 0;
    int start_index = -1;
    // per refinement stage: working precision and final residual
    std::vector<std::pair<mpfr_prec_t, big_float>> refine_log;
};

/// Wrap a bare polynomial list as a system (testing and calibration aid).
poly_system synthetic_system(std::vector<int_poly> polys, int num_vars);

/// Exact evaluation of every equation at the assignment, at working
/// precision. Throws PrecisionUnderflow below 32 bits.
std::vector<big_complex> eval_system(const poly_system& s, const std::vector<big_complex>& x,
                                     mpfr_prec_t bits);

big_float residual_norm(const std::vector<big_complex>& residuals, mpfr_prec_t bits);

/// One damped Gauss-Newton step on the stacked overdetermined system:
/// x' = x - t (J^H J)^{-1} J^H r with t halved until the residual decreases
/// (at most 20 halvings). Throws SingularJacobian or NoDecrease.
std::vector<big_complex> newton_step(const poly_system& s, const std::vector<big_complex>& x,
                                     mpfr_prec_t bits);

/// Deterministic multistart search: `attempts` starts drawn from `seed` with
/// component moduli in [0.05, 1.5] and uniform angles, each driven by damped
/// Gauss-Newton. Converged solutions (residual < 2^-bits/2) are deduplicated
/// at distance 2^-bits/4 and sorted by residual, then lexicographically.
/// Starts may run concurrently (capped by CUSPFIELD_THREADS); results are
/// identical to a serial run.
std::vector<solution> multistart_solve(const poly_system& s, uint64_t seed, int attempts,
                                       mpfr_prec_t bits);

/// First candidate, in the deterministic order, that looks like the discrete
/// faithful solution: all |w| <= 1 (plus slack 2^-bits/4, so the figure-eight
/// tangency case passes), every non-bigon edge label nonzero, and every shape
/// parameter off the real line (|Im| > 1e-10).
solution select_geometric(const poly_system& s, const std::vector<solution>& cands);

/// Newton refinement doubling the working precision each stage until
/// target_bits; the result satisfies residual < 2^-target_bits/2.
solution refine(const poly_system& s, const solution& sol, mpfr_prec_t target_bits);

/// Edge labels lying on a bigon side (forced to zero by the cycle relation).
std::vector<char> bigon_side_labels(const poly_system& s);

} // namespace cuspfield
