#include "cuspfield/numsolve.hpp"
#include "cuspfield/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <optional>
#include <thread>

namespace cuspfield {

namespace {

uint64_t splitmix64(uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double unit_double(uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

struct evaluator {
    const poly_system* sys;
    // nonzero Jacobian entries per equation: (unknown, derivative)
    std::vector<std::vector<std::pair<int, int_poly>>> jac;

    explicit evaluator(const poly_system& s) : sys(&s) {
        jac.resize(s.equations.size());
        for (size_t e = 0; e < s.equations.size(); ++e)
            for (int v : s.equations[e].poly.variables())
                jac[e].push_back({v, s.equations[e].poly.derivative(v)});
    }
};

std::vector<big_complex> residuals_at(const poly_system& s, const std::vector<big_complex>& x,
                                      mpfr_prec_t bits) {
    std::vector<big_complex> r;
    r.reserve(s.equations.size());
    for (const auto& e : s.equations) r.push_back(e.poly.eval(x, bits));
    return r;
}

// Solve A d = b for Hermitian positive-definite-ish A by LU with partial
// pivoting; pivots below the scale-relative floor flag a rank deficiency.
std::vector<big_complex> lu_solve(std::vector<std::vector<big_complex>> A,
                                  std::vector<big_complex> b, mpfr_prec_t bits,
                                  const std::string& where) {
    int k = static_cast<int>(A.size());
    big_float scale(0L, bits);
    for (const auto& row : A)
        for (const auto& v : row) scale = max(scale, abs(v));
    if (scale.is_zero()) throw error(errc::singular_jacobian, where, "zero Jacobian");
    big_float floor = scale * big_float::pow2(-static_cast<long>(bits) + 8, bits);
    for (int col = 0; col < k; ++col) {
        int piv = col;
        big_float best = abs(A[col][col]);
        for (int rr = col + 1; rr < k; ++rr) {
            big_float a = abs(A[rr][col]);
            if (a > best) {
                best = a;
                piv = rr;
            }
        }
        if (!(best > floor))
            throw error(errc::singular_jacobian, where, "rank-deficient normal equations");
        std::swap(A[col], A[piv]);
        std::swap(b[col], b[piv]);
        for (int rr = col + 1; rr < k; ++rr) {
            big_complex f = A[rr][col] / A[col][col];
            for (int cc = col; cc < k; ++cc) A[rr][cc] = A[rr][cc] - f * A[col][cc];
            b[rr] = b[rr] - f * b[col];
        }
    }
    std::vector<big_complex> d(k, big_complex(0L, bits));
    for (int rr = k - 1; rr >= 0; --rr) {
        big_complex acc = b[rr];
        for (int cc = rr + 1; cc < k; ++cc) acc = acc - A[rr][cc] * d[cc];
        d[rr] = acc / A[rr][rr];
    }
    return d;
}

std::vector<big_complex> gauss_newton_step(const evaluator& ev, const std::vector<big_complex>& x,
                                           const std::vector<big_complex>& r, const big_float& rn,
                                           mpfr_prec_t bits) {
    const std::string where = "numsolve.newton_step";
    const poly_system& s = *ev.sys;
    int k = s.num_unknowns();
    int m = static_cast<int>(s.equations.size());

    // sparse rows of J
    std::vector<std::vector<std::pair<int, big_complex>>> J(m);
    for (int e = 0; e < m; ++e)
        for (const auto& [v, dp] : ev.jac[e]) J[e].push_back({v, dp.eval(x, bits)});

    std::vector<std::vector<big_complex>> A(k, std::vector<big_complex>(k, big_complex(0L, bits)));
    std::vector<big_complex> g(k, big_complex(0L, bits));
    for (int e = 0; e < m; ++e) {
        for (const auto& [i, ji] : J[e]) {
            big_complex cji = ji.conj();
            for (const auto& [j, jj] : J[e]) A[i][j] = A[i][j] + cji * jj;
            g[i] = g[i] + cji * r[e];
        }
    }
    std::vector<big_complex> delta = lu_solve(std::move(A), std::move(g), bits, where);

    big_float t(1L, bits);
    for (int h = 0; h <= 20; ++h) {
        std::vector<big_complex> xt;
        xt.reserve(k);
        for (int i = 0; i < k; ++i)
            xt.push_back({x[i].re - t * delta[i].re, x[i].im - t * delta[i].im});
        big_float rt = residual_norm(residuals_at(s, xt, bits), bits);
        if (rt < rn) return xt;
        t = t * big_float(0.5, bits);
    }
    throw error(errc::no_decrease, where, "no residual decrease after 20 step halvings");
}

struct newton_outcome {
    std::vector<big_complex> x;
    big_float residual;
    bool converged = false;
};

newton_outcome run_newton(const evaluator& ev, std::vector<big_complex> x, mpfr_prec_t bits,
                          int max_iter) {
    const poly_system& s = *ev.sys;
    big_float threshold = big_float::pow2(-static_cast<long>(bits) / 2, bits);
    big_float divergence = big_float::pow2(40, bits);
    big_float rn = residual_norm(residuals_at(s, x, bits), bits);
    for (int it = 0; it < max_iter; ++it) {
        if (rn < threshold) return {std::move(x), rn, true};
        if (rn > divergence || rn.is_nan()) break;
        try {
            x = gauss_newton_step(ev, x, residuals_at(s, x, bits), rn, bits);
        } catch (const error&) {
            break;
        }
        rn = residual_norm(residuals_at(s, x, bits), bits);
    }
    if (rn < threshold) return {std::move(x), rn, true};
    return {std::move(x), rn, false};
}

int thread_budget() {
    unsigned hw = std::thread::hardware_concurrency();
    int n = hw ? static_cast<int>(hw) : 1;
    if (const char* env = std::getenv("CUSPFIELD_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) n = std::min(n, cap);
    }
    return n;
}

} // namespace

poly_system synthetic_system(std::vector<int_poly> polys, int num_vars) {
    poly_system s;
    for (int v = 0; v < num_vars; ++v) {
        s.labels.push_back({label_var::kind_t::crossing, v, -1, -1});
        s.unknown_of_label.push_back(v);
        s.label_of_unknown.push_back(v);
        s.subs.emplace_back();
    }
    for (size_t i = 0; i < polys.size(); ++i)
        s.equations.push_back({std::move(polys[i]), equation::source::region, static_cast<int>(i), 0});
    return s;
}

std::vector<big_complex> eval_system(const poly_system& s, const std::vector<big_complex>& x,
                                     mpfr_prec_t bits) {
    if (bits < 32)
        throw error(errc::precision_underflow, "numsolve.eval_system",
                    "need at least 32 bits of precision");
    return residuals_at(s, x, bits);
}

big_float residual_norm(const std::vector<big_complex>& residuals, mpfr_prec_t bits) {
    big_float rn(0L, bits);
    for (const auto& r : residuals) rn = max(rn, abs(r));
    return rn;
}

std::vector<big_complex> newton_step(const poly_system& s, const std::vector<big_complex>& x,
                                     mpfr_prec_t bits) {
    evaluator ev(s);
    std::vector<big_complex> r = residuals_at(s, x, bits);
    return gauss_newton_step(ev, x, r, residual_norm(r, bits), bits);
}

std::vector<solution> multistart_solve(const poly_system& s, uint64_t seed, int attempts,
                                       mpfr_prec_t bits) {
    const std::string where = "numsolve.multistart_solve";
    if (attempts < 1) throw error(errc::malformed_input, where, "attempts must be >= 1");
    if (bits < 32) throw error(errc::precision_underflow, where, "need at least 32 bits");
    evaluator ev(s);
    int k = s.num_unknowns();

    std::vector<std::optional<solution>> slots(attempts);
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= attempts) return;
            uint64_t state = seed + (static_cast<uint64_t>(i) + 1) * 0x9E3779B97F4A7C15ULL;
            std::vector<big_complex> x0;
            x0.reserve(k);
            for (int v = 0; v < k; ++v) {
                double mod = 0.05 + 1.45 * unit_double(splitmix64(state));
                double angle01 = unit_double(splitmix64(state));
                big_float theta =
                    big_float(angle01, bits) * big_float(2L, bits) * big_float::pi(bits);
                big_float m(mod, bits);
                x0.push_back({m * cos(theta), m * sin(theta)});
            }
            newton_outcome out = run_newton(ev, std::move(x0), bits, 60);
            if (out.converged) {
                solution sol;
                sol.x = std::move(out.x);
                sol.residual_norm = residual_norm(residuals_at(s, sol.x, bits), bits);
                sol.precision_bits = bits;
                sol.seed = seed;
                sol.start_index = i;
                slots[i] = std::move(sol);
            }
        }
    };
    int nthreads = std::min(thread_budget(), attempts);
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::vector<solution> found;
    for (auto& slot : slots)
        if (slot) found.push_back(std::move(*slot));
    if (found.empty()) throw error(errc::no_solution_found, where, "no start converged");

    std::stable_sort(found.begin(), found.end(), [](const solution& a, const solution& b) {
        int c = cmp(a.residual_norm, b.residual_norm);
        if (c != 0) return c < 0;
        for (size_t i = 0; i < a.x.size(); ++i) {
            int l = cmp_lex(a.x[i], b.x[i]);
            if (l != 0) return l < 0;
        }
        return false;
    });

    big_float tol = big_float::pow2(-static_cast<long>(bits) / 4, bits);
    std::vector<solution> unique;
    for (auto& cand : found) {
        bool dup = false;
        for (const auto& kept : unique) {
            big_float dist(0L, bits);
            for (int i = 0; i < k; ++i) dist = max(dist, abs(cand.x[i] - kept.x[i]));
            if (dist < tol) {
                dup = true;
                break;
            }
        }
        if (!dup) unique.push_back(std::move(cand));
    }
    return unique;
}

std::vector<char> bigon_side_labels(const poly_system& s) {
    std::vector<char> mark(s.num_labels(), 0);
    for (const auto& r : s.diagram.regions) {
        if (r.sides() != 2) continue;
        for (const auto& e : r.edges) mark[s.edge_label(e.arc, e.forward ? 0 : 1)] = 1;
    }
    return mark;
}

solution select_geometric(const poly_system& s, const std::vector<solution>& cands) {
    const std::string where = "numsolve.select_geometric";
    if (cands.empty()) throw error(errc::no_geometric_solution, where, "empty candidate list");
    std::vector<char> bigon_side = bigon_side_labels(s);

    for (const solution& cand : cands) {
        mpfr_prec_t bits = cand.precision_bits;
        big_float slack = big_float::pow2(-static_cast<long>(bits) / 4, bits);
        big_float one_plus(1L, bits);
        one_plus = one_plus + slack;
        big_float im_floor(1e-10, bits);

        std::vector<big_complex> labels = s.reconstruct_labels(cand.x, bits);
        bool ok = true;
        for (int lab = 0; lab < s.num_labels() && ok; ++lab) {
            const label_var& lv = s.labels[lab];
            big_float a = abs(labels[lab]);
            if (lv.kind == label_var::kind_t::crossing) {
                if (a > one_plus || a < slack) ok = false;
            } else if (!bigon_side[lab]) {
                if (a < slack) ok = false;
            }
        }
        if (!ok) continue;

        // shape parameters at all nondegenerate corners: a triangle corner
        // has P_{i+2} = P_{i-1}, its simplex collapses and the cycle relation
        // forces the value 1, so only regions with 4 or more sides are tested
        for (const auto& r : s.diagram.regions) {
            if (!ok) break;
            if (r.sides() < 4) continue;
            int kk = r.sides();
            for (int i = 0; i < kk && ok; ++i) {
                auto [lab_prev, sgn_prev] = face_translation(s.diagram, r.edges[i]);
                auto [lab_next, sgn_next] = face_translation(s.diagram, r.edges[(i + 1) % kk]);
                big_complex v1 = labels[lab_prev], v2 = labels[lab_next];
                if (sgn_prev < 0) v1 = -v1;
                if (sgn_next < 0) v2 = -v2;
                big_complex w = labels[r.edges[i].corner];
                big_complex zeta = -w / (v1 * v2);
                if (!(abs(zeta.im) > im_floor)) ok = false;
            }
        }
        if (ok) return cand;
    }
    throw error(errc::no_geometric_solution, where, "no candidate passed the geometric filter");
}

solution refine(const poly_system& s, const solution& sol, mpfr_prec_t target_bits) {
    const std::string where = "numsolve.refine";
    mpfr_prec_t bits = sol.precision_bits;
    big_float loose = big_float::pow2(-static_cast<long>(bits) / 4, bits);
    if (!(residual_norm(residuals_at(s, sol.x, bits), bits) < loose))
        throw error(errc::refinement_stalled, where, "input is not a converged solution");

    evaluator ev(s);
    solution cur = sol;
    while (cur.precision_bits < target_bits) {
        mpfr_prec_t next = std::min<mpfr_prec_t>(cur.precision_bits * 2, target_bits);
        std::vector<big_complex> x;
        x.reserve(cur.x.size());
        for (const auto& v : cur.x) x.push_back(v.round_to(next));
        newton_outcome out = run_newton(ev, std::move(x), next, 30);
        if (!out.converged)
            throw error(errc::refinement_stalled, where,
                        "no convergence at " + std::to_string(next) + " bits");
        cur.x = std::move(out.x);
        cur.precision_bits = next;
        cur.residual_norm = residual_norm(residuals_at(s, cur.x, next), next);
        cur.refine_log.push_back({next, cur.residual_norm});
    }
    if (cur.precision_bits == sol.precision_bits)
        cur.residual_norm = residual_norm(residuals_at(s, cur.x, bits), bits);
    return cur;
}

} // namespace cuspfield
