#include <doctest.h>

#include "cuspfield/errors.hpp"
#include "cuspfield/fieldrec.hpp"

#include <random>

using namespace cuspfield;

namespace {
const mpfr_prec_t P = 128;

big_complex from_real(const big_float& r) { return {r, big_float(0L, r.prec())}; }

mpz_class det_int(int_mat m) {
    // fraction-free Gaussian elimination (Bareiss)
    int n = static_cast<int>(m.size());
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (m[r][k] != 0) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

void check_reduced_invariants(const int_mat& in, const lll_result& out) {
    int n = static_cast<int>(out.basis.size());
    size_t dim = in[0].size();
    // basis = transform * input, with a unimodular transform
    for (int i = 0; i < n; ++i)
        for (size_t c = 0; c < dim; ++c) {
            mpz_class acc = 0;
            for (int j = 0; j < n; ++j) acc += out.transform[i][j] * in[j][c];
            CHECK(acc == out.basis[i][c]);
        }
    CHECK(abs(det_int(out.transform)) == 1);

    // exact Gram-Schmidt: size reduction and the Lovasz condition
    std::vector<std::vector<mpq_class>> star(n, std::vector<mpq_class>(dim));
    std::vector<std::vector<mpq_class>> mu(n, std::vector<mpq_class>(n, 0));
    std::vector<mpq_class> B(n);
    for (int i = 0; i < n; ++i) {
        for (size_t c = 0; c < dim; ++c) star[i][c] = mpq_class(out.basis[i][c]);
        for (int j = 0; j < i; ++j) {
            mpq_class num = 0;
            for (size_t c = 0; c < dim; ++c) num += mpq_class(out.basis[i][c]) * star[j][c];
            mu[i][j] = num / B[j];
            for (size_t c = 0; c < dim; ++c) star[i][c] -= mu[i][j] * star[j][c];
        }
        B[i] = 0;
        for (size_t c = 0; c < dim; ++c) B[i] += star[i][c] * star[i][c];
        REQUIRE(B[i] != 0);
        for (int j = 0; j < i; ++j) CHECK(2 * abs(mu[i][j]) <= 1);
        if (i > 0) CHECK(B[i] >= (mpq_class(3, 4) - mu[i][i - 1] * mu[i][i - 1]) * B[i - 1]);
    }
}
} // namespace

TEST_CASE("lll keeps an identity basis") {
    int_mat id{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    lll_result r = lll_reduce(id);
    CHECK(r.basis == id);
}

TEST_CASE("lll reduces (4,1),(3,1) to unit vectors") {
    int_mat in{{4, 1}, {3, 1}};
    lll_result r = lll_reduce(in);
    check_reduced_invariants(in, r);
    for (const auto& row : r.basis) {
        mpz_class norm2 = row[0] * row[0] + row[1] * row[1];
        CHECK(norm2 == 1); // the lattice is Z^2
    }
}

TEST_CASE("lll first-vector bound and invariants on random lattices") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        int_mat in(n, int_vec(n));
        for (auto& row : in)
            for (auto& v : row) v = static_cast<long>(rng() % 2001) - 1000;
        if (det_int(in) == 0) continue;
        lll_result r = lll_reduce(in);
        check_reduced_invariants(in, r);
        // |b1|^(2n) <= 2^(n(n-1)) det(L)^2
        mpz_class b1 = 0;
        for (const auto& v : r.basis[0]) b1 += v * v;
        mpz_class lhs = 1;
        for (int i = 0; i < n; ++i) lhs *= b1;
        mpz_class det = det_int(in);
        mpz_class rhs = det * det;
        mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), n * (n - 1));
        CHECK(lhs <= rhs);
    }
}

TEST_CASE("lll rejects dependent rows") {
    CHECK_THROWS_AS(lll_reduce(int_mat{{1, 2}, {2, 4}}), error);
}

TEST_CASE("minimal polynomials of classic algebraic numbers") {
    big_complex i(0.0, 1.0, P);
    min_poly pi2 = minimal_polynomial(i, 8, 64, P);
    CHECK(pi2.coeffs == std::vector<mpz_class>{1, 0, 1}); // x^2 + 1

    big_float five(5L, P);
    big_complex golden = from_real((big_float(1L, P) + sqrt(five)) / big_float(2L, P));
    min_poly pg = minimal_polynomial(golden, 8, 64, P);
    CHECK(pg.coeffs == std::vector<mpz_class>{-1, -1, 1}); // x^2 - x - 1

    big_complex sqrt_m3 = sqrt(big_complex(-3L, P));
    min_poly p3 = minimal_polynomial(sqrt_m3, 8, 64, P);
    CHECK(p3.coeffs == std::vector<mpz_class>{3, 0, 1}); // x^2 + 3

    // residual is certified by direct evaluation
    CHECK(p3.residual < big_float::pow2(-32, P));
}

TEST_CASE("braid family field generators for n = 4, 5, 6") {
    // t_n = sqrt(-3 - 4 cos(pi/n) + 4 cos^2(pi/n)); hand-computed minimal
    // polynomials: n=4: x^4+2x^2-7, n=5: x^4+5x^2+5, n=6: x^4-12
    auto tn = [&](long n) {
        big_float c = cos(big_float::pi(P) / big_float(n, P));
        big_float rad = big_float(-3L, P) - big_float(4L, P) * c + big_float(4L, P) * c * c;
        return sqrt(big_complex(rad, big_float(0L, P)));
    };
    CHECK(minimal_polynomial(tn(4), 8, 64, P).coeffs == std::vector<mpz_class>{-7, 0, 2, 0, 1});
    CHECK(minimal_polynomial(tn(5), 8, 64, P).coeffs == std::vector<mpz_class>{5, 0, 5, 0, 1});
    CHECK(minimal_polynomial(tn(6), 8, 64, P).coeffs == std::vector<mpz_class>{-12, 0, 0, 0, 1});
    // n=2 and n=3 give the forced values sqrt(-3) and 2i
    CHECK(minimal_polynomial(tn(2), 8, 64, P).coeffs == std::vector<mpz_class>{3, 0, 1});
    CHECK(minimal_polynomial(tn(3), 8, 64, P).coeffs == std::vector<mpz_class>{4, 0, 1});
}

TEST_CASE("transcendental values are rejected") {
    big_complex pi_val(big_float::pi(256), big_float(0L, 256));
    // with a tight height bound no spurious relation fits
    CHECK_THROWS_AS(minimal_polynomial(pi_val.round_to(P), 4, 4, P), error);
    CHECK_THROWS_AS(minimal_polynomial(pi_val, 4, 24, 32), error); // precision floor
    // a spuriously good low-precision relation cannot reproduce itself when
    // the working precision doubles
    bool stable = true;
    try {
        min_poly lo = minimal_polynomial(pi_val.round_to(P), 4, 64, P);
        min_poly hi = minimal_polynomial(pi_val, 4, 64, 256);
        stable = (lo.coeffs == hi.coeffs);
    } catch (const error&) {
        stable = false;
    }
    CHECK_FALSE(stable);
}

TEST_CASE("precision-doubling stability and conjugation consistency") {
    big_complex z = sqrt(big_complex(-3L, 256)) + big_complex(2L, 256);
    min_poly lo = minimal_polynomial(z.round_to(P), 8, 64, P);
    min_poly hi = minimal_polynomial(z, 8, 64, 256);
    CHECK(lo.coeffs == hi.coeffs);
    min_poly conj = minimal_polynomial(z.conj(), 8, 64, 256);
    CHECK(conj.coeffs == hi.coeffs);
}

TEST_CASE("same_field membership") {
    big_complex i(0.0, 1.0, P);
    big_complex two_i(0.0, 2.0, P);
    same_field_result r = same_field(i, two_i, 2, P);
    CHECK(r.same);
    REQUIRE(r.witness.size() == 2);
    CHECK(r.witness[0] == 0);
    CHECK(r.witness[1] == 2);

    big_complex s2 = from_real(sqrt(big_float(2L, P)));
    big_complex s3 = from_real(sqrt(big_float(3L, P)));
    CHECK_FALSE(same_field(s2, s3, 2, P).same);
}

TEST_CASE("describe_field on rational labels gives the degree-1 field") {
    std::vector<big_complex> labels{big_complex(1L, 256), big_complex(-2L, 256),
                                    big_complex(big_float(mpq_class(3, 4), 256),
                                                big_float(0L, 256))};
    field_options opts;
    opts.bits = P;
    field_description fd = describe_field(labels, opts);
    CHECK(fd.poly.degree() == 1);
    CHECK(fd.failures.empty());
    CHECK(fd.members.size() == labels.size());
}

TEST_CASE("describe_field primitive-element fallback") {
    mpfr_prec_t HP = 256;
    std::vector<big_complex> labels{from_real(sqrt(big_float(2L, 2 * HP))),
                                    from_real(sqrt(big_float(3L, 2 * HP)))};
    field_options opts;
    opts.bits = HP;
    opts.max_degree = 4;
    field_description fd = describe_field(labels, opts);
    CHECK(fd.failures.empty());
    CHECK(fd.combo_label >= 0);
    CHECK(fd.poly.degree() == 4);
    CHECK(fd.poly.coeffs == std::vector<mpz_class>{1, 0, -10, 0, 1}); // x^4 - 10x^2 + 1

    // with the sweep capped below the primitive element's degree the failure
    // surfaces instead of being silently dropped
    opts.max_degree = 2;
    try {
        describe_field(labels, opts);
        FAIL("expected throw");
    } catch (const error& e) {
        CHECK(e.code() == errc::field_description_incomplete);
    }
}
