#include "cuspfield/lll.hpp"
#include "cuspfield/errors.hpp"

namespace cuspfield {

namespace {

mpq_class dot_zq(const int_vec& a, const std::vector<mpq_class>& b) {
    mpq_class s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += mpq_class(a[i]) * b[i];
    return s;
}

mpz_class dot_zz(const int_vec& a, const int_vec& b) {
    mpz_class s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

mpz_class round_q(const mpq_class& q) {
    // nearest integer: floor(x + 1/2)
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class twice = 2 * num + den;
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), twice.get_mpz_t(), mpz_class(2 * den).get_mpz_t());
    return r;
}

} // namespace

lll_result lll_reduce(const int_mat& rows) {
    const std::string where = "fieldrec.lll_reduce";
    int n = static_cast<int>(rows.size());
    if (n == 0) return {{}, {}};
    size_t dim = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != dim) throw error(errc::dependent_rows, where, "ragged input rows");

    int_mat b = rows;
    int_mat u(n, int_vec(n, 0));
    for (int i = 0; i < n; ++i) u[i][i] = 1;

    // Gram-Schmidt data: mu[i][j] for j < i, B[i] = |b*_i|^2, star rows exact
    std::vector<std::vector<mpq_class>> mu(n, std::vector<mpq_class>(n, 0));
    std::vector<mpq_class> B(n, 0);
    std::vector<std::vector<mpq_class>> star(n, std::vector<mpq_class>(dim, 0));

    auto gram_schmidt_row = [&](int k) {
        for (size_t c = 0; c < dim; ++c) star[k][c] = mpq_class(b[k][c]);
        for (int j = 0; j < k; ++j) {
            mu[k][j] = B[j] == 0 ? mpq_class(0) : dot_zq(b[k], star[j]) / B[j];
            for (size_t c = 0; c < dim; ++c) star[k][c] -= mu[k][j] * star[j][c];
        }
        B[k] = 0;
        for (size_t c = 0; c < dim; ++c) B[k] += star[k][c] * star[k][c];
        if (B[k] == 0)
            throw error(errc::dependent_rows, where, "input rows are linearly dependent");
    };

    auto reduce_pair = [&](int k, int l) {
        if (2 * abs(mu[k][l]) <= 1) return;
        mpz_class q = round_q(mu[k][l]);
        for (size_t c = 0; c < dim; ++c) b[k][c] -= q * b[l][c];
        for (int c = 0; c < n; ++c) u[k][c] -= q * u[l][c];
        for (int j = 0; j < l; ++j) mu[k][j] -= mpq_class(q) * mu[l][j];
        mu[k][l] -= q;
    };

    int kmax = 0;
    gram_schmidt_row(0);
    int k = 1;
    while (k < n) {
        if (k > kmax) {
            kmax = k;
            gram_schmidt_row(k);
        }
        reduce_pair(k, k - 1);
        mpq_class lhs = B[k];
        mpq_class rhs = (mpq_class(3, 4) - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1];
        if (lhs < rhs) {
            std::swap(b[k], b[k - 1]);
            std::swap(u[k], u[k - 1]);
            // recompute the affected Gram-Schmidt rows
            for (int i = k - 1; i <= kmax; ++i) gram_schmidt_row(i);
            k = std::max(1, k - 1);
        } else {
            for (int l = k - 2; l >= 0; --l) reduce_pair(k, l);
            ++k;
        }
    }
    return {std::move(b), std::move(u)};
}

} // namespace cuspfield
