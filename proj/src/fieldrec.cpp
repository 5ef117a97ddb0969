#include "cuspfield/fieldrec.hpp"
#include "cuspfield/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cuspfield {

mpz_class min_poly::height() const {
    mpz_class h = 0;
    for (const auto& c : coeffs) h = std::max(h, mpz_class(abs(c)));
    return h;
}

std::string min_poly::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& c = coeffs[i];
        if (c == 0) continue;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (i == 0 || a != 1) out << a.get_str();
        if (i > 0) out << "x";
        if (i > 1) out << "^" << i;
    }
    if (first) out << "0";
    return out.str();
}

big_complex min_poly::eval(const big_complex& z, mpfr_prec_t bits) const {
    big_complex acc(0L, bits);
    big_complex zz = z.round_to(bits);
    for (int i = degree(); i >= 0; --i) {
        acc = acc * zz;
        acc.re = acc.re + big_float(coeffs[i], bits);
    }
    return acc;
}

namespace {

void normalize_content(std::vector<mpz_class>& coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    mpz_class g = 0;
    for (const auto& c : coeffs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 0) return;
    bool flip = coeffs.back() < 0;
    for (auto& c : coeffs) {
        c /= g;
        if (flip) c = -c;
    }
}

// rows spanning integer relations among the given complex values: row i is
// the i-th unit vector followed by the scaled real and imaginary parts
int_mat relation_lattice(const std::vector<big_complex>& values, mpfr_prec_t bits) {
    big_float scale = big_float::pow2(static_cast<long>(bits) / 2, bits);
    int n = static_cast<int>(values.size());
    int_mat rows(n, int_vec(n + 2, 0));
    for (int i = 0; i < n; ++i) {
        rows[i][i] = 1;
        rows[i][n] = (scale * values[i].re).to_integer();
        rows[i][n + 1] = (scale * values[i].im).to_integer();
    }
    return rows;
}

} // namespace

min_poly minimal_polynomial(const big_complex& z, int max_degree, long height_bits,
                            mpfr_prec_t bits) {
    const std::string where = "fieldrec.minimal_polynomial";
    if (bits < 48)
        throw error(errc::precision_too_low, where,
                    "need at least 48 bits for a degree-1 sweep");
    if (max_degree < 1) throw error(errc::no_relation_found, where, "max_degree must be >= 1");

    big_float accept = big_float::pow2(-static_cast<long>(bits) / 4, bits);
    std::vector<big_complex> powers{big_complex(1L, bits), z.round_to(bits)};
    // a value on the real line leaves one constraint per relation instead of
    // two, so spuriously good approximations are cheaper and the admissible
    // coefficient height shrinks accordingly
    bool on_real_line = abs(z.im) < big_float::pow2(-static_cast<long>(bits) / 2 + 8, bits);

    for (int d = 1; d <= max_degree; ++d) {
        long b = static_cast<long>(bits);
        long pigeonhole = on_real_line ? b / (4 * std::max(1, d)) - 8
                                       : (d == 1 ? b / 4 - 8 : b / (2 * (d - 1)) - 8);
        long h_eff = std::min({height_bits, (b - 16L * d) / 4, pigeonhole});
        if (h_eff < 1) break;
        mpz_class height_cap = mpz_class(1) << h_eff;
        while (static_cast<int>(powers.size()) <= d) powers.push_back(powers.back() * powers[1]);

        std::vector<big_complex> vals(powers.begin(), powers.begin() + d + 1);
        lll_result red = lll_reduce(relation_lattice(vals, bits));
        for (const auto& row : red.basis) {
            std::vector<mpz_class> coeffs(row.begin(), row.begin() + d + 1);
            normalize_content(coeffs);
            if (coeffs.size() < 2) continue;
            min_poly p;
            p.coeffs = coeffs;
            if (p.height() >= height_cap) continue;
            big_float res = abs(p.eval(z, bits));
            if (res < accept) {
                p.certified_at_bits = bits;
                p.residual = res;
                return p;
            }
        }
    }
    throw error(errc::no_relation_found, where,
                "no integer relation up to degree " + std::to_string(max_degree));
}

std::optional<std::vector<mpq_class>> express_in(const big_complex& z1, int deg1,
                                                 const big_complex& z2, mpfr_prec_t bits) {
    std::vector<big_complex> vals;
    big_complex p(1L, bits);
    for (int i = 0; i < deg1; ++i) {
        vals.push_back(p);
        p = p * z1;
    }
    vals.push_back(z2.round_to(bits));
    lll_result red = lll_reduce(relation_lattice(vals, bits));
    big_float accept = big_float::pow2(-static_cast<long>(bits) / 4, bits);
    // coefficient cap against spuriously good rational approximations
    mpz_class height_cap = mpz_class(1) << std::min(64L, static_cast<long>(bits) / 8);
    for (const auto& row : red.basis) {
        if (row[deg1] == 0) continue;
        bool too_tall = false;
        for (int i = 0; i <= deg1; ++i)
            if (abs(row[i]) >= height_cap) too_tall = true;
        if (too_tall) continue;
        big_complex acc(0L, bits);
        for (int i = 0; i <= deg1; ++i) {
            big_complex t(big_float(row[i], bits), big_float(0L, bits));
            acc = acc + t * vals[i];
        }
        if (!(abs(acc) < accept)) continue;
        std::vector<mpq_class> witness(deg1);
        for (int i = 0; i < deg1; ++i) {
            witness[i] = mpq_class(-row[i]) / mpq_class(row[deg1]);
            witness[i].canonicalize();
        }
        while (!witness.empty() && witness.back() == 0) witness.pop_back();
        return witness;
    }
    return std::nullopt;
}

namespace {

big_complex eval_witness(const std::vector<mpq_class>& q, const big_complex& gen,
                         mpfr_prec_t bits) {
    big_complex acc(0L, bits);
    for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
        acc = acc * gen;
        acc.re = acc.re + big_float(q[i], bits);
    }
    return acc;
}

} // namespace

same_field_result same_field(const big_complex& z1, const big_complex& z2, int deg1,
                             mpfr_prec_t bits) {
    same_field_result out;
    auto w12 = express_in(z1, deg1, z2, bits);
    if (!w12) return out;
    out.witness = *w12;
    // equal fields need equal degrees; a one-way membership plus the degree
    // match of z2's own minimal polynomial settles it
    try {
        min_poly p2 = minimal_polynomial(z2, deg1, static_cast<long>(bits) / 4, bits);
        if (p2.degree() == deg1) {
            out.same = true;
            return out;
        }
    } catch (const error&) {
        // fall through to the reverse membership test
    }
    out.same = express_in(z2, deg1, z1, bits).has_value();
    return out;
}

field_description describe_field(const std::vector<big_complex>& labels,
                                 const field_options& opts) {
    const std::string where = "fieldrec.describe_field";
    mpfr_prec_t bits = opts.bits, twice = 2 * opts.bits;
    int n = static_cast<int>(labels.size());

    // recognition cache keyed by the rounded value
    std::map<std::string, std::optional<min_poly>> cache;
    auto recognize = [&](const big_complex& z) -> std::optional<min_poly> {
        std::string key = z.round_to(bits).re.to_string() + "|" + z.round_to(bits).im.to_string();
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        std::optional<min_poly> got;
        try {
            min_poly lo = minimal_polynomial(z.round_to(bits), opts.max_degree, opts.height_bits, bits);
            min_poly hi = minimal_polynomial(z, opts.max_degree, opts.height_bits, twice);
            // precision-doubling stability: identical coefficients or rejection
            if (lo.coeffs == hi.coeffs) got = hi;
        } catch (const error&) {
        }
        cache.emplace(key, got);
        return got;
    };

    // pick the generator: maximal degree, then smallest height, then index
    int gen_label = -1;
    std::optional<min_poly> gen_poly;
    for (int i = 0; i < n; ++i) {
        auto p = recognize(labels[i]);
        if (!p) continue;
        if (!gen_poly || p->degree() > gen_poly->degree() ||
            (p->degree() == gen_poly->degree() && p->height() < gen_poly->height())) {
            gen_poly = p;
            gen_label = i;
        }
    }
    if (!gen_poly)
        throw error(errc::field_description_incomplete, where,
                    "no label admits a certified minimal polynomial");

    auto build = [&](const big_complex& gen_value, const min_poly& poly) {
        field_description fd;
        fd.generator_value = gen_value;
        fd.poly = poly;
        big_float accept = big_float::pow2(-static_cast<long>(bits) / 4, twice);
        for (int i = 0; i < n; ++i) {
            auto w = express_in(gen_value, poly.degree(), labels[i], twice);
            if (w && !(abs(eval_witness(*w, gen_value, twice) - labels[i]) < accept)) w.reset();
            if (w)
                fd.members.push_back({i, *w});
            else
                fd.failures.push_back(i);
        }
        return fd;
    };

    field_description fd = build(labels[gen_label], *gen_poly);
    fd.generator_label = gen_label;
    if (fd.failures.empty()) return fd;

    // primitive-element search: small integer combinations with the first
    // failing label
    int partner = fd.failures.front();
    for (long k = 1; k <= 8; ++k) {
        big_complex combo = labels[gen_label];
        big_complex scaled(big_float(k, twice), big_float(0L, twice));
        combo = combo + scaled * labels[partner];
        auto cp = recognize(combo);
        if (!cp) continue;
        field_description fd2 = build(combo, *cp);
        fd2.generator_label = gen_label;
        fd2.combo_label = partner;
        fd2.combo_k = k;
        if (fd2.failures.empty()) return fd2;
    }
    throw error(errc::field_description_incomplete, where,
                std::to_string(fd.failures.size()) +
                    " labels not expressible in the chosen generator");
}

} // namespace cuspfield
