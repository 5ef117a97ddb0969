#include "cuspfield/poly.hpp"

#include <algorithm>
#include <sstream>

namespace cuspfield {

void int_poly::add_term(const monomial& m, const mpz_class& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int_poly int_poly::constant(long c) { return constant(mpz_class(c)); }

int_poly int_poly::constant(const mpz_class& c) {
    int_poly p;
    p.add_term(monomial{}, c);
    return p;
}

int_poly int_poly::variable(int v) {
    int_poly p;
    p.add_term(monomial{{{v, 1}}}, 1);
    return p;
}

int_poly int_poly::affine(int v, long c1, long c0) {
    int_poly p;
    p.add_term(monomial{{{v, 1}}}, c1);
    p.add_term(monomial{}, c0);
    return p;
}

int int_poly::total_degree() const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

int int_poly::degree_in(int v) const {
    int d = 0;
    for (auto& [m, c] : terms_)
        for (auto& [mv, e] : m.powers)
            if (mv == v) d = std::max(d, e);
    return d;
}

std::vector<int> int_poly::variables() const {
    std::vector<int> vs;
    for (auto& [m, c] : terms_)
        for (auto& [v, e] : m.powers) vs.push_back(v);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

int_poly int_poly::operator-() const {
    int_poly r;
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

int_poly operator+(const int_poly& a, const int_poly& b) {
    int_poly r = a;
    for (auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

int_poly operator-(const int_poly& a, const int_poly& b) {
    int_poly r = a;
    for (auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

int_poly operator*(const int_poly& a, const int_poly& b) {
    int_poly r;
    for (auto& [ma, ca] : a.terms_) {
        for (auto& [mb, cb] : b.terms_) {
            monomial m;
            auto ia = ma.powers.begin(), ib = mb.powers.begin();
            while (ia != ma.powers.end() || ib != mb.powers.end()) {
                if (ib == mb.powers.end() || (ia != ma.powers.end() && ia->first < ib->first)) {
                    m.powers.push_back(*ia++);
                } else if (ia == ma.powers.end() || ib->first < ia->first) {
                    m.powers.push_back(*ib++);
                } else {
                    m.powers.push_back({ia->first, ia->second + ib->second});
                    ++ia;
                    ++ib;
                }
            }
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

int_poly int_poly::derivative(int v) const {
    int_poly r;
    for (auto& [m, c] : terms_) {
        for (size_t i = 0; i < m.powers.size(); ++i) {
            if (m.powers[i].first != v) continue;
            monomial dm = m;
            int e = dm.powers[i].second;
            if (e == 1)
                dm.powers.erase(dm.powers.begin() + i);
            else
                dm.powers[i].second = e - 1;
            r.add_term(dm, c * e);
            break;
        }
    }
    return r;
}

int_poly int_poly::substitute_affine(int v, int w, long c1, long c0) const {
    int_poly repl;
    if (w >= 0) repl = int_poly::affine(w, c1, c0);
    else repl = int_poly::constant(c0);
    int_poly r;
    for (auto& [m, c] : terms_) {
        monomial rest;
        int e = 0;
        for (auto& [mv, me] : m.powers) {
            if (mv == v)
                e = me;
            else
                rest.powers.push_back({mv, me});
        }
        int_poly term;
        term.add_term(rest, c);
        for (int i = 0; i < e; ++i) term = term * repl;
        r = r + term;
    }
    return r;
}

big_complex int_poly::eval(const std::vector<big_complex>& x, mpfr_prec_t prec) const {
    big_complex acc(0L, prec);
    std::map<int, std::vector<big_complex>> powers; // powers[v][e] = x_v^e
    for (auto& [m, c] : terms_) {
        big_complex t(big_float(c, prec), big_float(0L, prec));
        for (auto& [v, e] : m.powers) {
            auto& pv = powers[v];
            if (pv.empty()) pv = {big_complex(1L, prec), x[v].round_to(prec)};
            while (static_cast<int>(pv.size()) <= e) pv.push_back(pv.back() * pv[1]);
            t = t * pv[e];
        }
        acc = acc + t;
    }
    return acc;
}

std::string int_poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [m, c] : terms_) {
        if (!first) out << (c >= 0 ? " + " : " - ");
        else if (c < 0) out << "-";
        first = false;
        mpz_class ac = abs(c);
        bool need_coeff = ac != 1 || m.powers.empty();
        if (need_coeff) out << ac.get_str();
        for (size_t i = 0; i < m.powers.size(); ++i) {
            if (need_coeff || i) out << "*";
            out << "x" << m.powers[i].first;
            if (m.powers[i].second > 1) out << "^" << m.powers[i].second;
        }
    }
    return out.str();
}

poly_mat2 poly_mat2::identity() {
    return {int_poly::constant(1), int_poly(), int_poly(), int_poly::constant(1)};
}

poly_mat2 operator*(const poly_mat2& x, const poly_mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

poly_mat2 intercusp_matrix_poly(const int_poly& w) {
    return {int_poly(), w, int_poly::constant(1), int_poly()};
}

poly_mat2 translation_matrix_poly(const int_poly& u) {
    return {int_poly::constant(1), u, int_poly(), int_poly::constant(1)};
}

} // namespace cuspfield
