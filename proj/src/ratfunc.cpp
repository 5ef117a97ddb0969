#include "cuspfield/ratfunc.hpp"

#include <sstream>

namespace cuspfield {

qpoly qpoly::variable() {
    qpoly p;
    p.c_ = {mpq_class(0), mpq_class(1)};
    return p;
}

qpoly qpoly::from_int_coeffs(const std::vector<mpz_class>& coeffs) {
    qpoly p;
    for (const auto& c : coeffs) p.c_.emplace_back(c);
    p.trim();
    return p;
}

qpoly operator+(const qpoly& a, const qpoly& b) {
    qpoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), mpq_class(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.trim();
    return r;
}

qpoly operator-(const qpoly& a, const qpoly& b) { return a + (-b); }

qpoly qpoly::operator-() const {
    qpoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

qpoly operator*(const qpoly& a, const qpoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    qpoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
}

qpoly qpoly::monic() const {
    if (is_zero()) return {};
    qpoly r = *this;
    mpq_class lead = r.c_.back();
    for (auto& c : r.c_) c /= lead;
    return r;
}

void qpoly::divmod(const qpoly& a, const qpoly& b, qpoly& quo, qpoly& rem) {
    quo = qpoly();
    rem = a;
    if (b.is_zero()) return;
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        mpq_class f = rem.c_.back() / b.c_.back();
        if (static_cast<int>(quo.c_.size()) <= shift) quo.c_.resize(shift + 1, mpq_class(0));
        quo.c_[shift] += f;
        for (size_t i = 0; i < b.c_.size(); ++i) rem.c_[i + shift] -= f * b.c_[i];
        rem.trim();
    }
    quo.trim();
}

qpoly qpoly::gcd(qpoly a, qpoly b) {
    while (!b.is_zero()) {
        qpoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

std::vector<mpz_class> qpoly::primitive_int_coeffs() const {
    if (is_zero()) return {};
    mpz_class den_lcm = 1;
    for (const auto& c : c_)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<mpz_class> out;
    out.reserve(c_.size());
    mpz_class content = 0;
    for (const auto& c : c_) {
        mpz_class v = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        out.push_back(v);
    }
    if (content != 0)
        for (auto& v : out) v /= content;
    if (out.back() < 0)
        for (auto& v : out) v = -v;
    return out;
}

big_complex qpoly::eval(const big_complex& x, mpfr_prec_t bits) const {
    big_complex acc(0L, bits);
    for (int i = degree(); i >= 0; --i) {
        acc = acc * x;
        acc.re = acc.re + big_float(c_[i], bits);
    }
    return acc;
}

std::string qpoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        mpq_class a = abs(c_[i]);
        if (first) {
            if (c_[i] < 0) out << "-";
            first = false;
        } else {
            out << (c_[i] < 0 ? " - " : " + ");
        }
        if (i == 0 || a != 1) out << a.get_str();
        if (i > 0) out << var;
        if (i > 1) out << "^" << i;
    }
    return out.str();
}

ratfunc::ratfunc(qpoly num, qpoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.is_zero()) {
        den_ = qpoly(mpq_class(1));
        return;
    }
    qpoly g = qpoly::gcd(num_, den_);
    if (g.degree() > 0) {
        qpoly q, r;
        qpoly::divmod(num_, g, q, r);
        num_ = q;
        qpoly::divmod(den_, g, q, r);
        den_ = q;
    }
    mpq_class lead = den_.leading();
    if (lead != 1) {
        for (auto& c : num_.c_) c /= lead;
        for (auto& c : den_.c_) c /= lead;
    }
}

ratfunc ratfunc::variable() { return ratfunc(qpoly::variable(), qpoly(mpq_class(1))); }

ratfunc operator+(const ratfunc& a, const ratfunc& b) {
    return ratfunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ratfunc operator-(const ratfunc& a, const ratfunc& b) { return a + (-b); }

ratfunc ratfunc::operator-() const {
    ratfunc r = *this;
    r.num_ = -r.num_;
    return r;
}

ratfunc operator*(const ratfunc& a, const ratfunc& b) {
    return ratfunc(a.num_ * b.num_, a.den_ * b.den_);
}

ratfunc operator/(const ratfunc& a, const ratfunc& b) {
    return ratfunc(a.num_ * b.den_, a.den_ * b.num_);
}

big_complex ratfunc::eval(const big_complex& x, mpfr_prec_t bits) const {
    return num_.eval(x, bits) / den_.eval(x, bits);
}

std::string ratfunc::to_string(const std::string& var) const {
    if (den_.degree() == 0 && den_.coeffs()[0] == 1) return num_.to_string(var);
    return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

} // namespace cuspfield
