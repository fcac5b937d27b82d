#include "liefield/qpoly.hpp"

#include <algorithm>
#include <sstream>

namespace liefield {

Monomial Monomial::var(int v, int e) {
    if (v < 0) throw IndexError("Monomial::var: negative variable index");
    Monomial m;
    if (e < 0) throw PreconditionError("Monomial::var: negative exponent");
    if (e == 0) return m;
    m.exps.assign(static_cast<std::size_t>(v) + 1, 0);
    m.exps[static_cast<std::size_t>(v)] = e;
    return m;
}

void Monomial::trim() {
    while (!exps.empty() && exps.back() == 0) exps.pop_back();
}

int Monomial::degree() const {
    int d = 0;
    for (int e : exps) d += e;
    return d;
}

int Monomial::exponent(int v) const {
    if (v < 0 || v >= width()) return 0;
    return exps[static_cast<std::size_t>(v)];
}

bool Monomial::divides(const Monomial& o) const {
    if (width() > o.width()) return false;
    for (int k = 0; k < width(); ++k)
        if (exps[static_cast<std::size_t>(k)] > o.exps[static_cast<std::size_t>(k)]) return false;
    return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
    if (!o.divides(*this)) throw PreconditionError("Monomial::divided_by: not divisible");
    Monomial q = *this;
    for (int k = 0; k < o.width(); ++k) q.exps[static_cast<std::size_t>(k)] -= o.exps[static_cast<std::size_t>(k)];
    q.trim();
    return q;
}

bool Monomial::coprime_with(const Monomial& o) const {
    int w = std::min(width(), o.width());
    for (int k = 0; k < w; ++k)
        if (exps[static_cast<std::size_t>(k)] > 0 && o.exps[static_cast<std::size_t>(k)] > 0) return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    int w = std::max(a.width(), b.width());
    m.exps.resize(static_cast<std::size_t>(w), 0);
    for (int k = 0; k < w; ++k)
        m.exps[static_cast<std::size_t>(k)] = std::max(a.exponent(k), b.exponent(k));
    m.trim();
    return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    int w = std::max(a.width(), b.width());
    m.exps.resize(static_cast<std::size_t>(w), 0);
    for (int k = 0; k < w; ++k)
        m.exps[static_cast<std::size_t>(k)] = a.exponent(k) + b.exponent(k);
    return m;
}

bool DegRevLexGreater::operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    int w = std::max(a.width(), b.width());
    for (int k = w - 1; k >= 0; --k) {
        int ea = a.exponent(k), eb = b.exponent(k);
        // At equal total degree, the monomial with the smaller exponent in
        // the last variable where they differ is the larger one.
        if (ea != eb) return ea < eb;
    }
    return false;
}

QPoly::QPoly(long c) {
    if (c != 0) terms_.emplace(Monomial::one(), Rat(c));
}

QPoly::QPoly(const Rat& c) {
    if (!(c == 0)) terms_.emplace(Monomial::one(), c);
}

QPoly QPoly::variable(int v) {
    QPoly p;
    p.terms_.emplace(Monomial::var(v), Rat(1));
    return p;
}

QPoly QPoly::term(Monomial m, Rat c) {
    QPoly p;
    m.trim();
    if (!(c == 0)) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

bool QPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rat QPoly::constant_value() const {
    if (!is_constant()) throw PreconditionError("QPoly::constant_value: polynomial is not constant");
    return terms_.empty() ? Rat(0) : terms_.begin()->second;
}

int QPoly::degree() const {
    if (terms_.empty()) return -1;
    return terms_.begin()->first.degree();
}

int QPoly::max_variable() const {
    int m = -1;
    for (const auto& [mono, c] : terms_) m = std::max(m, mono.width() - 1);
    return m;
}

const Monomial& QPoly::leading_monomial() const {
    if (terms_.empty()) throw PreconditionError("QPoly::leading_monomial: zero polynomial");
    return terms_.begin()->first;
}

const Rat& QPoly::leading_coeff() const {
    if (terms_.empty()) throw PreconditionError("QPoly::leading_coeff: zero polynomial");
    return terms_.begin()->second;
}

QPoly QPoly::monic() const {
    if (terms_.empty()) throw PreconditionError("QPoly::monic: zero polynomial");
    QPoly r = *this;
    Rat inv = Rat(1) / leading_coeff();
    for (auto& [m, c] : r.terms_) c = c * inv;
    return r;
}

void QPoly::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    Monomial key = m;
    key.trim();
    auto [it, inserted] = terms_.emplace(std::move(key), c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat QPoly::coeff(const Monomial& m) const {
    Monomial key = m;
    key.trim();
    auto it = terms_.find(key);
    return it == terms_.end() ? Rat(0) : it->second;
}

QPoly QPoly::operator-() const {
    QPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

QPoly& QPoly::operator*=(const Rat& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c = c * s;
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

namespace {

std::string rat_text(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

}  // namespace

std::string QPoly::str(const std::function<std::string(int)>& name) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool printed_scalar = false;
        if (m.is_one() || !(a == 1)) {
            os << rat_text(a);
            printed_scalar = true;
        }
        bool need_star = printed_scalar;
        for (int v = 0; v < m.width(); ++v) {
            int e = m.exponent(v);
            if (e == 0) continue;
            if (need_star) os << "*";
            os << name(v);
            if (e > 1) os << "^" << e;
            need_star = true;
        }
    }
    return os.str();
}

std::string QPoly::str() const {
    return str([](int v) { return "t" + std::to_string(v); });
}

}  // namespace liefield
