#pragma once

#include <gmpxx.h>

#include <string>

namespace liefield {

/// Exact rational scalar. GMP's canonical form (reduced, positive denominator)
/// is maintained by all arithmetic, so equality is structural.
using Rat = mpq_class;

/// Build p/q in canonical form. q must be nonzero.
inline Rat make_rat(long p, long q = 1) {
    Rat r(p, q);
    r.canonicalize();
    return r;
}

/// Canonical text form: "p" when the denominator is 1, else "p/q".
inline std::string rat_to_string(const Rat& r) {
    return r.get_str();
}

inline int sign(const Rat& r) { return sgn(r); }

/// Element of Q(i): re + im*i with exact rational parts.
/// This is the coefficient field of the whole engine; it is closed under
/// the ring operations and under division by nonzero elements.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(Rat re) : re_(std::move(re)), im_(0) {}
    GaussianRational(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}
    GaussianRational(long n) : re_(n), im_(0) {}

    static GaussianRational zero() { return GaussianRational(); }
    static GaussianRational one() { return GaussianRational(1); }
    static GaussianRational i() { return GaussianRational(Rat(0), Rat(1)); }

    const Rat& re() const { return re_; }
    const Rat& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return {re_, -im_}; }

    /// re^2 + im^2; zero iff the element is zero.
    Rat norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rat r = re_ * o.re_ - im_ * o.im_;
        Rat i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    GaussianRational& operator*=(const Rat& s) {
        re_ *= s;
        im_ *= s;
        return *this;
    }

    /// Multiplicative inverse; caller guarantees nonzero.
    GaussianRational inverse() const {
        Rat n = norm();
        return {re_ / n, -im_ / n};
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator*(GaussianRational a, const Rat& s) { return a *= s; }
    friend GaussianRational operator*(const Rat& s, GaussianRational a) { return a *= s; }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inverse();
    }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    /// Total order for use as a deterministic tie-breaker (not a field order).
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        int c = cmp(a.re_, b.re_);
        if (c != 0) return c < 0;
        return cmp(a.im_, b.im_) < 0;
    }

    /// Forms like "0", "2", "-1/2", "i", "-i", "1/2*i", "3 - 2*i".
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        if (re_ != 0) out += rat_to_string(re_);
        if (im_ != 0) {
            if (!out.empty()) out += (sgn(im_) < 0) ? " - " : " + ";
            else if (sgn(im_) < 0) out += "-";
            Rat a = abs(im_);
            if (a != 1) out += rat_to_string(a) + "*";
            out += "i";
        }
        return out;
    }

private:
    Rat re_, im_;
};

} // namespace liefield
