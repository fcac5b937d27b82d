#include "liefield/print.hpp"

#include <vector>

namespace liefield {

namespace {

// exp(...) argument: rational coefficients on ascending variables, written
// so that every summand after the first is joined with " + " / " - " and the
// first carries its own sign inside the literal ("-1*x2", "-1/2*x1").
std::string linform_string(const ExpMonomial& m) {
    std::string out;
    bool first = true;
    for (int k = 0; k < m.dim(); ++k) {
        const Rat& q = m.freq[static_cast<size_t>(k)];
        if (q == 0) continue;
        Rat mag = abs(q);
        std::string piece;
        if (mag != 1) piece = rat_to_string(mag) + "*";
        piece += "x" + std::to_string(k + 1);
        if (first) {
            if (sign(q) < 0) piece = (mag == 1 ? std::string("-1*") : "-" + rat_to_string(mag) + "*") + "x" + std::to_string(k + 1);
            out += piece;
            first = false;
        } else {
            out += (sign(q) < 0) ? " - " : " + ";
            out += piece;
        }
    }
    return out;
}

// One printed term: magnitude coeff * [i] * powers * [exp] * [dir].
// `negative_first` asks for the sign to be folded into the literal because
// the term opens the whole expression.
std::string term_body(const Rat& magnitude, bool imaginary, const ExpMonomial& m, int dir_slot,
                      bool negative_first) {
    std::vector<std::string> factors;
    if (magnitude != 1) {
        factors.push_back((negative_first ? "-" : "") + rat_to_string(magnitude));
    } else if (negative_first) {
        factors.push_back("-1");
    }
    if (imaginary) factors.push_back("i");
    for (int k = 0; k < m.dim(); ++k) {
        int p = m.pow[static_cast<size_t>(k)];
        if (p == 0) continue;
        std::string f = "x" + std::to_string(k + 1);
        if (p > 1) f += "^" + std::to_string(p);
        factors.push_back(std::move(f));
    }
    bool has_freq = false;
    for (const Rat& q : m.freq)
        if (q != 0) {
            has_freq = true;
            break;
        }
    if (has_freq) factors.push_back("exp(" + linform_string(m) + ")");
    if (dir_slot > 0) factors.push_back("d" + std::to_string(dir_slot));

    if (factors.empty()) return rat_to_string(magnitude); // bare rational constant
    std::string out = factors[0];
    for (size_t k = 1; k < factors.size(); ++k) out += "*" + factors[k];
    return out;
}

// Append the real/imaginary printed terms of one monomial to `out`.
void emit_terms(std::string& out, const GaussianRational& c, const ExpMonomial& m, int dir_slot) {
    for (int part = 0; part < 2; ++part) {
        const Rat& q = (part == 0) ? c.re() : c.im();
        if (q == 0) continue;
        Rat mag = abs(q);
        if (out.empty()) {
            out += term_body(mag, part == 1, m, dir_slot, sign(q) < 0);
        } else {
            out += (sign(q) < 0) ? " - " : " + ";
            out += term_body(mag, part == 1, m, dir_slot, false);
        }
    }
}

} // namespace

std::string to_string(const GPoly& p) {
    std::string out;
    for (const auto& [m, c] : p.terms()) emit_terms(out, c, m, 0);
    return out.empty() ? "0" : out;
}

std::string to_string(const GField& X) {
    std::string out;
    for (int j = 1; j <= X.dim(); ++j)
        for (const auto& [m, c] : X.coeff(j).terms()) emit_terms(out, c, m, j);
    return out.empty() ? "0" : out;
}

} // namespace liefield
