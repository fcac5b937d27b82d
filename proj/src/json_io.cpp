#include "liefield/json_io.hpp"

#include "liefield/error.hpp"

#include <cctype>

namespace liefield {

namespace {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw Error("json field: empty rational literal");
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)) && c != '-' && c != '/')
            throw Error("json field: bad rational literal '" + s + "'");
    Rat r;
    if (r.set_str(s, 10) != 0) throw Error("json field: bad rational literal '" + s + "'");
    r.canonicalize();
    return r;
}

} // namespace

json field_to_json(const GField& X) {
    json coeffs = json::array();
    for (int j = 1; j <= X.dim(); ++j) {
        json terms = json::array();
        for (const auto& [m, c] : X.coeff(j).terms()) {
            json freq = json::array();
            for (const Rat& q : m.freq) freq.push_back(rat_to_string(q));
            terms.push_back({{"re", rat_to_string(c.re())},
                             {"im", rat_to_string(c.im())},
                             {"pow", m.pow},
                             {"freq", freq}});
        }
        coeffs.push_back({{"terms", std::move(terms)}});
    }
    return {{"dim", X.dim()}, {"coeffs", std::move(coeffs)}};
}

GField field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("coeffs"))
        throw Error("json field: expected object with dim and coeffs");
    int dim = j.at("dim").get<int>();
    if (dim < 0) throw Error("json field: negative dim");
    const json& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != dim)
        throw Error("json field: coeffs must list one entry per slot");
    GField X(dim);
    for (int slot = 0; slot < dim; ++slot) {
        const json& terms = coeffs.at(static_cast<size_t>(slot)).at("terms");
        GPoly f(dim);
        for (const json& t : terms) {
            ExpMonomial m(dim);
            const json& pow = t.at("pow");
            const json& freq = t.at("freq");
            if (static_cast<int>(pow.size()) != dim || static_cast<int>(freq.size()) != dim)
                throw Error("json field: pow/freq length mismatch");
            for (int k = 0; k < dim; ++k) {
                m.pow[static_cast<size_t>(k)] = pow.at(static_cast<size_t>(k)).get<int>();
                if (m.pow[static_cast<size_t>(k)] < 0) throw Error("json field: negative power");
                m.freq[static_cast<size_t>(k)] = rat_from_string(freq.at(static_cast<size_t>(k)).get<std::string>());
            }
            GaussianRational c(rat_from_string(t.at("re").get<std::string>()),
                               rat_from_string(t.at("im").get<std::string>()));
            f.add_term(std::move(m), std::move(c));
        }
        X.set_coeff(slot + 1, std::move(f));
    }
    return X;
}

} // namespace liefield
