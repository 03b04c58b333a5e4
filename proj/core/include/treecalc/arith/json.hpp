#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "treecalc/arith/poly.hpp"

namespace treecalc {

// Rationals serialize as "p/q" (or "p"); polynomials as arrays of coefficient
// strings, lowest degree first.
inline nlohmann::json to_json_value(const Rational &r) { return r.to_string(); }

template <class Var>
nlohmann::json to_json_value(const Poly<Var> &p)
{
    auto out = nlohmann::json::array();
    for (const auto &c : p.coefficients()) {
        out.push_back(c.to_string());
    }
    return out;
}

inline Rational rational_from_json(const nlohmann::json &j)
{
    if (!j.is_string()) {
        throw ParseError("rational must be a JSON string");
    }
    return Rational::parse(j.get<std::string>());
}

template <class P>
P poly_from_json(const nlohmann::json &j)
{
    if (!j.is_array()) {
        throw ParseError("polynomial must be a JSON array");
    }
    std::vector<Rational> coeffs;
    for (const auto &c : j) {
        coeffs.push_back(rational_from_json(c));
    }
    return P(std::move(coeffs));
}

} // namespace treecalc
