#pragma once

// Canonical JSON rendering of result documents: sorted keys (the json type
// is map-backed), exact rationals as "p/q" strings, byte-reproducible for a
// given request.

#include <json.hpp>

#include "gamma.hpp"
#include "gl2.hpp"
#include "hwfunction.hpp"
#include "version.hpp"

namespace yangian {

using json = nlohmann::json;

inline json to_json(const Rational& r) { return r.to_string(); }
inline json to_json(const AffineForm& a) { return a.to_string(); }
inline json to_json(const ParamPoly& p) { return p.to_string(); }

inline json to_json(const GammaProduct& g) {
    json out;
    out["prefactor"] = g.prefactor().to_string();
    json factors = json::array();
    for (const auto& [arg, p] : g.gamma_factors())
        factors.push_back({{"argument", arg.to_string()}, {"power", p}});
    out["gamma_factors"] = factors;
    if (!g.sign_markers().empty()) {
        json signs = json::array();
        for (const auto& [e, m] : g.sign_markers())
            if (m) signs.push_back(e.to_string());
        out["orientation_signs"] = signs;
    }
    out["display"] = g.to_string();
    return out;
}

inline json to_json(const LaurentLeading& l) {
    return json{{"order", l.order}, {"coefficient", l.coeff.to_string()}};
}

inline json to_json(const RepTypeReport& r) {
    return json{{"configuration", to_string(r.configuration)},
                {"on_constant", to_string(r.on_constant)},
                {"on_psi0", to_string(r.on_psi0)},
                {"witnesses", r.witnesses}};
}

// the outer result document: echo of the request, outcome, tool version
inline json result_document(const std::string& command, const json& request, const json& outcome) {
    return json{{"command", command},
                {"request", request},
                {"outcome", outcome},
                {"version", kVersion}};
}

inline std::string canonical_dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace yangian
