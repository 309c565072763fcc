#pragma once

#include <cmath>
#include <istream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "radialis/classify.hpp"
#include "radialis/errors.hpp"
#include "radialis/model_space.hpp"

namespace radialis {

inline void to_json(nlohmann::json& j, const ModelSpace& s) {
    nlohmann::json spectrum = nlohmann::json::array();
    for (const auto& e : s.spectrum.entries) {
        spectrum.push_back({{"K", e.curvature}, {"mult", e.multiplicity}});
    }
    j = nlohmann::json{{"id", family_id(s.family)},
                       {"n", s.n},
                       {"dim", s.dim},
                       {"spectrum", spectrum},
                       {"r_max", std::isinf(s.r_max) ? nlohmann::json(nullptr)
                                                     : nlohmann::json(s.r_max)},
                       {"einstein", s.einstein_constant}};
}

/// Rebuilds the catalog entry named by (id, n) and cross-checks every derived
/// field present in the JSON, so a round-trip through text cannot silently
/// drift from the catalog.
inline void from_json(const nlohmann::json& j, ModelSpace& s) {
    const auto family = family_from_id(j.at("id").get<std::string>());
    if (!family) {
        throw ValidationError("unknown space id '" + j.at("id").get<std::string>() + "'");
    }
    s = ModelSpace::make(*family, j.at("n").get<int>());
    if (j.contains("dim") && j.at("dim").get<int>() != s.dim) {
        throw ValidationError("space JSON dim=" + j.at("dim").dump()
                              + " contradicts catalog dim=" + std::to_string(s.dim));
    }
    if (j.contains("einstein")
        && j.at("einstein").get<double>() != s.einstein_constant) {
        throw ValidationError("space JSON einstein constant contradicts catalog value");
    }
    if (j.contains("spectrum")) {
        const auto& spec = j.at("spectrum");
        if (spec.size() != s.spectrum.entries.size()) {
            throw ValidationError("space JSON spectrum size contradicts catalog");
        }
        for (std::size_t i = 0; i < spec.size(); ++i) {
            if (spec[i].at("K").get<double>() != s.spectrum.entries[i].curvature
                || spec[i].at("mult").get<int>() != s.spectrum.entries[i].multiplicity) {
                throw ValidationError("space JSON spectrum contradicts catalog");
            }
        }
    }
}

inline void to_json(nlohmann::json& j, const ClassificationResult& res) {
    nlohmann::json table = nlohmann::json::array();
    for (const auto& row : res.table) {
        table.push_back({{"id", family_id(row.space.family)},
                         {"n", row.space.n},
                         {"name", row.space.name()},
                         {"residual", row.residual}});
    }
    j = nlohmann::json{{"best", nullptr},
                       {"residual", res.residual},
                       {"threshold", res.threshold},
                       {"table", table}};
    if (res.best) {
        j["best"] = {{"id", family_id(res.best->family)},
                     {"n", res.best->n},
                     {"name", res.best->name()}};
    }
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

inline double parse_number(std::string_view tok, const std::string& where) {
    try {
        std::size_t used = 0;
        const std::string t(tok);
        const double v = std::stod(t, &used);
        if (used != t.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ValidationError(where + ": expected a number, got '" + std::string(tok) + "'");
    }
}

}  // namespace detail

/// Parses the profile sample format: a literal `r,value` header followed by
/// one `<r>,<value>` pair per line. Blank lines and `#` comments are
/// skipped; errors carry 1-based line numbers.
inline ObservedProfile read_profile_csv(std::istream& in, ProfileQuantity quantity,
                                        int dimension, const std::string& source = "<csv>") {
    ObservedProfile obs;
    obs.quantity = quantity;
    obs.dimension = dimension;

    std::string line;
    bool saw_header = false;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        const std::string_view body = detail::trim(line);
        if (body.empty() || body.front() == '#') continue;
        const std::string where = source + ":" + std::to_string(lineno);
        if (!saw_header) {
            if (body != "r,value") {
                throw ValidationError(where + ": expected header 'r,value', got '"
                                      + std::string(body) + "'");
            }
            saw_header = true;
            continue;
        }
        const auto comma = body.find(',');
        if (comma == std::string_view::npos || body.find(',', comma + 1) != std::string_view::npos) {
            throw ValidationError(where + ": expected exactly two comma-separated fields");
        }
        obs.samples.push_back({detail::parse_number(detail::trim(body.substr(0, comma)), where),
                               detail::parse_number(detail::trim(body.substr(comma + 1)), where)});
    }
    if (!saw_header) {
        throw ValidationError(source + ": missing 'r,value' header");
    }
    obs.validate();
    return obs;
}

}  // namespace radialis
