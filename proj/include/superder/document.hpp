#ifndef SUPERDER_DOCUMENT_HPP
#define SUPERDER_DOCUMENT_HPP

#include "superder/superalgebra.hpp"

#include <json.hpp>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace superder {

using Json = nlohmann::ordered_json;

/// Algebra document format (format_version "1"):
/// {
///   "format_version": "1",
///   "sdim": [even, odd],
///   "names": ["z", "w"],                     // optional
///   "brackets": [
///     {"left": "w", "right": "w", "value": {"z": "1"}}
///   ]
/// }
/// Unlisted pairs are zero. Only one of each super-skew pair should be
/// listed; the partner is completed by the sign rule, and listing both
/// inconsistently is a parse error. Rationals are strings "p/q" — numeric
/// literals are rejected so no float can sneak in.
inline LieSuperalgebra parse_algebra_document(const std::string& text)
{
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw ParseError("document root must be an object");

    if (!doc.contains("format_version") || !doc["format_version"].is_string() || doc["format_version"] != "1")
        throw ParseError("missing or unsupported format_version (expected \"1\")");

    if (!doc.contains("sdim") || !doc["sdim"].is_array() || doc["sdim"].size() != 2 ||
        !doc["sdim"][0].is_number_unsigned() || !doc["sdim"][1].is_number_unsigned())
        throw ParseError("sdim must be an array [even, odd] of non-negative integers");
    const SuperDim d{doc["sdim"][0].get<std::size_t>(), doc["sdim"][1].get<std::size_t>()};
    const std::size_t n = d.total();

    std::vector<std::string> names;
    if (doc.contains("names")) {
        if (!doc["names"].is_array() || doc["names"].size() != n)
            throw ParseError("names must list exactly " + std::to_string(n) + " strings");
        for (const auto& x : doc["names"]) {
            if (!x.is_string() || x.get<std::string>().empty())
                throw ParseError("names must be non-empty strings");
            names.push_back(x.get<std::string>());
        }
    } else {
        names = LieSuperalgebra::default_names(d);
    }
    std::map<std::string, std::size_t> index_of;
    for (std::size_t i = 0; i < n; ++i)
        if (!index_of.emplace(names[i], i).second)
            throw ParseError("duplicate basis name \"" + names[i] + "\"");

    std::vector<std::string> unknown;
    auto resolve = [&](const Json& ref) -> std::size_t {
        if (ref.is_number_unsigned()) {
            const auto i = ref.get<std::size_t>();
            if (i >= n)
                throw ParseError("basis index " + std::to_string(i) + " out of range");
            return i;
        }
        if (ref.is_string()) {
            const auto s = ref.get<std::string>();
            const auto it = index_of.find(s);
            if (it != index_of.end())
                return it->second;
            if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos) {
                const auto i = std::stoul(s);
                if (i < n)
                    return i;
            }
            unknown.push_back(s);
            return 0;
        }
        throw ParseError("basis references must be names or indices");
    };

    auto table = LieSuperalgebra::zero_table(d);
    std::vector<bool> listed(n * n, false);
    if (doc.contains("brackets")) {
        if (!doc["brackets"].is_array())
            throw ParseError("brackets must be an array");
        for (const auto& entry : doc["brackets"]) {
            if (!entry.is_object() || !entry.contains("left") || !entry.contains("right") || !entry.contains("value"))
                throw ParseError("each bracket entry needs left, right and value");
            unknown.clear();
            const std::size_t i = resolve(entry["left"]);
            const std::size_t j = resolve(entry["right"]);
            Vec val(n);
            if (!entry["value"].is_object())
                throw ParseError("bracket value must be an object {basis: rational-string}");
            for (const auto& [key, raw] : entry["value"].items()) {
                const std::size_t k = resolve(Json(key));
                if (!unknown.empty())
                    continue;
                if (raw.is_number())
                    throw ParseError("rationals must be strings like \"3/4\"; numeric literals are not accepted (at [" +
                                     names[i] + ", " + names[j] + "])");
                if (!raw.is_string())
                    throw ParseError("bracket coefficients must be rational strings");
                val[k] = parse_rational(raw.get<std::string>());
            }
            if (!unknown.empty()) {
                std::string msg = "unknown basis names:";
                for (const auto& u : unknown)
                    msg += " \"" + u + "\"";
                throw ParseError(msg);
            }
            if (listed[i * n + j])
                throw ParseError("bracket [" + names[i] + ", " + names[j] + "] listed twice");
            listed[i * n + j] = true;
            table[i * n + j] = std::move(val);
        }
    }

    // complete super-skew partners; reject inconsistent double listings
    auto parity = [&](std::size_t i) { return i < d.even ? Parity::even : Parity::odd; };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool both_odd = parity(i) == Parity::odd && parity(j) == Parity::odd;
            const Rational sign = both_odd ? 1 : -1;
            Vec& fwd = table[i * n + j];
            Vec& bwd = table[j * n + i];
            if (listed[i * n + j] && listed[j * n + i]) {
                for (std::size_t k = 0; k < n; ++k)
                    if (bwd[k] != sign * fwd[k])
                        throw ParseError("brackets [" + names[i] + ", " + names[j] + "] and [" + names[j] + ", " +
                                         names[i] + "] are inconsistent with super skew-symmetry");
            } else if (listed[i * n + j]) {
                bwd = vec_scaled(fwd, sign);
            } else if (listed[j * n + i]) {
                fwd = vec_scaled(bwd, sign);
            }
        }

    return LieSuperalgebra(d, std::move(names), std::move(table));
}

inline Json serialize_algebra(const LieSuperalgebra& L)
{
    const std::size_t n = L.dim();
    Json doc;
    doc["format_version"] = "1";
    doc["sdim"] = {L.sdim().even, L.sdim().odd};
    doc["names"] = L.names();
    Json brackets = Json::array();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const Vec& v = L.table(i, j);
            if (is_zero_vec(v))
                continue;
            Json value = Json::object();
            for (std::size_t k = 0; k < n; ++k)
                if (!v[k].is_zero())
                    value[L.names()[k]] = format_rational(v[k]);
            brackets.push_back({{"left", L.names()[i]}, {"right", L.names()[j]}, {"value", value}});
        }
    doc["brackets"] = std::move(brackets);
    return doc;
}

}  // namespace superder

#endif
