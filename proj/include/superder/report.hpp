#ifndef SUPERDER_REPORT_HPP
#define SUPERDER_REPORT_HPP

#include "superder/derivations.hpp"
#include "superder/document.hpp"
#include "superder/families.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace superder {

// ---------------------------------------------------------------------------
// JSON report building. Every number printed by the human renderer below is
// present here; rationals are exact strings, never floats.
// ---------------------------------------------------------------------------

inline Json json_sdim(SuperDim d) { return Json::array({d.even, d.odd}); }

inline Json json_matrix(const Matrix& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(format_rational(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json json_subspace(const Subspace& s)
{
    return Json{{"sdim", json_sdim(s.sdim())},
                {"even_basis", json_matrix(s.even_part())},
                {"odd_basis", json_matrix(s.odd_part())}};
}

inline Json json_map_space(const GradedMapSpace& s)
{
    Json even = Json::array(), odd = Json::array();
    for (const auto& m : s.even_basis())
        even.push_back(json_matrix(m.mat));
    for (const auto& m : s.odd_basis())
        odd.push_back(json_matrix(m.mat));
    return Json{{"sdim", json_sdim(s.sdim())}, {"even_basis", std::move(even)}, {"odd_basis", std::move(odd)}};
}

inline Json json_validation(const ValidationReport& v)
{
    Json out = Json::array();
    for (const auto& viol : v.violations)
        out.push_back(Json{{"kind", viol.kind}, {"tuple", viol.tuple}, {"detail", viol.detail}});
    return out;
}

/// Full per-algebra report: summary, L²/Z/series invariants, the four
/// derivation spaces with basis matrices, and the λ bound section.
inline Json algebra_report(const LieSuperalgebra& L)
{
    Json rep;
    const ValidationReport v = validate(L);
    rep["algebra"] = Json{{"sdim", json_sdim(L.sdim())},
                          {"names", L.names()},
                          {"valid", v.ok()},
                          {"violations", json_validation(v)}};
    if (!v.ok())
        return rep;

    Json inv;
    inv["derived_subalgebra"] = json_subspace(derived_subalgebra(L));
    inv["center"] = json_subspace(center(L));
    Json lower = Json::array(), upper = Json::array();
    for (const auto& s : lower_central_series(L))
        lower.push_back(json_sdim(s.sdim()));
    for (const auto& s : upper_central_series(L))
        upper.push_back(json_sdim(s.sdim()));
    inv["lower_central_series"] = std::move(lower);
    inv["upper_central_series"] = std::move(upper);
    const auto cls = nilpotency_class(L);
    inv["nilpotency_class"] = cls ? Json(*cls) : Json(nullptr);
    const auto nilidx = super_nilindex(L);
    inv["super_nilindex"] = nilidx ? json_sdim(*nilidx) : Json(nullptr);
    if (cls)
        inv["minimal_generator_pair"] = json_sdim(minimal_generator_pair(L));
    else
        inv["minimal_generator_pair"] = nullptr;
    rep["invariants"] = std::move(inv);

    rep["derivations"] = Json{{"legend", "matrices act on column coordinate vectors; basis order: even block first, then odd"},
                              {"der", json_map_space(der(L))},
                              {"id", json_map_space(id_derivations(L))},
                              {"id_star", json_map_space(id_star(L))},
                              {"ad", json_map_space(ad_space(L))}};

    if (cls) {
        const BoundReport b = check_upper_bound(L);
        rep["bound"] = Json{{"applicable", true},
                            {"pair", json_sdim(b.pair)},
                            {"lambda", json_sdim(b.bound)},
                            {"idstar", json_sdim(b.idstar)},
                            {"holds", b.holds},
                            {"tight", b.tight}};
    } else {
        rep["bound"] = Json{{"applicable", false}, {"reason", "not nilpotent: minimal generator pair undefined"}};
    }
    return rep;
}

inline Json json_chain(const ChainReport& r)
{
    return Json{{"ad", json_sdim(r.ad)},
                {"idstar", json_sdim(r.idstar)},
                {"id", json_sdim(r.id)},
                {"der", json_sdim(r.der)},
                {"ad_in_idstar", r.ad_in_idstar},
                {"idstar_in_id", r.idstar_in_id},
                {"id_in_der", r.id_in_der},
                {"ad_closed", r.ad_closed},
                {"idstar_closed", r.idstar_closed},
                {"id_closed", r.id_closed},
                {"der_closed", r.der_closed},
                {"pass", r.ok()}};
}

inline Json json_bound(const BoundReport& b)
{
    return Json{{"pair", json_sdim(b.pair)},  {"lambda", json_sdim(b.bound)}, {"idstar", json_sdim(b.idstar)},
                {"holds", b.holds},           {"tight", b.tight},             {"pass", b.holds}};
}

inline Json json_heisenberg_report(const HeisenbergIdstarReport& r)
{
    return Json{{"h_sdim", json_sdim(r.h_sdim)},
                {"center_sdim", json_sdim(r.z_sdim)},
                {"idstar", json_sdim(r.idstar_sdim)},
                {"expected", json_sdim(r.expected)},
                {"sdim_matches", r.sdim_matches},
                {"blocks_match", r.blocks_match},
                {"pass", r.pass()}};
}

inline Json json_class2_report(const Class2IdstarReport& r)
{
    return Json{{"idstar", json_sdim(r.idstar_sdim)},
                {"idstar_h", json_sdim(r.idstar_h_sdim)},
                {"pair", json_sdim(r.pair)},
                {"lambda", json_sdim(r.bound)},
                {"tight", r.tight},
                {"kills_s", r.kills_s},
                {"kills_center", r.kills_center},
                {"complement_into_l2", r.complement_into_l2},
                {"blocks_match", r.blocks_match},
                {"pass", r.pass()}};
}

inline Json json_filiform_report(const FiliformIdstarReport& r)
{
    return Json{{"n", r.n},
                {"m", r.m},
                {"pair", json_sdim(r.pair)},
                {"expected", json_sdim(r.expected)},
                {"idstar", json_sdim(r.idstar_sdim)},
                {"sdim_matches", r.sdim_matches},
                {"shift_property", r.shift_property},
                {"seeds_in_l2", r.seeds_in_l2},
                {"kills_center", r.kills_center},
                {"pass", r.pass()}};
}

// ---------------------------------------------------------------------------
// Human-readable rendering
// ---------------------------------------------------------------------------

inline void print_matrix(std::ostream& os, const Matrix& m, const std::string& indent)
{
    std::vector<std::size_t> widths(m.cols(), 1);
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            widths[j] = std::max(widths[j], format_rational(m(i, j)).size());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << indent << "[";
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? " " : "") << std::setw(static_cast<int>(widths[j])) << format_rational(m(i, j));
        os << "]\n";
    }
}

inline std::string sdim_str(const Json& pair)
{
    return "(" + pair[0].dump() + ", " + pair[1].dump() + ")";
}

inline void print_map_space(std::ostream& os, const std::string& name, const Json& space)
{
    os << "  " << name << ": sdim " << sdim_str(space["sdim"]) << "\n";
    auto print_side = [&](const char* label, const Json& mats) {
        for (std::size_t i = 0; i < mats.size(); ++i) {
            os << "    " << label << "[" << i << "]:\n";
            Matrix m(mats[i].size(), mats[i].empty() ? 0 : mats[i][0].size());
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t c = 0; c < m.cols(); ++c)
                    m(r, c) = parse_rational(mats[i][r][c].get<std::string>());
            print_matrix(os, m, "      ");
        }
    };
    print_side("even", space["even_basis"]);
    print_side("odd", space["odd_basis"]);
}

/// Renders the JSON report for terminals; prints exactly the numbers the
/// machine-readable report carries.
inline void render_report(std::ostream& os, const Json& rep)
{
    const auto& alg = rep["algebra"];
    os << "algebra: sdim " << sdim_str(alg["sdim"]) << ", basis {";
    const auto& names = alg["names"];
    const std::size_t even = alg["sdim"][0].get<std::size_t>();
    for (std::size_t i = 0; i < names.size(); ++i)
        os << (i == 0 ? "" : i == even ? " | " : " ") << names[i].get<std::string>();
    os << "}\n";
    os << "valid: " << (alg["valid"].get<bool>() ? "yes" : "no") << "\n";
    for (const auto& v : alg["violations"])
        os << "  violation (" << v["kind"].get<std::string>() << "): " << v["detail"].get<std::string>() << "\n";
    if (!alg["valid"].get<bool>())
        return;

    const auto& inv = rep["invariants"];
    os << "derived subalgebra L^2: sdim " << sdim_str(inv["derived_subalgebra"]["sdim"]) << "\n";
    os << "center Z(L): sdim " << sdim_str(inv["center"]["sdim"]) << "\n";
    os << "lower central series:";
    for (const auto& s : inv["lower_central_series"])
        os << " " << sdim_str(s);
    os << "\nupper central series:";
    for (const auto& s : inv["upper_central_series"])
        os << " " << sdim_str(s);
    os << "\nnilpotency class: ";
    if (inv["nilpotency_class"].is_null())
        os << "none (not nilpotent)";
    else
        os << inv["nilpotency_class"].get<std::size_t>();
    os << "\nsuper-nilindex: " << (inv["super_nilindex"].is_null() ? std::string("none") : sdim_str(inv["super_nilindex"]));
    os << "\nminimal generator pair: "
       << (inv["minimal_generator_pair"].is_null() ? std::string("undefined (not nilpotent)")
                                                   : sdim_str(inv["minimal_generator_pair"]))
       << "\n";

    const auto& der = rep["derivations"];
    os << "derivation spaces (" << der["legend"].get<std::string>() << "):\n";
    print_map_space(os, "Der(L)", der["der"]);
    print_map_space(os, "ID(L)", der["id"]);
    print_map_space(os, "ID*(L)", der["id_star"]);
    print_map_space(os, "ad(L)", der["ad"]);

    const auto& bound = rep["bound"];
    if (bound["applicable"].get<bool>()) {
        os << "upper bound: sdim ID* " << sdim_str(bound["idstar"]) << " <= lambda(L^2; " << sdim_str(bound["pair"])
           << ") = " << sdim_str(bound["lambda"]) << ": " << (bound["holds"].get<bool>() ? "holds" : "VIOLATED")
           << (bound["tight"].get<bool>() ? " (tight)" : "") << "\n";
    } else {
        os << "upper bound: not applicable (" << bound["reason"].get<std::string>() << ")\n";
    }
}

}  // namespace superder

#endif
