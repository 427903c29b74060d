#include "wfp/json_io.hpp"

#include "json.hpp"
#include "wfp/bounds.hpp"

namespace wfp::io {

namespace {

using nlohmann::json;

json subset_json(const Subset& s) {
    json a = json::array();
    for (int p = 1; p <= s.ground_size(); ++p) {
        if (s.contains(p)) a.push_back(p);
    }
    return a;
}

json family_json(const Family& f) {
    json a = json::array();
    for (const auto& s : f) a.push_back(subset_json(s));
    return a;
}

json code_json(const Code& c) {
    json words = json::array();
    for (const auto& w : c.words()) {
        json row = json::array();
        for (auto s : w) row.push_back(static_cast<int>(s));
        words.push_back(row);
    }
    return json{{"n", c.length()}, {"q", c.alphabet_size()}, {"m", c.size()}, {"words", words}};
}

json opt_bool(const std::optional<bool>& b) {
    if (!b) return nullptr;
    return *b;
}

json report_json(const bounds::BoundReport& r) {
    json j{{"n", r.n},
           {"method", r.method},
           {"citation", r.citation},
           {"conditions", r.conditions},
           {"applicable", r.applicable}};
    if (r.value) j["value"] = *r.value;
    if (r.formula_value) j["formula_value"] = *r.formula_value;
    return j;
}

std::string done(json j) { return j.dump(2) + "\n"; }

const char* status_name(oracles::OracleStatus s) {
    return s == oracles::OracleStatus::Exact ? "exact" : "inconclusive";
}

}  // namespace

std::string verify_json(const Code& c, const VerifyOutcome& v) {
    json j{{"schema", kVerifySchemaId},
           {"code", code_json(c)},
           {"t", v.t},
           {"method", v.method},
           {"ok", v.ok}};
    if (v.direct) {
        j["direct_violation"] = json{{"coalition", v.direct->coalition}, {"framed", v.direct->framed}};
    }
    if (v.structural) {
        j["structural_violation"] =
            json{{"index", v.structural->index},
                 {"kind", v.structural->kind == ViolationKind::NotSperner ? "not-sperner"
                                                                          : "covering"}};
    }
    return done(j);
}

std::string analysis_json(const Code& c, const AnalysisReport& r) {
    json profiles = json::array();
    for (std::size_t i = 0; i < r.profiles.size(); ++i) {
        const auto& p = r.profiles[i];
        profiles.push_back(
            json{{"index", p.index},
                 {"family", family_json(p.family)},
                 {"min_size", p.min_size},
                 {"max_size", p.max_size},
                 {"spread", p.spread},
                 {"sperner", p.sperner},
                 {"non_2_covering", p.non_2_covering},
                 {"all_small", p.all_small},
                 {"all_large", p.all_large},
                 {"middle_layer_intersecting", opt_bool(p.middle_layer_intersecting)},
                 {"small_large_cross_intersecting", opt_bool(p.small_large_cross_intersecting)},
                 {"case", r.case_labels[i]}});
    }
    return done(json{{"schema", kAnalyzeSchemaId},
                     {"code", code_json(c)},
                     {"min_spread", r.min_spread},
                     {"profiles", profiles}});
}

std::string bounds_table_json(int from, int to) {
    json rows = json::array();
    for (int n = from; n <= to; ++n) {
        rows.push_back(json{{"n", n},
                            {"stinson_wei", report_json(bounds::bound_stinson_wei(n))},
                            {"panoui", report_json(bounds::bound_panoui(n))},
                            {"improved", report_json(bounds::bound_improved(n))},
                            {"best", report_json(bounds::best_upper_bound(n))}});
    }
    return done(json{{"schema", kBoundsSchemaId}, {"rows", rows}});
}

std::string certificate_json(const oracles::FamilyCertificate& c) {
    return done(json{{"schema", kCertificateSchemaId},
                     {"kind", "max-family"},
                     {"n", c.n},
                     {"status", status_name(c.status)},
                     {"optimum", c.optimum},
                     {"witness", family_json(c.witness)},
                     {"search_space_size", c.search_space_size},
                     {"nodes", c.nodes},
                     {"elapsed_seconds", c.elapsed_seconds}});
}

std::string certificate_json(const oracles::CodeCertificate& c) {
    return done(json{{"schema", kCertificateSchemaId},
                     {"kind", "max-code"},
                     {"n", c.n},
                     {"q", c.q},
                     {"t", c.t},
                     {"status", status_name(c.status)},
                     {"optimum", c.optimum},
                     {"witness", code_json(c.witness)},
                     {"search_space_size", c.search_space_size},
                     {"nodes", c.nodes},
                     {"elapsed_seconds", c.elapsed_seconds}});
}

std::string search_json(const search::SearchResult& r) {
    return done(json{{"schema", kSearchSchemaId},
                     {"best_code", code_json(r.best_code)},
                     {"size", r.size},
                     {"status", r.status == search::SearchStatus::Optimal ? "optimal"
                                                                          : "budget-exhausted"},
                     {"nodes_explored", r.nodes_explored},
                     {"seed", r.seed},
                     {"wall_seconds", r.wall_seconds}});
}

}  // namespace wfp::io
