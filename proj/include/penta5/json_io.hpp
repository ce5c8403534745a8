#pragma once

// JSON bindings for the report types. Coefficients can run to hundreds
// of digits, so integers are serialized as decimal strings.

#include <json.hpp>

#include "penta5/congruence.hpp"
#include "penta5/matrices.hpp"
#include "penta5/report.hpp"

namespace penta5 {

inline void to_json(nlohmann::json& j, const Valuation& v) {
    if (v.infinite) {
        j = "inf";
    } else {
        j = v.value;
    }
}

inline void from_json(const nlohmann::json& j, Valuation& v) {
    if (j.is_string()) {
        v = Valuation::inf();
    } else {
        v = Valuation::finite(j.get<std::int64_t>());
    }
}

inline void to_json(nlohmann::json& j, const Mismatch& m) {
    j = {{"exponent", m.exponent}, {"lhs", m.lhs.get_str()}, {"rhs", m.rhs.get_str()}};
}

inline void from_json(const nlohmann::json& j, Mismatch& m) {
    m.exponent = j.at("exponent").get<std::int64_t>();
    m.lhs = Int(j.at("lhs").get<std::string>());
    m.rhs = Int(j.at("rhs").get<std::string>());
}

inline void to_json(nlohmann::json& j, const IdentityReport& r) {
    j = {{"status", r.equal ? "equal" : "unequal"}, {"achieved_truncation", r.checked_bound}};
    if (r.modulus) j["modulus"] = r.modulus->get_str();
    if (r.mismatch) j["mismatch"] = *r.mismatch;
}

inline void from_json(const nlohmann::json& j, IdentityReport& r) {
    r.equal = j.at("status").get<std::string>() == "equal";
    r.checked_bound = j.at("achieved_truncation").get<std::int64_t>();
    r.modulus.reset();
    if (j.contains("modulus")) r.modulus = Int(j.at("modulus").get<std::string>());
    r.mismatch.reset();
    if (j.contains("mismatch")) r.mismatch = j.at("mismatch").get<Mismatch>();
}

inline void to_json(nlohmann::json& j, const CongruenceReport& r) {
    j = {{"id", r.id()},
         {"colors", r.colors},
         {"step", r.step},
         {"offset", r.offset},
         {"alpha", r.alpha},
         {"modulus", r.modulus().get_str()},
         {"count", r.n_max + 1},
         {"status", r.pass ? "pass" : "fail"},
         {"min_valuation", r.min_valuation}};
    if (r.counterexample) {
        j["counterexample"] = {{"n", r.counterexample->first},
                               {"value", r.counterexample->second.get_str()}};
    }
}

inline void from_json(const nlohmann::json& j, CongruenceReport& r) {
    r.colors = j.at("colors").get<std::int64_t>();
    r.step = j.at("step").get<std::int64_t>();
    r.offset = j.at("offset").get<std::int64_t>();
    r.alpha = j.at("alpha").get<std::int64_t>();
    r.n_max = j.at("count").get<std::int64_t>() - 1;
    r.pass = j.at("status").get<std::string>() == "pass";
    r.min_valuation = j.at("min_valuation").get<Valuation>();
    r.counterexample.reset();
    if (j.contains("counterexample")) {
        r.counterexample = std::make_pair(
            j.at("counterexample").at("n").get<std::int64_t>(),
            Int(j.at("counterexample").at("value").get<std::string>()));
    }
}

inline void to_json(nlohmann::json& j, const BoundViolation& v) {
    j = {{"row", v.row}, {"col", v.col}, {"actual", v.actual}, {"required", v.required}};
}

inline void from_json(const nlohmann::json& j, BoundViolation& v) {
    v.row = j.at("row").get<std::int64_t>();
    v.col = j.at("col").get<std::int64_t>();
    v.actual = j.at("actual").get<Valuation>();
    v.required = j.at("required").get<std::int64_t>();
}

inline void to_json(nlohmann::json& j, const BoundReport& r) {
    j = {{"family", family_name(r.family)},
         {"rows", r.row_max},
         {"cols", r.col_max},
         {"checked", r.checked},
         {"status", r.all_hold() ? "pass" : "fail"},
         {"violations", r.violations}};
}

inline void from_json(const nlohmann::json& j, BoundReport& r) {
    std::string fam = j.at("family").get<std::string>();
    r.family = fam == "m"   ? MatrixFamily::m
               : fam == "a" ? MatrixFamily::a
               : fam == "b" ? MatrixFamily::b
                            : MatrixFamily::c;
    r.row_max = j.at("rows").get<std::int64_t>();
    r.col_max = j.at("cols").get<std::int64_t>();
    r.checked = j.at("checked").get<std::int64_t>();
    r.violations = j.at("violations").get<std::vector<BoundViolation>>();
}

inline void to_json(nlohmann::json& j, const SearchHit& h) {
    j = {{"colors", h.colors}, {"residue", h.residue}, {"min_valuation", h.min_valuation}};
}

inline void from_json(const nlohmann::json& j, SearchHit& h) {
    h.colors = j.at("colors").get<std::int64_t>();
    h.residue = j.at("residue").get<std::int64_t>();
    h.min_valuation = j.at("min_valuation").get<Valuation>();
}

inline void to_json(nlohmann::json& j, const GfCheck& c) {
    to_json(j, c.report);
    j["id"] = c.id;
}

inline void from_json(const nlohmann::json& j, GfCheck& c) {
    from_json(j, c.report);
    c.id = j.at("id").get<std::string>();
}

}  // namespace penta5
