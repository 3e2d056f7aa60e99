#pragma once

// JSON and CSV serialization. Rationals always travel as "p/q" strings.

#include "urodlab/brst.hpp"
#include "urodlab/decomp.hpp"
#include "urodlab/fusion.hpp"

#include <json.hpp>

#include <string>

namespace urodlab {

// Keys come out sorted, which keeps dumps byte-stable.
using Json = nlohmann::json;

inline Json rational_json(const Rational& r) { return to_string(r); }

inline Json weight_json(const Weight& w) {
    Json a = Json::array();
    for (const auto& c : w.coeffs) a.push_back(rational_json(c));
    return a;
}

inline Json head_json(const QSeries& s, std::size_t n = 10) {
    Json a = Json::array();
    for (const auto& c : s.head(n)) a.push_back(c);
    return a;
}

inline Json to_json(const DecompReport& r) {
    Json j;
    j["theorem_id"] = r.theorem_id;
    j["inputs"] = r.inputs;
    j["order_checked"] = rational_json(r.order_checked);
    j["equal"] = r.equal;
    j["first_mismatch"] = r.first_mismatch ? Json(rational_json(*r.first_mismatch)) : Json(nullptr);
    j["lhs_head"] = head_json(r.lhs);
    j["rhs_head"] = head_json(r.rhs);
    j["details"] = r.details;
    if (!r.classes.empty()) {
        long bad = 0;
        for (const auto& c : r.classes) bad += !c.equal;
        j["classes_checked"] = static_cast<long>(r.classes.size());
        j["classes_failed"] = bad;
    }
    return j;
}

inline Json to_json(const CcSuiteReport& r) {
    Json j;
    j["sys"] = r.sys;
    j["grading"] = r.grading;
    j["all_pass"] = r.all_pass;
    Json s = Json::array();
    for (const auto& x : r.samples)
        s.push_back({{"t", rational_json(x.t)}, {"lhs", rational_json(x.lhs)}, {"rhs", rational_json(x.rhs)}, {"pass", x.pass}});
    j["samples"] = s;
    return j;
}

inline Json to_json(const FusionRing& R) {
    Json j;
    j["level"] = R.level;
    Json basis = Json::array();
    for (const auto& w : R.basis) basis.push_back(weight_json(w));
    j["basis"] = basis;
    Json triples = Json::array();
    for (std::size_t a = 0; a < R.size(); ++a)
        for (std::size_t b = 0; b < R.size(); ++b)
            for (std::size_t c = 0; c < R.size(); ++c)
                if (R.n[a][b][c] != 0) triples.push_back({{"a", a}, {"b", b}, {"c", c}, {"N", R.n[a][b][c]}});
    j["triples"] = triples;
    if (R.transported_t) j["t"] = rational_json(*R.transported_t);
    return j;
}

inline Json to_json(const RingCheck& c) {
    return {{"commutative", c.commutative},
            {"associative", c.associative},
            {"unital", c.unital},
            {"graded", c.graded},
            {"triples_checked", c.triples_checked},
            {"ok", c.ok()}};
}

inline Json to_json(const IntegralityReport& r) {
    Json zeros = Json::array();
    for (const auto& z : r.zeros) zeros.push_back(weight_json(z));
    return {{"sys", r.sys},
            {"n", r.n},
            {"radius", rational_json(r.radius)},
            {"scanned", r.scanned},
            {"all_integer", r.all_integer},
            {"all_nonnegative", r.all_nonnegative},
            {"zeros", zeros},
            {"pass", r.pass()}};
}

inline Json to_json(const brst::BrstSummary& s) {
    Json blocks = Json::array();
    for (const auto& b : s.blocks) blocks.push_back({{"w", b.w}, {"i", b.i}, {"dimC", b.dim_c}, {"dimH", b.dim_h}});
    return {{"k", rational_json(s.k)},
            {"t", rational_json(s.t)},
            {"N", s.n},
            {"blocks", blocks},
            {"checks",
             {{"nilpotent", s.nilpotent},
              {"intertwining", s.intertwining},
              {"virasoro_c", rational_json(s.virasoro_c)},
              {"virasoro_brackets", s.virasoro_ok},
              {"h_nonzero_degree_vanishes", s.h_nonzero_degree_vanishes},
              {"euler", s.euler_ok},
              {"phi_triangular", s.phi_triangular},
              {"ahat_closed", s.ahat_closed}}}};
}

inline Json to_json(const brst::VirasoroReport& v) {
    return {{"k", rational_json(v.k)},
            {"c", rational_json(v.c)},
            {"brackets_ok", v.brackets_ok},
            {"l0_matches_h_urod", v.l0_matches_h_urod},
            {"states_checked", v.states_checked},
            {"failures", v.failures}};
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace urodlab
