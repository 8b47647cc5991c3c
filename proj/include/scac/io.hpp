#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "channel.hpp"
#include "code.hpp"
#include "construct.hpp"
#include "search.hpp"
#include "validate.hpp"

namespace scac::io {

using json = nlohmann::ordered_json;

/// {"L": 28, "w": 3, "codewords": [[0,2,4],[0,7,14],[0,9,18]]}
inline json to_json(const Code& code) {
    json cws = json::array();
    for (const auto& cw : code.codewords()) cws.push_back(cw.elements());
    return {{"L", code.length()}, {"w", code.weight()}, {"codewords", std::move(cws)}};
}

inline Code code_from_json(const json& j) {
    try {
        if (!j.is_object()) throw std::invalid_argument("code JSON must be an object");
        const int L = j.at("L").get<int>();
        const auto& list = j.at("codewords");
        if (!list.is_array()) throw std::invalid_argument("\"codewords\" must be an array");
        std::vector<Codeword> cws;
        for (const auto& e : list) cws.emplace_back(L, e.get<std::vector<int>>());
        int w = 0;
        if (j.contains("w"))
            w = j.at("w").get<int>();
        else if (!cws.empty())
            w = cws.front().weight();
        else
            throw std::invalid_argument("\"w\" is required for an empty code");
        return {L, w, std::move(cws)};
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed code JSON: ") + e.what());
    }
}

inline Code parse_code(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
    return code_from_json(j);
}

inline json to_json(const ResidueSet& s) { return s.to_vector(); }

inline json to_json(const Violation& v) {
    json j{{"condition", to_string(v.condition)}, {"codeword", v.first}};
    if (v.second != v.first) j["other"] = v.second;
    j["witness"] = v.witness;
    return j;
}

inline json to_json(const ValidationReport& r) {
    json v = json::array();
    for (const auto& x : r.violations) v.push_back(to_json(x));
    json j{{"mode", to_string(r.mode)}, {"is_cac", r.is_cac}, {"is_scac", r.is_scac}, {"violations", std::move(v)}};
    if (r.is_scac) j["solitary_gap_counts"] = r.solitary_gap_counts;
    return j;
}

inline json to_json(const BoundResult& r) {
    json j{{"quantity", to_string(r.quantity)}, {"L", r.length}, {"kind", to_string(r.kind)}};
    if (r.applicable) {
        if (r.kind == BoundKind::exact)
            j["value"] = r.lo;
        else if (r.kind == BoundKind::upper)
            j["upper"] = r.hi;
        else if (r.kind == BoundKind::lower)
            j["lower"] = r.lo;
        else {
            j["lower"] = r.lo;
            j["upper"] = r.hi;
        }
    }
    j["provenance"] = r.provenance;
    j["applicable"] = r.applicable;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline json to_json(const Bracket& b) {
    json j{{"quantity", to_string(b.quantity)}, {"L", b.length}};
    j["lower"] = b.lo ? json(*b.lo) : json(nullptr);
    j["upper"] = b.hi ? json(*b.hi) : json(nullptr);
    j["exact"] = b.exact();
    j["provenance"] = b.provenance;
    j["consistent"] = b.consistent;
    return j;
}

inline json to_json(const SearchOutcome& s, bool with_stats) {
    json j{{"mode", to_string(s.mode)},  {"L", s.length},          {"w", s.weight},
           {"optimum", s.optimum},      {"proven_optimal", s.proven_optimal}, {"witness", to_json(s.witness)}};
    if (with_stats) j["nodes_explored"] = s.nodes_explored;
    return j;
}

inline json offsets_json(const OffsetAssignment& a) {
    json o = json::array();
    for (std::size_t i = 0; i < a.twice_offsets.size(); ++i) o.push_back(a.slots(i));
    return o;
}

inline json to_json(const SimulationReport& r) {
    json log = json::array();
    for (const auto& c : r.collisions)
        log.push_back({{"victim", c.victim},
                       {"victim_slot", c.victim_slot},
                       {"interferer", c.interferer},
                       {"interferer_slot", c.interferer_slot},
                       {"overlap", to_string(c.overlap)}});
    return {{"successes", r.successes}, {"collisions", std::move(log)}};
}

inline json to_json(const WorstCase& w) {
    return {{"victim", w.victim}, {"sigma", w.sigma}, {"exact", w.exact}, {"offsets", offsets_json(w.witness)}};
}

inline json to_json(const CycleGraph& g) {
    json cycles = json::array();
    for (const auto& c : g.cycles) cycles.push_back(c);
    return {{"L", g.length}, {"cycles", std::move(cycles)}};
}

inline json to_json(const EquiWitness& w) {
    return {{"L", w.length},
            {"odd_cycles", w.odd_cycles},
            {"m_e", w.value},
            {"witness", to_json(w.code)},
            {"leave", to_json(w.leave.leave)},
            {"tight", w.leave.tight},
            {"certifies_optimal", w.leave.certifies_optimal}};
}

}  // namespace scac::io
