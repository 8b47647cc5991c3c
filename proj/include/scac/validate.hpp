#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "code.hpp"
#include "difference.hpp"

namespace scac {

enum class Condition {
    d_star_overlap,       ///< d*(I_j) and d*(I_k) intersect
    forbidden_difference, ///< 1 or L-1 lies in d*(I_j)
    d_plus_overlap,       ///< d+(I_j) and d+(I_k) intersect
};

inline const char* to_string(Condition c) {
    switch (c) {
        case Condition::d_star_overlap: return "d_star_overlap";
        case Condition::forbidden_difference: return "forbidden_difference";
        case Condition::d_plus_overlap: return "d_plus_overlap";
    }
    return "?";
}

struct Violation {
    Condition condition;
    std::size_t first = 0;
    /// Second codeword of the pair; equals `first` for single-codeword conditions.
    std::size_t second = 0;
    /// Smallest residue in the offending intersection.
    int witness = 0;

    friend bool operator==(const Violation&, const Violation&) = default;
};

enum class Mode { cac, scac };

inline const char* to_string(Mode m) { return m == Mode::cac ? "cac" : "scac"; }

struct ValidationReport {
    Mode mode = Mode::cac;
    bool is_cac = false;
    bool is_scac = false;
    /// Violations of the conditions checked in `mode`, in codeword-index order.
    std::vector<Violation> violations;
    /// Solitary gaps per codeword; filled only when the code is an SCAC.
    std::vector<int> solitary_gap_counts;
};

inline std::vector<DifferenceProfile> profiles(const Code& code) {
    std::vector<DifferenceProfile> out;
    out.reserve(code.size());
    for (const auto& cw : code.codewords()) out.push_back(difference_profile(cw));
    return out;
}

/// Union of d+(I) over the code.
inline ResidueSet shifted_union(const Code& code) {
    ResidueSet u(code.length());
    for (const auto& cw : code.codewords()) u |= difference_profile(cw).d_plus;
    return u;
}

namespace detail {

inline std::vector<Violation> pair_overlaps(const std::vector<DifferenceProfile>& ps, Condition cond) {
    std::vector<Violation> out;
    for (std::size_t j = 0; j < ps.size(); ++j)
        for (std::size_t k = j + 1; k < ps.size(); ++k) {
            const auto& a = cond == Condition::d_star_overlap ? ps[j].d_star : ps[j].d_plus;
            const auto& b = cond == Condition::d_star_overlap ? ps[k].d_star : ps[k].d_plus;
            if (auto w = a.first_common(b)) out.push_back({cond, j, k, *w});
        }
    return out;
}

inline std::vector<Violation> forbidden(const Code& code, const std::vector<DifferenceProfile>& ps) {
    std::vector<Violation> out;
    const int L = code.length();
    ResidueSet edge(L);
    if (L > 1) {
        edge.insert(1);
        edge.insert(L - 1);
    }
    for (std::size_t j = 0; j < ps.size(); ++j)
        if (auto w = ps[j].d_star.first_common(edge)) out.push_back({Condition::forbidden_difference, j, j, *w});
    return out;
}

}  // namespace detail

inline std::vector<Interval> solitary_gaps(const Code& code, std::size_t j);

/// Checks both CAC and SCAC membership. `mode` selects which conditions are
/// itemised in `violations`. SCAC membership uses the two-condition
/// characterisation: no codeword has 1 or L-1 as a difference, and the
/// shifted difference sets are pairwise disjoint.
inline ValidationReport validate(const Code& code, Mode mode) {
    const auto ps = profiles(code);
    ValidationReport r;
    r.mode = mode;
    auto cac = detail::pair_overlaps(ps, Condition::d_star_overlap);
    auto edge = detail::forbidden(code, ps);
    auto plus = detail::pair_overlaps(ps, Condition::d_plus_overlap);
    r.is_cac = cac.empty();
    r.is_scac = edge.empty() && plus.empty();
    if (mode == Mode::cac) {
        r.violations = std::move(cac);
    } else {
        r.violations = std::move(edge);
        r.violations.insert(r.violations.end(), plus.begin(), plus.end());
    }
    if (r.is_scac)
        for (std::size_t j = 0; j < code.size(); ++j)
            r.solitary_gap_counts.push_back(static_cast<int>(solitary_gaps(code, j).size()));
    return r;
}

inline ValidationReport check_cac(const Code& code) { return validate(code, Mode::cac); }
inline ValidationReport check_scac(const Code& code) { return validate(code, Mode::scac); }
inline bool is_cac(const Code& code) { return check_cac(code).is_cac; }
inline bool is_scac(const Code& code) { return check_scac(code).is_scac; }

/// Rough gaps of d+(I_j) that include no tube of the same roughness from the
/// union of all shifted difference sets. A tube T(x',y') is included in
/// G(x,y) when x <= x' and y' <= y. Flat gaps are never solitary.
inline std::vector<Interval> solitary_gaps(const Code& code, std::size_t j) {
    if (j >= code.size()) throw std::out_of_range("solitary_gaps: codeword index out of range");
    const auto own = decompose(difference_profile(code[j]).d_plus);
    const auto all = decompose(shifted_union(code));
    std::vector<Interval> out;
    for (const auto& g : own.gaps) {
        if (g.roughness == Roughness::flat) continue;
        bool covered = false;
        for (const auto& t : all.tubes)
            if (t.roughness == g.roughness && g.first <= t.first && t.last <= g.last) covered = true;
        if (!covered) out.push_back(g);
    }
    return out;
}

struct GapBoundReport {
    int length = 0;
    int dplus_total = 0;
    std::vector<int> solitary_counts;
    /// L >= 2 + lambda_j + sum |d+(I)| for every codeword j.
    bool holds = true;
};

inline GapBoundReport gap_bound(const Code& code) {
    GapBoundReport r;
    r.length = code.length();
    for (const auto& cw : code.codewords()) r.dplus_total += difference_profile(cw).d_plus.size();
    for (std::size_t j = 0; j < code.size(); ++j) {
        const int lambda = static_cast<int>(solitary_gaps(code, j).size());
        r.solitary_counts.push_back(lambda);
        if (code.length() < 2 + lambda + r.dplus_total) r.holds = false;
    }
    return r;
}

inline bool gap_bound_check(const Code& code) { return gap_bound(code).holds; }

struct LeaveReport {
    ResidueSet leave;
    bool tight = false;
    /// |leave| < 4 and {L/3, 2L/3} is not contained in the leave. For an
    /// equi-difference CAC of odd length this certifies optimality.
    bool certifies_optimal = false;
};

/// Residues of Z_L covered by no d(I).
inline LeaveReport leave(const Code& code) {
    ResidueSet covered(code.length());
    for (const auto& cw : code.codewords()) covered |= difference_profile(cw).d;
    LeaveReport r;
    r.leave = covered.complement();
    r.tight = r.leave.empty();
    const int L = code.length();
    const bool thirds_in_leave = L % 3 == 0 && r.leave.contains(L / 3) && r.leave.contains(2 * L / 3);
    r.certifies_optimal = r.leave.size() < 4 && !thirds_in_leave;
    return r;
}

}  // namespace scac
