#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>

#include "codeword.hpp"
#include "difference.hpp"

namespace scac {

/// Weight-3 codeword types. E1..N2 are the equi-difference codewords whose
/// shifted difference set has fewer than 8 elements when L is even:
///   E1: g = L/4, E2: g = L/3, N1: g = (L-1)/3, N2: g = (L+1)/3.
enum class CodewordKind { e1, e2, n1, n2, equi_generic, non_equi, unsupported };

inline const char* to_string(CodewordKind k) {
    switch (k) {
        case CodewordKind::e1: return "E1";
        case CodewordKind::e2: return "E2";
        case CodewordKind::n1: return "N1";
        case CodewordKind::n2: return "N2";
        case CodewordKind::equi_generic: return "EquiGeneric";
        case CodewordKind::non_equi: return "NonEqui";
        case CodewordKind::unsupported: return "Unsupported";
    }
    return "?";
}

struct CodewordClass {
    CodewordKind kind = CodewordKind::unsupported;
    /// Generator in normal form min(g, L-g); 0 for non-equi-difference codewords.
    int generator = 0;
    /// Cyclic gaps between consecutive elements, sorted: q_low <= q_mid <= q_up,
    /// q_low + q_mid + q_up = L. Strict for non-equi-difference codewords.
    int q_low = 0, q_mid = 0, q_up = 0;
    /// {1, L-1} and d* are disjoint, i.e. the codeword may appear in an SCAC.
    bool admissible = false;
    bool dispersive = false;
    bool exceptional = false;
    int d_star_size = 0;
    int dplus_size = 0;
    /// Closed-form |d+| for admissible codewords of even length. Empty where
    /// the theory gives only the lower bound 10.
    std::optional<int> predicted_dplus_size;
    /// Lower bound on |d+| from the same theory; 0 when none applies.
    int dplus_lower_bound = 0;

    bool is_equi() const { return kind != CodewordKind::non_equi && kind != CodewordKind::unsupported; }
};

namespace detail {

/// x and x+1 (mod L) both in d(I) for some x.
inline bool has_consecutive(const ResidueSet& d) {
    const int L = d.length();
    bool found = false;
    d.for_each([&](int x) {
        if (d.contains((x + 1) % L)) found = true;
    });
    return found;
}

}  // namespace detail

inline CodewordClass classify(const Codeword& cw) {
    CodewordClass c;
    const auto prof = difference_profile(cw);
    const int L = cw.length();
    c.d_star_size = prof.d_star.size();
    c.dplus_size = prof.d_plus.size();
    c.admissible = !prof.d_star.contains(1 % L) && !prof.d_star.contains(L - 1);
    c.dispersive = !detail::has_consecutive(prof.d);
    if (cw.weight() != 3) return c;

    c.exceptional = c.d_star_size < 4;
    std::array<int, 3> q{cw[1] - cw[0], cw[2] - cw[1], L - (cw[2] - cw[0])};
    std::array<int, 3> sorted = q;
    std::sort(sorted.begin(), sorted.end());
    c.q_low = sorted[0];
    c.q_mid = sorted[1];
    c.q_up = sorted[2];

    const bool equi = c.q_low == c.q_mid || c.q_mid == c.q_up;
    const bool even = L % 2 == 0;
    const bool predict = even && c.admissible;

    if (equi) {
        // Two equal gaps g, g, L-2g: the repeated gap is the generator.
        const int g = c.q_low == c.q_mid ? c.q_low : c.q_up;
        c.generator = std::min(g, L - g);
        if (3 * c.generator == L)
            c.kind = CodewordKind::e2;
        else if (4 * c.generator == L)
            c.kind = CodewordKind::e1;
        else if (3 * c.generator == L - 1)
            c.kind = CodewordKind::n1;
        else if (3 * c.generator == L + 1)
            c.kind = CodewordKind::n2;
        else
            c.kind = CodewordKind::equi_generic;
        if (predict) {
            switch (c.kind) {
                case CodewordKind::e2: c.predicted_dplus_size = 4; break;
                case CodewordKind::e1:
                case CodewordKind::n1:
                case CodewordKind::n2: c.predicted_dplus_size = 6; break;
                default: c.predicted_dplus_size = 8; break;
            }
            c.dplus_lower_bound = *c.predicted_dplus_size;
        }
        return c;
    }

    c.kind = CodewordKind::non_equi;
    if (predict) {
        bool eight;
        if (2 * c.q_up < L)
            eight = c.q_low + 1 == c.q_mid && c.q_mid + 1 == c.q_up && 3 * c.q_mid == L;
        else
            eight = c.q_mid == c.q_low + 1 && 4 * c.q_mid == L + 2 && 2 * c.q_up == L;
        if (eight) {
            c.predicted_dplus_size = 8;
            c.dplus_lower_bound = 8;
        } else {
            c.dplus_lower_bound = 10;
        }
    }
    return c;
}

inline std::string describe(const CodewordClass& c) {
    std::string s = to_string(c.kind);
    if (c.kind == CodewordKind::non_equi)
        s += "(" + std::to_string(c.q_low) + "," + std::to_string(c.q_mid) + "," + std::to_string(c.q_up) + ")";
    else if (c.kind == CodewordKind::equi_generic)
        s += "(" + std::to_string(c.generator) + ")";
    return s;
}

}  // namespace scac
