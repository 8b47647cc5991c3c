#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bound_result.hpp"
#include "construct.hpp"
#include "number_theory.hpp"

namespace scac {

// Closed-form values and bounds for weight 3. Every function evaluates one
// statement; the *_statements functions collect every statement whose
// hypotheses mention L, including ones that come back inapplicable, so that
// overlapping results can be cross-checked.

/// Upper bound on M_S(L,3) for even L >= 18, by L mod 8 and L mod 24.
inline BoundResult ms_upper(std::int64_t L) {
    const auto q = Quantity::m_strong;
    const char* id = "ms-upper";
    if (L % 2 != 0 || L < 18)
        return BoundResult::inapplicable(q, L, BoundKind::upper, id, "requires even L >= 18");
    if (L % 8 == 0) return BoundResult::ratio(q, L, BoundKind::upper, L, 8, id);
    if (L % 8 == 4) return BoundResult::ratio(q, L, BoundKind::upper, L - 4, 8, id);
    switch (L % 24) {
        case 6: return BoundResult::ratio(q, L, BoundKind::upper, L + 2, 8, id);
        case 2:
        case 10:
        case 18: return BoundResult::ratio(q, L, BoundKind::upper, L - 2, 8, id);
        default: return BoundResult::ratio(q, L, BoundKind::upper, L - 6, 8, id);  // 14, 22
    }
}

/// The two intermediate bounds the main upper bound is assembled from:
/// the L mod 12 counting bound and the sharper bound for L = 12 mod 24.
inline std::vector<BoundResult> ms_upper_lemmas(std::int64_t L) {
    const auto q = Quantity::m_strong;
    std::vector<BoundResult> out;
    if (L % 2 != 0 || L < 18) return out;
    const char* id = "ms-upper-mod12";
    switch (L % 12) {
        case 0: out.push_back(BoundResult::make(q, L, BoundKind::upper, (L + 4) / 8, id)); break;
        case 4:
        case 6:
        case 8: out.push_back(BoundResult::make(q, L, BoundKind::upper, (L + 2) / 8, id)); break;
        default: out.push_back(BoundResult::make(q, L, BoundKind::upper, L / 8, id)); break;
    }
    if (L % 24 == 12) out.push_back(BoundResult::ratio(q, L, BoundKind::upper, L - 4, 8, "ms-upper-12mod24"));
    return out;
}

/// Earlier bound: L = 3^q 7^r l with l even and coprime to 21.
inline BoundResult ms_upper_legacy(std::int64_t L) {
    const auto q = Quantity::m_strong;
    const char* id = "ms-upper-legacy";
    if (L < 18) return BoundResult::inapplicable(q, L, BoundKind::upper, id, "requires L >= 18");
    if (L % 2 != 0) return BoundResult::inapplicable(q, L, BoundKind::upper, id, "cofactor l would be odd");
    int threes = 0, sevens = 0;
    for (auto n = L; n % 3 == 0; n /= 3) ++threes;
    for (auto n = L; n % 7 == 0; n /= 7) ++sevens;
    std::int64_t v;
    if (threes == 0 && sevens == 0)
        v = (L - 2) / 6;
    else if (sevens == 0)
        v = L / 6;
    else if (threes == 0)
        v = (L - 1) / 6;
    else
        v = (L + 1) / 6;
    return BoundResult::make(q, L, BoundKind::upper, v, id);
}

namespace detail {

/// Additive constant c in (7L + c)/64 of the L = 4t table, selected by t.
inline std::int64_t four_t_offset(std::int64_t t) {
    const auto m8 = t % 8, m24 = t % 24;
    if (m8 == 0) return 0;
    if (m8 == 1) return 8;
    if (m24 == 2 || m24 == 10) return -48;
    if (m24 == 3) return 24;
    if (m24 == 4 || m24 == 20) return -32;
    if (m24 == 5 || m24 == 13) return -24;
    if (m8 == 6) return -16;
    if (m8 == 7) return -8;
    if (m24 == 11 || m24 == 19) return -40;
    if (m24 == 12) return 32;
    if (m24 == 18) return 16;
    return 40;  // 21
}

inline bool is_power_of_two(std::int64_t x) { return x > 0 && (x & (x - 1)) == 0; }

inline int log2_exact(std::int64_t x) {
    int k = 0;
    while (x > 1) {
        x >>= 1;
        ++k;
    }
    return k;
}

/// L = 2^(2t) + 1, t >= 1
inline bool is_four_power_plus_one(std::int64_t L) {
    return L >= 5 && is_power_of_two(L - 1) && log2_exact(L - 1) % 2 == 0;
}

/// L = 2^(2^t) - 1, t >= 2
inline bool is_fermat_minus_two(std::int64_t L) {
    if (L < 15 || !is_power_of_two(L + 1)) return false;
    const int k = log2_exact(L + 1);
    return is_power_of_two(k) && k >= 4;
}

/// L = 2^(2t-1) + sign*2^t + 1 for some t >= t_min.
inline bool is_mixed_power_form(std::int64_t L, int sign, int t_min) {
    for (int t = t_min; 2 * t - 1 < 62; ++t) {
        const std::int64_t v = (std::int64_t{1} << (2 * t - 1)) + sign * (std::int64_t{1} << t) + 1;
        if (v == L) return true;
        if (v > L) return false;
    }
    return false;
}

}  // namespace detail

/// The L = 4t table for M(L,3), evaluated verbatim as (7L + c)/64.
inline BoundResult m_four_t_table(std::int64_t L) {
    const auto q = Quantity::m;
    if (L < 4 || L % 4 != 0) return BoundResult::inapplicable(q, L, BoundKind::exact, "m-4t-table", "requires L = 4t");
    return BoundResult::ratio(q, L, BoundKind::exact, 7 * L + detail::four_t_offset(L / 4), 64, "m-4t-table");
}

/// Every statement about M(L,3) or M^e(L,3) whose hypotheses involve L.
inline std::vector<BoundResult> m_statements(std::int64_t L) {
    const auto q = Quantity::m;
    std::vector<BoundResult> out;
    if (L < 3) return out;
    if (L % 4 == 2) out.push_back(BoundResult::ratio(q, L, BoundKind::exact, L - 2, 4, "m-exact-2mod4"));
    if (L % 4 == 0) out.push_back(m_four_t_table(L));
    if (detail::is_four_power_plus_one(L))
        out.push_back(BoundResult::ratio(q, L, BoundKind::exact, L - 1, 4, "m-exact-2^(2t)+1"));
    if (detail::is_fermat_minus_two(L))
        out.push_back(BoundResult::ratio(q, L, BoundKind::exact, L + 1, 4, "m-exact-2^(2^t)-1"));
    if (detail::is_mixed_power_form(L, -1, 2))
        out.push_back(BoundResult::ratio(q, L, BoundKind::exact, L - 1, 4, "m-exact-2^(2t-1)-2^t+1"));
    if (detail::is_mixed_power_form(L, +1, 1))
        out.push_back(BoundResult::ratio(q, L, BoundKind::exact, L - 1, 4, "m-exact-2^(2t-1)+2^t+1"));
    if (L % 2 == 1 && L > 3) {
        auto r = classify_odd_length(static_cast<int>(L));
        if (r.applicable) out.push_back(r);
    }
    if (L % 2 == 1) {
        const auto w = m_e_with_witness(static_cast<int>(L));
        out.push_back(BoundResult::make(Quantity::m_equi, L, BoundKind::exact, w.value, "me-matching"));
        out.push_back(BoundResult::make(q, L, BoundKind::lower, w.value, "me-matching"));
        if (w.leave.certifies_optimal)
            out.push_back(BoundResult::make(q, L, BoundKind::exact, w.value, "m-exact-small-leave"));
    }
    return out;
}

/// Exact M(L,3) from the first applicable exact statement.
inline BoundResult m_cac_exact(std::int64_t L) {
    std::string flagged;
    for (const auto& r : m_statements(L)) {
        if (r.quantity != Quantity::m || r.kind != BoundKind::exact) continue;
        if (r.applicable) return r;
        flagged += (flagged.empty() ? "" : "; ") + r.provenance + ": " + r.note;
    }
    return BoundResult::inapplicable(Quantity::m, L, BoundKind::exact, "m-exact",
                                     flagged.empty() ? "no closed form applies" : flagged);
}

/// Every statement about M_S(L,3) for even L.
inline std::vector<BoundResult> ms_statements(std::int64_t L) {
    const auto q = Quantity::m_strong;
    std::vector<BoundResult> out;
    if (L % 2 != 0 || L < 2) return out;
    if (L < 18) {
        if (L >= 6)
            out.push_back(BoundResult::make(q, L, BoundKind::exact, 1, "ms-small-length"));
        else
            out.push_back(BoundResult::inapplicable(q, L, BoundKind::exact, "ms-small-length", "requires L >= 6"));
        return out;
    }
    out.push_back(ms_upper(L));
    for (auto& r : ms_upper_lemmas(L)) out.push_back(r);
    out.push_back(ms_upper_legacy(L));

    // Doubling: M_S(L,3) >= M(L/2,3).
    const auto half = L / 2;
    if (auto m = m_cac_exact(half); m.applicable)
        out.push_back(BoundResult::make(q, L, BoundKind::lower, m.lo, "ms-doubling-lower"));
    if (half % 2 == 1) {
        const auto w = m_e_with_witness(static_cast<int>(half));
        out.push_back(BoundResult::make(q, L, BoundKind::lower, w.value, "ms-doubling-equi-lower"));
    }

    if (L % 8 == 4) out.push_back(BoundResult::ratio(q, L, BoundKind::exact, L - 4, 8, "ms-exact-4mod8"));
    if (detail::is_four_power_plus_one(half) && half >= 17)
        out.push_back(BoundResult::ratio(q, L, BoundKind::exact, L - 2, 8, "ms-exact-2^(2t+1)+2"));
    if (detail::is_mixed_power_form(half, -1, 2))
        out.push_back(BoundResult::ratio(q, L, BoundKind::exact, L - 2, 8, "ms-exact-2^(2t)-2^(t+1)+2"));
    if (detail::is_mixed_power_form(half, +1, 1))
        out.push_back(BoundResult::ratio(q, L, BoundKind::exact, L - 2, 8, "ms-exact-2^(2t)+2^(t+1)+2"));
    if (detail::is_fermat_minus_two(half))
        out.push_back(BoundResult::ratio(q, L, BoundKind::exact, L + 2, 8, "ms-exact-2^(2^t+1)-2"));

    if (L % 8 == 0 && L / 8 >= 3) {
        out.push_back(BoundResult::ratio(q, L, BoundKind::upper, L, 8, "ms-8t-upper"));
        out.push_back(
            BoundResult::ratio(q, L, BoundKind::lower, 7 * L + detail::four_t_offset(L / 8), 64, "ms-8t-table-lower"));
    }

    if (half % 2 == 1 && half > 3) {
        const auto odd = classify_odd_length(static_cast<int>(half));
        if (odd.applicable) {
            const auto& p = odd.provenance;
            const bool six = L % 6 == 0, eighteen = L % 18 == 0, fiftyfour = L % 54 == 0;
            auto add = [&](std::int64_t num, const char* id) {
                out.push_back(BoundResult::ratio(q, L, BoundKind::exact, num, 8, id));
            };
            if (!six && p == "m-exact-odd-(i)") add(L - 2, "ms-exact-half-odd-(i)");
            if (!six && p == "m-exact-odd-(ii)") add(L - 6, "ms-exact-half-odd-(ii)");
            if (six && !eighteen && p == "m-exact-odd-(iii)") add(L + 2, "ms-exact-half-odd-(iii)");
            if (six && !eighteen && p == "m-exact-odd-(iv)") add(L - 2, "ms-exact-half-odd-(iv)");
            if (eighteen && !fiftyfour && p == "m-exact-odd-(v)") add(L - 2, "ms-exact-half-odd-(v)");
        }
    }
    return out;
}

/// Sharpest interval implied by a list of statements.
struct Bracket {
    Quantity quantity = Quantity::m;
    std::int64_t length = 0;
    std::optional<std::int64_t> lo;
    std::optional<std::int64_t> hi;
    /// Applicable statements that attain `lo` or `hi`.
    std::vector<std::string> provenance;
    std::vector<BoundResult> statements;
    /// lo <= hi and all applicable exact values agree.
    bool consistent = true;

    bool exact() const { return lo && hi && *lo == *hi; }
};

inline Bracket make_bracket(Quantity q, std::int64_t L, std::vector<BoundResult> statements) {
    Bracket b{q, L, {}, {}, {}, {}, true};
    std::optional<std::int64_t> exact_value;
    for (const auto& r : statements) {
        if (!r.applicable || r.quantity != q) continue;
        if (r.kind == BoundKind::exact) {
            if (exact_value && *exact_value != r.lo) b.consistent = false;
            exact_value = r.lo;
        }
        if (r.kind != BoundKind::upper) b.lo = b.lo ? std::max(*b.lo, r.lo) : r.lo;
        if (r.kind != BoundKind::lower) b.hi = b.hi ? std::min(*b.hi, r.hi) : r.hi;
    }
    if (b.lo && b.hi && *b.lo > *b.hi) b.consistent = false;
    for (const auto& r : statements) {
        if (!r.applicable || r.quantity != q) continue;
        const bool at_lo = r.kind != BoundKind::upper && b.lo && r.lo == *b.lo;
        const bool at_hi = r.kind != BoundKind::lower && b.hi && r.hi == *b.hi;
        if ((at_lo || at_hi) &&
            std::find(b.provenance.begin(), b.provenance.end(), r.provenance) == b.provenance.end())
            b.provenance.push_back(r.provenance);
    }
    b.statements = std::move(statements);
    return b;
}

inline Bracket ms_bracket(std::int64_t L) { return make_bracket(Quantity::m_strong, L, ms_statements(L)); }
inline Bracket m_bracket(std::int64_t L) { return make_bracket(Quantity::m, L, m_statements(L)); }

/// M_S(L,3) for even L: exact when the lower and upper statements meet,
/// otherwise a bracket. Inapplicable when nothing is known.
inline BoundResult ms_exact(std::int64_t L) {
    const auto q = Quantity::m_strong;
    const auto b = ms_bracket(L);
    std::string prov;
    for (const auto& p : b.provenance) prov += (prov.empty() ? "" : "+") + p;
    if (b.exact()) return BoundResult::make(q, L, BoundKind::exact, *b.lo, prov);
    if (b.lo && b.hi) {
        BoundResult r{q, L, BoundKind::bracket, *b.lo, *b.hi, prov, true, {}};
        return r;
    }
    if (b.hi) return BoundResult::make(q, L, BoundKind::upper, *b.hi, prov);
    if (b.lo) return BoundResult::make(q, L, BoundKind::lower, *b.lo, prov);
    return BoundResult::inapplicable(q, L, BoundKind::exact, "ms-exact", "no statement applies");
}

}  // namespace scac
