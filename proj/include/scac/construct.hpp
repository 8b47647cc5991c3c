#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bound_result.hpp"
#include "code.hpp"
#include "number_theory.hpp"
#include "validate.hpp"

namespace scac {

/// {2I : I in C} viewed in Z_{2L}. A CAC of length L maps to an SCAC of
/// length 2L with the same number of codewords.
inline Code double_code(const Code& code) {
    if (!is_cac(code)) throw std::invalid_argument("double_code: input is not a CAC");
    std::vector<Codeword> out;
    out.reserve(code.size());
    for (const auto& cw : code.codewords()) out.push_back(cw.scaled_into(2));
    return {code.length() * 2, code.weight(), std::move(out)};
}

/// min(x mod L, L - x mod L)
inline int fold(std::int64_t x, int L) {
    auto r = static_cast<int>(((x % L) + L) % L);
    return std::min(r, L - r);
}

/// G(L) for odd L: vertices 1..(L-1)/2, a joined to fold(2a). Every vertex has
/// exactly one successor and one predecessor, so the graph is a disjoint union
/// of cycles. Each cycle is listed from its smallest vertex in successor order.
struct CycleGraph {
    int length = 0;
    std::vector<std::vector<int>> cycles;
};

inline CycleGraph build_graph(int L) {
    if (L < 3 || L % 2 == 0) throw std::invalid_argument("build_graph: L must be odd and at least 3");
    const int n = (L - 1) / 2;
    CycleGraph g{L, {}};
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v) {
        if (seen[v]) continue;
        std::vector<int> cyc;
        for (int u = v; !seen[u]; u = fold(2LL * u, L)) {
            seen[u] = 1;
            cyc.push_back(u);
        }
        g.cycles.push_back(std::move(cyc));
    }
    return g;
}

/// TSV rows `L<TAB>cycle_index<TAB>v1<TAB>v2...`
inline std::string graph_tsv(const CycleGraph& g) {
    std::string s;
    for (std::size_t i = 0; i < g.cycles.size(); ++i) {
        s += std::to_string(g.length) + '\t' + std::to_string(i);
        for (int v : g.cycles[i]) s += '\t' + std::to_string(v);
        s += '\n';
    }
    return s;
}

/// Closed form of N_odd(p) for an odd prime p in terms of e_p.
inline int n_odd_prime_formula(std::int64_t p) {
    if (p < 3 || !nt::is_prime(p)) throw std::invalid_argument("n_odd_prime_formula: p must be an odd prime");
    const auto e = nt::orders(p).e;
    const auto r = p % 8;
    if (r == 7 || (r == 1 && e % 2 == 1)) return static_cast<int>((p - 1) / (2 * e));
    if (r == 3 || (r == 1 && (e - 2) % 4 == 0)) return static_cast<int>((p - 1) / e);
    return 0;
}

inline int count_odd_cycles(const CycleGraph& g) {
    int n = 0;
    for (const auto& c : g.cycles) n += static_cast<int>(c.size() % 2);
    return n;
}

/// Number of odd cycles of G(L). For prime L the count is cross-checked
/// against the closed form; a disagreement throws std::logic_error.
inline int n_odd(int L) {
    const int count = count_odd_cycles(build_graph(L));
    if (nt::is_prime(L) && n_odd_prime_formula(L) != count)
        throw std::logic_error("n_odd: enumeration disagrees with prime formula at L=" + std::to_string(L));
    return count;
}

/// Equi-difference code built from a maximum matching of G(L).
struct EquiWitness {
    int length = 0;
    int odd_cycles = 0;
    /// ((L-1)/2 - N_odd(L))/2 + [3 | L]
    int value = 0;
    Code code;
    LeaveReport leave;
};

/// Each matched edge (a, fold(2a)) becomes the codeword {0, a, 2a}; the loop
/// at L/3 (present iff 3 | L) becomes {0, L/3, 2L/3}. Within an odd cycle the
/// smallest vertex is the one left unmatched, which gives the lexicographically
/// least leave.
inline EquiWitness m_e_with_witness(int L) {
    const auto g = build_graph(L);
    EquiWitness w;
    w.length = L;
    w.odd_cycles = count_odd_cycles(g);
    w.value = ((L - 1) / 2 - w.odd_cycles) / 2 + (L % 3 == 0 ? 1 : 0);

    std::vector<Codeword> cws;
    for (const auto& cyc : g.cycles) {
        const auto len = cyc.size();
        if (len == 1) {
            // Only L/3 is fixed by the doubling fold.
            cws.push_back(equi_codeword(cyc[0], 3, L));
            continue;
        }
        // Edge cyc[i] -> cyc[i+1]; odd cycles skip cyc[0].
        for (std::size_t i = len % 2; i + 1 < len; i += 2) cws.push_back(equi_codeword(cyc[i], 3, L));
    }
    w.code = Code(L, 3, std::move(cws));
    w.leave = leave(w.code);
    return w;
}

namespace detail {

struct OddFactors {
    nt::Factorization all;
    std::int64_t three_exponent = 0;
    nt::Factorization rest;  // prime factors > 3
};

inline OddFactors odd_factors(std::int64_t L) {
    OddFactors f{nt::factorize(L), 0, {}};
    for (auto [p, r] : f.all) {
        if (p == 3)
            f.three_exponent = r;
        else
            f.rest.emplace_back(p, r);
    }
    return f;
}

/// Factors among `rest` that are not even-cycle primes.
inline nt::Factorization exceptions(const nt::Factorization& rest) {
    nt::Factorization out;
    for (auto pr : rest)
        if (!nt::even_cycle_prime(pr.first)) out.push_back(pr);
    return out;
}

}  // namespace detail

/// Existence of a tight equi-difference CAC(L,3) for odd L:
///   (a) 3 does not divide L and every prime factor is an even-cycle prime, or
///   (b) 3 || L and every other prime factor is an even-cycle prime.
inline bool tight_exists(int L) {
    if (L < 3 || L % 2 == 0) throw std::invalid_argument("tight_exists: L must be odd and at least 3");
    const auto f = detail::odd_factors(L);
    if (!detail::exceptions(f.rest).empty()) return false;
    return f.three_exponent == 0 || f.three_exponent == 1;
}

/// Sufficient conditions for an equi-difference CAC(L,3) whose leave has size
/// 2 and differs from {L/3, 2L/3}. Returns the matching case letter.
inline std::optional<char> leave2_case(int L) {
    if (L < 3 || L % 2 == 0) throw std::invalid_argument("leave2_exists: L must be odd and at least 3");
    const auto f = detail::odd_factors(L);
    const auto ex = detail::exceptions(f.rest);
    if (f.three_exponent == 0 && ex.size() == 1) {
        auto [p, r] = ex.front();
        if (r == 1 && nt::orders(p).c == (p - 1) / 2) return 'a';
    }
    if (f.three_exponent == 1 && ex.size() == 1) {
        auto [p, r] = ex.front();
        const auto o = nt::orders(p);
        if (r == 1 && o.c == (p - 1) / 2 && o.e == (p - 1) / 2) return 'b';
    }
    if (f.three_exponent == 2 && ex.empty()) return 'c';
    return std::nullopt;
}

inline bool leave2_exists(int L) { return leave2_case(L).has_value(); }

/// Exact M(L,3) = M^e(L,3) for odd L > 3 from the prime factorisation.
///
///   3 does not divide L:
///     (i)   every prime factor is 5 mod 8                  -> (L-1)/4
///     (ii)  one safe prime factor p, p^2 not dividing L,
///           every other prime factor 5 mod 8               -> (L-3)/4
///   3 || L:
///     (iii) every prime factor > 3 is 5 mod 8              -> (L+1)/4
///     (iv)  one safe prime factor p = 7 mod 8, p^2 not
///           dividing L, every other factor > 3 is 5 mod 8  -> (L-1)/4
///   9 || L:
///     (v)   every prime factor > 3 is 5 mod 8              -> (L-1)/4
///
/// The safe prime in (ii)/(iv) is the single factor that is not 5 mod 8; the
/// safe prime 5 itself counts towards "every other factor".
inline BoundResult classify_odd_length(int L) {
    const auto q = Quantity::m;
    if (L <= 3 || L % 2 == 0)
        return BoundResult::inapplicable(q, L, BoundKind::exact, "m-exact-odd", "requires odd L > 3");
    const auto f = detail::odd_factors(L);
    nt::Factorization others;
    for (auto pr : f.rest)
        if (pr.first % 8 != 5) others.push_back(pr);
    const bool single_safe = others.size() == 1 && others[0].second == 1 && nt::is_safe_prime(others[0].first);

    if (f.three_exponent == 0) {
        if (others.empty()) return BoundResult::ratio(q, L, BoundKind::exact, L - 1, 4, "m-exact-odd-(i)");
        if (single_safe) return BoundResult::ratio(q, L, BoundKind::exact, L - 3, 4, "m-exact-odd-(ii)");
    } else if (f.three_exponent == 1) {
        if (others.empty()) return BoundResult::ratio(q, L, BoundKind::exact, L + 1, 4, "m-exact-odd-(iii)");
        if (single_safe && others[0].first % 8 == 7)
            return BoundResult::ratio(q, L, BoundKind::exact, L - 1, 4, "m-exact-odd-(iv)");
    } else if (f.three_exponent == 2) {
        if (others.empty()) return BoundResult::ratio(q, L, BoundKind::exact, L - 1, 4, "m-exact-odd-(v)");
    }
    return BoundResult::inapplicable(q, L, BoundKind::exact, "m-exact-odd", "factorisation matches no case");
}

}  // namespace scac
