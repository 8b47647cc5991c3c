#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "code.hpp"

namespace scac {

// Slot-asynchronous collision channel without feedback. Time is measured in
// half-slot units on a circle of circumference 2L; packets last two units.
// Two packets whose start times differ by d units (circular distance) collide
// iff d < 2: d == 0 is a total overlap, d == 1 a partial overlap. Abutting
// packets (d == 2) do not collide.

/// Per-user offsets, stored as twice the real offset reduced mod 2L.
struct OffsetAssignment {
    int length = 0;
    std::vector<int> twice_offsets;

    /// Offsets in slots; each must be a multiple of 0.5.
    static OffsetAssignment from_slots(int L, const std::vector<double>& offsets) {
        OffsetAssignment a{L, {}};
        for (double d : offsets) {
            const double twice = 2.0 * d;
            const double rounded = std::round(twice);
            if (!std::isfinite(d) || std::abs(twice - rounded) > 1e-9)
                throw std::invalid_argument("offset " + std::to_string(d) + " is not a multiple of 0.5 slot");
            const auto h = static_cast<long long>(rounded);
            a.twice_offsets.push_back(static_cast<int>(((h % (2LL * L)) + 2LL * L) % (2LL * L)));
        }
        return a;
    }

    double slots(std::size_t i) const { return twice_offsets[i] / 2.0; }
};

enum class Overlap { total, partial };

inline const char* to_string(Overlap o) { return o == Overlap::total ? "total" : "partial"; }

struct CollisionEvent {
    std::size_t victim = 0;
    int victim_slot = 0;  ///< element of the victim's codeword
    std::size_t interferer = 0;
    int interferer_slot = 0;
    Overlap overlap = Overlap::total;

    friend bool operator==(const CollisionEvent&, const CollisionEvent&) = default;
};

struct SimulationReport {
    std::vector<int> successes;  ///< sigma_i over one period
    std::vector<CollisionEvent> collisions;
};

/// Circular distance between two start times, in half-slot units.
inline int start_distance(int a, int b, int circumference) {
    int d = ((a - b) % circumference + circumference) % circumference;
    return std::min(d, circumference - d);
}

/// All users active. Collisions are listed by victim, then victim slot, then
/// interferer, then interferer slot.
inline SimulationReport simulate(const Code& code, const OffsetAssignment& offsets) {
    if (offsets.twice_offsets.size() != code.size())
        throw std::invalid_argument("simulate: expected " + std::to_string(code.size()) + " offsets, got " +
                                    std::to_string(offsets.twice_offsets.size()));
    if (offsets.length != code.length()) throw std::invalid_argument("simulate: offset length mismatch");
    const int H = 2 * code.length();
    SimulationReport r;
    for (std::size_t i = 0; i < code.size(); ++i) {
        int ok = 0;
        for (int s : code[i].elements()) {
            const int start = offsets.twice_offsets[i] + 2 * s;
            bool hit = false;
            for (std::size_t j = 0; j < code.size(); ++j) {
                if (j == i) continue;
                for (int u : code[j].elements()) {
                    const int d = start_distance(start, offsets.twice_offsets[j] + 2 * u, H);
                    if (d >= 2) continue;
                    hit = true;
                    r.collisions.push_back({i, s, j, u, d == 0 ? Overlap::total : Overlap::partial});
                }
            }
            if (!hit) ++ok;
        }
        r.successes.push_back(ok);
    }
    return r;
}

struct WorstCase {
    std::size_t victim = 0;
    int sigma = 0;
    /// Offsets realising `sigma`, with the victim at 0.
    OffsetAssignment witness;
    /// False for sampled estimates.
    bool exact = true;
};

namespace detail {

/// Bitmask over the victim's packets hit by user j placed at `twice_offset`,
/// with the victim at offset 0.
inline std::uint64_t hit_mask(const Codeword& victim, const Codeword& interferer, int twice_offset, int H) {
    std::uint64_t m = 0;
    for (std::size_t k = 0; k < victim.elements().size(); ++k)
        for (int u : interferer.elements())
            if (start_distance(2 * victim[k], twice_offset + 2 * u, H) < 2) m |= std::uint64_t{1} << k;
    return m;
}

inline void check_victim(const Code& code, std::size_t victim) {
    if (victim >= code.size()) throw std::out_of_range("victim index out of range");
    if (code.weight() > 64) throw std::invalid_argument("worst-case evaluation supports weight <= 64");
}

}  // namespace detail

/// Minimum of sigma_victim over every assignment with the victim at offset 0
/// and every other active user on the half-slot grid {0, 0.5, ..., L-0.5}.
///
/// Which victim packets an interferer destroys depends only on that
/// interferer's own offset, so the minimum is taken over unions of one hit
/// pattern per interferer. Distinct patterns are few (at most 2^w), which
/// keeps this exact without walking the (2L)^(M-1) grid.
///
/// `active` selects the interferers (default: all users).
inline WorstCase worst_case_sigma(const Code& code, std::size_t victim,
                                  std::optional<std::vector<std::size_t>> active = std::nullopt) {
    detail::check_victim(code, victim);
    const int L = code.length(), H = 2 * L;
    std::vector<std::size_t> users;
    if (active) {
        users = *active;
    } else {
        for (std::size_t j = 0; j < code.size(); ++j) users.push_back(j);
    }

    // reachable union -> offsets achieving it (victim and inactive users at 0)
    std::map<std::uint64_t, std::vector<int>> reach{{0, std::vector<int>(code.size(), 0)}};
    for (auto j : users) {
        if (j == victim) continue;
        if (j >= code.size()) throw std::out_of_range("active user index out of range");
        std::map<std::uint64_t, int> patterns;
        for (int t = 0; t < H; ++t) patterns.emplace(detail::hit_mask(code[victim], code[j], t, H), t);
        std::map<std::uint64_t, std::vector<int>> next;
        for (const auto& [mask, offs] : reach)
            for (const auto& [pat, t] : patterns) {
                auto it = next.find(mask | pat);
                if (it != next.end()) continue;
                auto o = offs;
                o[j] = t;
                next.emplace(mask | pat, std::move(o));
            }
        reach = std::move(next);
    }
    WorstCase w{victim, code.weight() + 1, {L, {}}, true};
    for (const auto& [mask, offs] : reach) {
        const int sigma = code.weight() - std::popcount(mask);
        if (sigma < w.sigma) {
            w.sigma = sigma;
            w.witness = {L, offs};
        }
    }
    return w;
}

/// Minimum sigma over `samples` uniformly drawn grid assignments (victim at 0).
inline WorstCase sampled_sigma(const Code& code, std::size_t victim, std::uint64_t samples, std::uint64_t seed) {
    detail::check_victim(code, victim);
    const int L = code.length(), H = 2 * L;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, H - 1);
    WorstCase w{victim, code.weight() + 1, {L, {}}, false};
    for (std::uint64_t n = 0; n < samples; ++n) {
        OffsetAssignment a{L, std::vector<int>(code.size(), 0)};
        std::uint64_t mask = 0;
        for (std::size_t j = 0; j < code.size(); ++j) {
            if (j == victim) continue;
            a.twice_offsets[j] = pick(rng);
            mask |= detail::hit_mask(code[victim], code[j], a.twice_offsets[j], H);
        }
        const int sigma = code.weight() - std::popcount(mask);
        if (sigma < w.sigma) {
            w.sigma = sigma;
            w.witness = a;
        }
    }
    if (samples == 0) w.sigma = code.weight();
    return w;
}

}  // namespace scac
