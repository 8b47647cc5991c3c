#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "codeword.hpp"
#include "residue_set.hpp"

namespace scac {

/// Difference sets of a codeword I over Z_L:
///   d(I)  = {a - b : a, b in I}
///   d*(I) = d(I) \ {0}
///   d+(I) = d*(I) + {0, 1}
struct DifferenceProfile {
    int length = 0;
    ResidueSet d;
    ResidueSet d_star;
    ResidueSet d_plus;
};

inline DifferenceProfile difference_profile(const Codeword& cw) {
    const int L = cw.length();
    DifferenceProfile p{L, ResidueSet(L), ResidueSet(L), ResidueSet(L)};
    for (int a : cw.elements())
        for (int b : cw.elements()) p.d.insert(((a - b) % L + L) % L);
    p.d_star = p.d;
    p.d_star.erase(0);
    p.d_plus = p.d_star | p.d_star.shifted(1);
    return p;
}

enum class Roughness { e_rough, o_rough, flat };

inline const char* to_string(Roughness r) {
    switch (r) {
        case Roughness::e_rough: return "E-rough";
        case Roughness::o_rough: return "O-rough";
        case Roughness::flat: return "flat";
    }
    return "?";
}

/// Closed integer interval [first, last] inside {2, ..., L-1}.
struct Interval {
    int first = 0;
    int last = 0;
    Roughness roughness = Roughness::flat;

    int size() const { return last - first + 1; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

inline Roughness roughness_of(int first, int last) {
    if (first % 2 == 0 && last % 2 == 0) return Roughness::e_rough;
    if (first % 2 == 1 && last % 2 == 1) return Roughness::o_rough;
    return Roughness::flat;
}

/// Tubes are the maximal runs of consecutive integers in a set A inside
/// {2, ..., L-1}; gaps are the maximal runs of {2, ..., L-1} \ A. Runs do not
/// wrap around L-1 -> 0.
struct TubeGapDecomposition {
    int length = 0;
    std::vector<Interval> tubes;
    std::vector<Interval> gaps;
};

inline TubeGapDecomposition decompose(const ResidueSet& set) {
    const int L = set.length();
    if (set.contains(0) || set.contains(1))
        throw std::invalid_argument("decompose: set must lie in {2, ..., L-1}");
    TubeGapDecomposition out{L, {}, {}};
    int x = 2;
    while (x <= L - 1) {
        const bool in = set.contains(x);
        int y = x;
        while (y + 1 <= L - 1 && set.contains(y + 1) == in) ++y;
        (in ? out.tubes : out.gaps).push_back({x, y, roughness_of(x, y)});
        x = y + 1;
    }
    return out;
}

/// Union of the tubes, i.e. the set decompose() was called with.
inline ResidueSet recompose(const TubeGapDecomposition& dec) {
    ResidueSet out(dec.length);
    for (const auto& t : dec.tubes)
        for (int x = t.first; x <= t.last; ++x) out.insert(x);
    return out;
}

/// `T(3,5)` / `G(9,18)`
inline std::string to_string(const Interval& iv, char tag) {
    return std::string(1, tag) + "(" + std::to_string(iv.first) + "," + std::to_string(iv.last) + ")";
}

}  // namespace scac
