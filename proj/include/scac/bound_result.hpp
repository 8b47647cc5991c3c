#pragma once

#include <cstdint>
#include <string>

namespace scac {

/// Which maximum a bound talks about: M(L,3), M^e(L,3) or M_S(L,3).
enum class Quantity { m, m_equi, m_strong };

inline const char* to_string(Quantity q) {
    switch (q) {
        case Quantity::m: return "M";
        case Quantity::m_equi: return "Me";
        case Quantity::m_strong: return "MS";
    }
    return "?";
}

enum class BoundKind { exact, upper, lower, bracket };

inline const char* to_string(BoundKind k) {
    switch (k) {
        case BoundKind::exact: return "exact";
        case BoundKind::upper: return "upper";
        case BoundKind::lower: return "lower";
        case BoundKind::bracket: return "bracket";
    }
    return "?";
}

/// One closed-form statement evaluated at a length L.
///
/// `lo`/`hi` carry the value: exact has lo == hi, upper uses hi, lower uses lo.
/// A formula whose hypotheses fail, or whose value is not an integer, comes
/// back with applicable == false and the reason in `note`.
struct BoundResult {
    Quantity quantity = Quantity::m;
    std::int64_t length = 0;
    BoundKind kind = BoundKind::exact;
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    std::string provenance;
    bool applicable = false;
    std::string note;

    std::int64_t value() const { return kind == BoundKind::lower ? lo : hi; }

    static BoundResult make(Quantity q, std::int64_t L, BoundKind kind, std::int64_t v, std::string provenance) {
        BoundResult r{q, L, kind, 0, 0, std::move(provenance), true, {}};
        if (kind == BoundKind::exact || kind == BoundKind::lower) r.lo = v;
        if (kind == BoundKind::exact || kind == BoundKind::upper) r.hi = v;
        return r;
    }

    /// Evaluates num/den, flagging the result inapplicable when den does not divide num.
    static BoundResult ratio(Quantity q, std::int64_t L, BoundKind kind, std::int64_t num, std::int64_t den,
                             std::string provenance) {
        if (num % den != 0 || num < 0) {
            BoundResult r{q, L, kind, 0, 0, std::move(provenance), false, {}};
            r.note = "non-integer value " + std::to_string(num) + "/" + std::to_string(den);
            return r;
        }
        return make(q, L, kind, num / den, std::move(provenance));
    }

    static BoundResult inapplicable(Quantity q, std::int64_t L, BoundKind kind, std::string provenance,
                                    std::string why) {
        return {q, L, kind, 0, 0, std::move(provenance), false, std::move(why)};
    }
};

}  // namespace scac
