#include <catch2/catch_amalgamated.hpp>

#include <scac/bounds.hpp>
#include <scac/search.hpp>

#include "oracles.hpp"

using namespace scac;

TEST_CASE("ms_upper by residue class", "[bounds]") {
    CHECK(ms_upper(24).hi == 3);
    CHECK(ms_upper(28).hi == 3);
    CHECK(ms_upper(30).hi == 4);
    CHECK(ms_upper(26).hi == 3);
    CHECK(ms_upper(38).hi == 4);
    CHECK(ms_upper(24).kind == BoundKind::upper);
    CHECK(ms_upper(24).provenance == "ms-upper");
    CHECK_FALSE(ms_upper(16).applicable);
    CHECK_FALSE(ms_upper(25).applicable);
}

TEST_CASE("ms_upper_legacy", "[bounds]") {
    CHECK(ms_upper_legacy(24).hi == 4);
    CHECK(ms_upper_legacy(20).hi == 3);
    CHECK(ms_upper_legacy(42).hi == 7);
    CHECK(ms_upper_legacy(28).hi == 4);  // 7 | 28, 3 does not: floor((L+2)/6)
    CHECK_FALSE(ms_upper_legacy(21).applicable);
    CHECK_FALSE(ms_upper_legacy(12).applicable);
}

TEST_CASE("ms_upper intermediate bounds", "[bounds]") {
    auto has = [](std::int64_t L, const std::string& id, std::int64_t v) {
        for (const auto& r : ms_upper_lemmas(L))
            if (r.provenance == id && r.applicable && r.hi == v) return true;
        return false;
    };
    CHECK(has(24, "ms-upper-mod12", 3));  // floor((24+4)/8)
    CHECK(has(36, "ms-upper-mod12", 5));
    CHECK(has(36, "ms-upper-12mod24", 4));
}

TEST_CASE("m_cac_exact", "[bounds]") {
    CHECK(m_cac_exact(10).lo == 2);
    CHECK(m_cac_exact(14).lo == 3);
    CHECK(m_cac_exact(14).provenance == "m-exact-2mod4");
    CHECK(m_cac_exact(17).lo == 4);
    CHECK(m_cac_exact(17).provenance == "m-exact-2^(2t)+1");
    CHECK(m_cac_exact(15).lo == 4);
    CHECK(m_cac_exact(15).provenance == "m-exact-2^(2^t)-1");
    CHECK(m_cac_exact(10).kind == BoundKind::exact);
}

TEST_CASE("the L = 4t table flags non-integer values", "[bounds]") {
    for (int L : {12, 16, 20, 24, 28, 32}) {
        auto r = m_four_t_table(L);
        INFO("L=" << L << " " << r.note);
        CHECK_FALSE(r.applicable);
        CHECK(r.note.rfind("non-integer value", 0) == 0);
    }
    auto e = m_cac_exact(12);
    CHECK_FALSE(e.applicable);
    CHECK(e.note.find("m-4t-table") != std::string::npos);
}

TEST_CASE("ms_exact", "[bounds]") {
    auto a = ms_exact(20);
    CHECK(a.kind == BoundKind::exact);
    CHECK(a.lo == 2);
    auto b = ms_exact(34);
    CHECK(b.kind == BoundKind::exact);
    CHECK(b.lo == 4);
    CHECK(b.provenance.find("ms-exact-2^(2t+1)+2") != std::string::npos);
    auto c = ms_exact(18);
    CHECK(c.kind == BoundKind::exact);
    CHECK(c.lo == 2);
    CHECK(c.provenance.find("ms-exact-half-odd-(v)") != std::string::npos);
    auto s = ms_exact(12);
    CHECK(s.kind == BoundKind::exact);
    CHECK(s.lo == 1);
    CHECK_FALSE(ms_exact(4).applicable);
}

TEST_CASE("no statement ever carries a non-integer value", "[bounds][property]") {
    for (std::int64_t L = 3; L <= 2000; ++L) {
        for (const auto& r : m_statements(L)) {
            if (!r.applicable) CHECK(!r.note.empty());
            if (r.applicable && r.kind == BoundKind::exact) CHECK(r.lo == r.hi);
        }
        for (const auto& r : ms_statements(L))
            if (r.applicable && r.kind == BoundKind::exact) CHECK(r.lo == r.hi);
        auto m = m_cac_exact(L);
        if (m.applicable) CHECK(m.lo >= 1);
    }
}

TEST_CASE("closed forms agree among themselves", "[bounds][property]") {
    for (std::int64_t L = 18; L <= 2000; L += 2) {
        INFO("L=" << L);
        CHECK(ms_bracket(L).consistent);
    }
    for (std::int64_t L = 3; L <= 2000; ++L) {
        INFO("L=" << L);
        CHECK(m_bracket(L).consistent);
    }
}

TEST_CASE("ms_upper is never weaker than the legacy bound, even L in [18,200]", "[bounds][property]") {
    for (std::int64_t L = 18; L <= 200; L += 2) {
        const auto legacy = ms_upper_legacy(L);
        if (!legacy.applicable) continue;
        INFO("L=" << L);
        CHECK(ms_upper(L).hi <= legacy.hi);
    }
}

TEST_CASE("closed forms against the brute-force oracle", "[bounds][property]") {
    SECTION("M(L,3) for L = 2 mod 4 in [10,30]") {
        for (int L = 10; L <= 30; L += 4) {
            INFO("L=" << L);
            CHECK(max_code(L, 3, Mode::cac).optimum == (L - 2) / 4);
            if (L <= 26) CHECK(oracle::max_code(L, 3, false) == (L - 2) / 4);
            CHECK(m_cac_exact(L).lo == (L - 2) / 4);
        }
    }
    SECTION("every exact M(L,3) claim for L <= 25") {
        for (int L = 5; L <= 25; ++L) {
            auto e = m_cac_exact(L);
            if (!e.applicable) continue;
            INFO("L=" << L << " " << e.provenance);
            CHECK(oracle::max_code(L, 3, false) == e.lo);
        }
    }
    SECTION("M_S(L,3) for even L in [18,40]") {
        for (int L = 18; L <= 40; L += 2) {
            const int opt = max_code(L, 3, Mode::scac).optimum;
            const auto ex = ms_exact(L);
            const auto b = ms_bracket(L);
            INFO("L=" << L << " optimum " << opt << " bracket [" << b.lo.value_or(-1) << "," << b.hi.value_or(-1)
                      << "]");
            CHECK(opt <= ms_upper(L).hi);
            if (b.lo) CHECK(opt >= *b.lo);
            if (ex.kind == BoundKind::exact) CHECK(opt == ex.lo);
        }
        for (int L = 18; L <= 24; L += 2) CHECK(oracle::max_code(L, 3, true) == max_code(L, 3, Mode::scac).optimum);
    }
    SECTION("M_S = 1 below 18") {
        for (int L = 6; L < 18; L += 2) CHECK(oracle::max_code(L, 3, true) == 1);
    }
}
