#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include <scac/construct.hpp>
#include <scac/search.hpp>

#include "oracles.hpp"

using namespace scac;

namespace {

bool has_class(const std::vector<CandidateClass>& cs, const Codeword& cw) {
    return std::any_of(cs.begin(), cs.end(), [&](const CandidateClass& c) { return c.canonical == cw; });
}

}  // namespace

TEST_CASE("canonical_form", "[search]") {
    CHECK(canonical_form(Codeword(12, {3, 4, 5})) == Codeword(12, {0, 1, 2}));
    CHECK(canonical_form(Codeword(26, {0, 4, 7})) == Codeword(26, {0, 3, 7}));
    CHECK(canonical_form(Codeword(26, {0, 3, 7}).reflected()) == Codeword(26, {0, 3, 7}));
}

TEST_CASE("enumerate_classes", "[search]") {
    auto cac = enumerate_classes(12, 3, Mode::cac);
    CHECK(has_class(cac, Codeword(12, {0, 1, 2})));
    CHECK(has_class(cac, Codeword(12, {0, 3, 6})));
    CHECK(has_class(cac, Codeword(12, {0, 4, 8})));
    auto scac = enumerate_classes(12, 3, Mode::scac);
    CHECK_FALSE(has_class(scac, Codeword(12, {0, 1, 2})));
    CHECK(has_class(enumerate_classes(26, 3, Mode::scac), canonical_form(Codeword(26, {0, 4, 7}))));
    for (std::size_t i = 1; i < cac.size(); ++i) CHECK(cac[i - 1].mask.size() <= cac[i].mask.size());
}

TEST_CASE("classes are complete and pairwise distinct orbits", "[search][property]") {
    for (int L = 6; L <= 30; ++L)
        for (auto mode : {Mode::cac, Mode::scac}) {
            const auto cs = enumerate_classes(L, 3, mode);
            std::set<std::vector<int>> canon;
            for (const auto& c : cs) {
                CHECK(canonical_form(c.canonical) == c.canonical);
                canon.insert(c.canonical.elements());
            }
            CHECK(canon.size() == cs.size());
            // every admissible codeword containing 0 maps onto some class
            for (int a = 1; a < L; ++a)
                for (int b = a + 1; b < L; ++b) {
                    Codeword cw(L, {0, a, b});
                    const auto ds = oracle::d_star(cw.elements(), L);
                    const bool ok = mode == Mode::cac || (!ds.count(1) && !ds.count(L - 1));
                    CHECK(canon.count(canonical_form(cw).elements()) == (ok ? 1u : 0u));
                }
        }
}

TEST_CASE("max_code examples", "[search]") {
    CHECK(max_code(10, 3, Mode::cac).optimum == 2);
    CHECK(max_code(16, 3, Mode::scac).optimum == 1);
    CHECK(max_code(20, 3, Mode::scac).optimum == 2);
    auto o = max_code(12, 3, Mode::cac);
    CHECK(o.optimum == 3);
    CHECK(o.proven_optimal);
    CHECK(is_cac(o.witness));
    CHECK(o.witness.size() == 3);
}

TEST_CASE("max_code agrees with brute force", "[search][property]") {
    for (int L = 4; L <= 26; ++L) {
        INFO("L=" << L);
        const auto c = max_code(L, 3, Mode::cac);
        CHECK(c.optimum == oracle::max_code(L, 3, false));
        CHECK(is_cac(c.witness));
        CHECK(static_cast<int>(c.witness.size()) == c.optimum);
        const auto s = max_code(L, 3, Mode::scac);
        CHECK(s.optimum == oracle::max_code(L, 3, true));
        CHECK(is_scac(s.witness));
        CHECK(static_cast<int>(s.witness.size()) == s.optimum);
    }
    for (int L = 8; L <= 16; ++L) {
        INFO("w=4 L=" << L);
        CHECK(max_code(L, 4, Mode::cac).optimum == oracle::max_code(L, 4, false));
    }
}

TEST_CASE("M(L,3) = (L-2)/4 for L = 2 mod 4 in [10,30]", "[search][property]") {
    for (int L = 10; L <= 30; L += 4) CHECK(max_code(L, 3, Mode::cac).optimum == (L - 2) / 4);
}

TEST_CASE("optimum does not depend on class order", "[search][property]") {
    std::mt19937 rng(5);
    for (int L = 12; L <= 30; L += 3) {
        auto cs = enumerate_classes(L, 3, Mode::cac);
        const int expect = max_code(L, 3, Mode::cac).optimum;
        for (int rep = 0; rep < 3; ++rep) {
            std::shuffle(cs.begin(), cs.end(), rng);
            int best = 0;
            for_each_code(cs, L, 3, cs.size(), true, [&](const Code& c) {
                best = std::max(best, static_cast<int>(c.size()));
                return true;
            });
            INFO("L=" << L);
            CHECK(best == expect);
        }
    }
}

TEST_CASE("threads give the single-threaded answer and witness", "[search]") {
    for (int L : {24, 28, 31, 36}) {
        for (auto mode : {Mode::cac, Mode::scac}) {
            const auto one = max_code(L, 3, mode);
            const auto four = max_code(L, 3, mode, {.threads = 4});
            INFO("L=" << L);
            CHECK(one.optimum == four.optimum);
            CHECK(one.witness == four.witness);
            CHECK(four.proven_optimal);
        }
    }
}

TEST_CASE("equi-only search reproduces M^e for odd L in [5,35]", "[search][property]") {
    for (int L = 5; L <= 35; L += 2) {
        INFO("L=" << L);
        auto s = max_code(L, 3, Mode::cac, {.equi_only = true});
        CHECK(s.optimum == m_e_with_witness(L).value);
        CHECK(is_cac(s.witness));
    }
}

TEST_CASE("budget exhaustion is reported", "[search]") {
    auto s = max_code(40, 3, Mode::cac, {.budget = 50});
    CHECK_FALSE(s.proven_optimal);
    CHECK(s.nodes_explored >= 50);
    CHECK(is_cac(s.witness));
    CHECK(static_cast<int>(s.witness.size()) == s.optimum);
}

TEST_CASE("for_each_code", "[search]") {
    auto cs = enumerate_classes(12, 3, Mode::cac);
    int all = 0, maximal = 0;
    for_each_code(cs, 12, 3, 10, false, [&](const Code& c) {
        CHECK(is_cac(c));
        ++all;
        return true;
    });
    for_each_code(cs, 12, 3, 10, true, [&](const Code& c) {
        for (const auto& k : cs) {
            bool free = true;
            for (const auto& cw : c.codewords()) free &= !difference_profile(cw).d_star.intersects(k.mask);
            CHECK_FALSE(free);
        }
        ++maximal;
        return true;
    });
    CHECK(all > maximal);
    CHECK(maximal > 0);
    int calls = 0;
    for_each_code(cs, 12, 3, 10, false, [&](const Code&) { return ++calls < 2; });
    CHECK(calls == 2);
}
