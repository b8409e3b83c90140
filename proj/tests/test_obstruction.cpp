#include <catch2/catch_amalgamated.hpp>

#include "nullcone/obstruction.hpp"

#include <vector>

using namespace nullcone;

namespace {

// Independent binomial-parity oracle: Pascal recursion mod 2.
std::vector<std::vector<int>> pascal_mod2(unsigned max) {
    std::vector<std::vector<int>> c(max + 1, std::vector<int>(max + 1, 0));
    for (unsigned r = 0; r <= max; ++r) {
        c[r][0] = 1;
        for (unsigned i = 1; i <= r; ++i)
            c[r][i] = (c[r - 1][i - 1] + (i <= r - 1 ? c[r - 1][i] : 0)) % 2;
    }
    return c;
}

} // namespace

TEST_CASE("truncated mod-2 arithmetic") {
    SECTION("(1+x)^2 at n=10 is 1+x^2") {
        const Z2TruncPoly p = z2_pow_one_plus_x(2, 10);
        Z2TruncPoly expect(10);
        expect.set_coeff(0, true);
        expect.set_coeff(2, true);
        CHECK(p == expect);
    }
    SECTION("(1+x)^4 at n=10 is 1+x^4") {
        const Z2TruncPoly p = z2_pow_one_plus_x(4, 10);
        CHECK(p.coeff(0));
        CHECK(p.coeff(4));
        CHECK_FALSE(p.coeff(1));
        CHECK_FALSE(p.coeff(2));
        CHECK_FALSE(p.coeff(3));
        CHECK(p.degree() == 4);
    }
    SECTION("(1+x)^3 at n=2 truncates to 1+x+x^2") {
        const Z2TruncPoly p = z2_pow_one_plus_x(3, 2);
        CHECK(p.to_string() == "1+x+x^2");
    }
    SECTION("multiplication agrees with repeated squaring") {
        Z2TruncPoly onepx(10);
        onepx.set_coeff(0, true);
        onepx.set_coeff(1, true);
        Z2TruncPoly acc = Z2TruncPoly::one(10);
        for (int i = 0; i < 6; ++i) acc = z2_mul(acc, onepx);
        CHECK(acc == z2_pow_one_plus_x(6, 10));
    }
    SECTION("truncation mismatch is rejected") {
        CHECK_THROWS_AS(z2_mul(Z2TruncPoly::one(3), Z2TruncPoly::one(4)), std::invalid_argument);
    }
    SECTION("Lucas parity matches the Pascal recursion up to 64") {
        const auto c = pascal_mod2(64);
        for (unsigned r = 0; r <= 64; ++r) {
            const Z2TruncPoly p = z2_pow_one_plus_x(r, 64);
            for (unsigned i = 0; i <= 64; ++i) {
                const int expect = i <= r ? c[r][i] : 0;
                CHECK(int(p.coeff(i)) == expect);
            }
        }
    }
}

TEST_CASE("series inverses") {
    for (unsigned n = 1; n <= 8; ++n)
        for (unsigned bits = 0; bits < (1u << n); ++bits) {
            Z2TruncPoly p(n);
            p.set_coeff(0, true);
            for (unsigned i = 1; i <= n; ++i) p.set_coeff(i, (bits >> (i - 1)) & 1);
            const auto q = p.inverse();
            REQUIRE(q.has_value());
            CHECK((p * *q).is_one());
        }
    Z2TruncPoly nounit(4);
    nounit.set_coeff(1, true);
    CHECK_FALSE(nounit.inverse().has_value());
}

TEST_CASE("the residue count") {
    CHECK(phi(1) == 1);
    CHECK(phi(8) == 4);
    CHECK(phi(10) == 6);
    SECTION("closed form matches the direct count") {
        for (std::uint64_t n = 1; n <= 4000; ++n) CHECK(phi(n) == phi_direct(n));
    }
    SECTION("increments happen exactly at residues 0,1,2,4 mod 8") {
        for (std::uint64_t n = 2; n <= 500; ++n) {
            const unsigned step = phi(n) - phi(n - 1);
            const auto m = n % 8;
            const bool counted = m == 0 || m == 1 || m == 2 || m == 4;
            CHECK(step == (counted ? 1u : 0u));
        }
    }
}

TEST_CASE("bounds on the residue count") {
    SECTION("named instances") {
        const auto r10 = phi_bounds_check(10);
        CHECK(r10.phi_value == 6);
        CHECK(r10.lower_bound_applies);
        CHECK(r10.lower_bound_ok); // j = 3, 6 >= 6
        const auto r7 = phi_bounds_check(7);
        CHECK_FALSE(r7.gap_expected);
        CHECK_FALSE(r7.gap_ok); // 2^3 = 8 = n+1 exactly
        const auto r13 = phi_bounds_check(13);
        CHECK(r13.phi_value == 7);
        CHECK(r13.lower_bound_ok);
    }
    SECTION("sandwich, lower bound, and gap across a range") {
        for (std::uint64_t n = 1; n <= 3000; ++n) {
            const auto rep = phi_bounds_check(n);
            CHECK(rep.sandwich_ok);
            CHECK(rep.lower_bound_ok);
            CHECK(rep.gap_ok == rep.gap_expected);
        }
    }
}

TEST_CASE("reduced class order and the halving relation") {
    CHECK(ko_order(4) == 8);
    CHECK(ko_order(10) == 64);
    SECTION("odd ranks have no solution") {
        CHECK(ko_halving_residues(3, 6).empty());
        CHECK(ko_halving_residues(7, 12).empty());
    }
    SECTION("rank 4 over base 4: residues 2 and 6 mod 8") {
        const auto sols = ko_halving_residues(4, 4);
        REQUIRE(sols.size() == 2);
        CHECK(sols[0] == 2);
        CHECK(sols[1] == 6);
    }
    SECTION("rank 0: zero and the half-order") {
        const auto sols = ko_halving_residues(0, 5);
        REQUIRE(sols.size() == 2);
        CHECK(sols[0] == 0);
        CHECK(sols[1] == ko_order(5) / 2);
    }
    SECTION("solutions actually solve 2a = r") {
        for (std::uint64_t n = 1; n <= 12; ++n)
            for (std::uint64_t r = 0; r <= 20; r += 2)
                for (const auto& a : ko_halving_residues(r, n))
                    CHECK((2 * a) % ko_order(n) == BigInt(r) % ko_order(n));
    }
}

TEST_CASE("degree dichotomy for classes of sub-bundles") {
    SECTION("unit class") {
        const auto res = subbundle_dichotomy(Z2TruncPoly::one(6), 3, 6);
        CHECK(res.outcome == DichotomyCase::trivial_class);
    }
    SECTION("binomial classes with a power-of-two ambient rank") {
        // n+1 = 8: inverse of (1+x)^r is (1+x)^{8-r}, product 1+x^8.
        for (std::uint64_t r = 1; r <= 7; ++r) {
            const auto res = subbundle_dichotomy(z2_pow_one_plus_x(r, 7), r, 7);
            INFO("r = " << r);
            CHECK(res.outcome == DichotomyCase::degree_equals_rank);
        }
        const auto res32 = subbundle_dichotomy(z2_pow_one_plus_x(2, 3), 2, 3);
        CHECK(res32.outcome == DichotomyCase::degree_equals_rank);
    }
    SECTION("classes of intermediate degree are contradictions, exhaustively to n = 8") {
        for (unsigned n = 2; n <= 8; ++n)
            for (std::uint64_t r = 2; r <= n; ++r)
                for (unsigned bits = 1; bits < (1u << n); ++bits) {
                    Z2TruncPoly p(n);
                    p.set_coeff(0, true);
                    for (unsigned i = 1; i <= n; ++i) p.set_coeff(i, (bits >> (i - 1)) & 1);
                    if (p.degree() == 0 || p.degree() >= r) continue;
                    const auto res = subbundle_dichotomy(p, r, n);
                    CHECK(res.outcome == DichotomyCase::contradiction);
                }
    }
    SECTION("rank above the ambient bound is rejected") {
        CHECK_THROWS_AS(subbundle_dichotomy(Z2TruncPoly::one(4), 6, 4), std::invalid_argument);
    }
}

TEST_CASE("case analysis: doubled embedding") {
    SECTION("named instance n=10, r=5") {
        const auto res = techn_case_double(10, 5);
        CHECK(res.verdict == CaseVerdict::infeasible);
        CHECK(res.trace.contradiction);
        CHECK(replay_trace(res.trace));
    }
    SECTION("zero rank is consistent") {
        CHECK(techn_case_double(12, 0).verdict == CaseVerdict::consistent);
    }
    SECTION("grid sweep with replay") {
        for (unsigned n = 1; n <= 64; ++n)
            for (std::uint64_t r = 1; 2 * r <= std::uint64_t(n) + 1; ++r) {
                const auto res = techn_case_double(n, r);
                CHECK(res.verdict == CaseVerdict::infeasible);
                CHECK(replay_trace(res.trace));
            }
    }
}

TEST_CASE("case analysis: sections and self-tensoring") {
    SECTION("named instance n=4, r=2, rank bound 5") {
        const auto res = techn_case_section(4, 2, 5);
        CHECK(res.verdict == CaseVerdict::infeasible);
        CHECK(replay_trace(res.trace));
    }
    SECTION("exceptional bases are inapplicable") {
        CHECK_THROWS_AS(techn_case_section(7, 2, 8), InapplicableError);
        CHECK_THROWS_AS(techn_case_section(1, 1, 2), InapplicableError);
        CHECK_THROWS_AS(techn_case_section(3, 1, 4), InapplicableError);
    }
    SECTION("zero rank is consistent") {
        CHECK(techn_case_section(4, 0, 5).verdict == CaseVerdict::consistent);
    }
    SECTION("grid sweep with replay") {
        for (unsigned n = 2; n <= 64; ++n) {
            if (n == 3 || n == 7) continue;
            for (std::uint64_t r = 1; r <= std::uint64_t(n) + 1; ++r) {
                const auto res = techn_case_section(n, r, n + 1);
                CHECK(res.verdict == CaseVerdict::infeasible);
                CHECK(replay_trace(res.trace));
            }
        }
    }
}

TEST_CASE("case analysis: restricted self-tensoring") {
    SECTION("named instance n=12, k=10, r=4") {
        const auto res = techn_case_restricted(12, 10, 4);
        CHECK(res.verdict == CaseVerdict::infeasible);
        CHECK(res.trace.contradiction);
        CHECK(replay_trace(res.trace));
    }
    SECTION("precondition failures name the failing inequality") {
        CHECK_THROWS_WITH(techn_case_restricted(12, 9, 4),
                          Catch::Matchers::ContainsSubstring("k >= 10 fails"));
        CHECK_THROWS_WITH(techn_case_restricted(25, 11, 4),
                          Catch::Matchers::ContainsSubstring("n/2 <= k fails"));
        CHECK_THROWS_WITH(techn_case_restricted(12, 14, 4),
                          Catch::Matchers::ContainsSubstring("k <= n fails"));
        CHECK_THROWS_WITH(techn_case_restricted(12, 10, 15),
                          Catch::Matchers::ContainsSubstring("r <= n+1 fails"));
    }
    SECTION("zero rank is consistent") {
        CHECK(techn_case_restricted(12, 10, 0).verdict == CaseVerdict::consistent);
    }
    SECTION("grid sweep with replay") {
        for (std::uint64_t k = 10; k <= 64; ++k)
            for (unsigned n = unsigned(k); n <= 64 && n <= 2 * k; ++n)
                for (std::uint64_t r = 1; r <= std::uint64_t(n) + 1; ++r) {
                    const auto res = techn_case_restricted(n, k, r);
                    CHECK(res.verdict == CaseVerdict::infeasible);
                    if (r <= 3 || r == n + 1) CHECK(replay_trace(res.trace));
                }
    }
}

TEST_CASE("the verdict table") {
    SECTION("named instances") {
        CHECK(wolf_verdict(3, 3).verdict == WolfVerdict::locally_symmetric);
        CHECK(wolf_verdict(4, 4).verdict == WolfVerdict::inconclusive);
        CHECK(wolf_verdict(8, 8).verdict == WolfVerdict::inconclusive);
        CHECK(wolf_verdict(2, 11).verdict == WolfVerdict::locally_symmetric);
        CHECK(wolf_verdict(1, 1).verdict == WolfVerdict::locally_symmetric);
        CHECK(wolf_verdict(2, 3).verdict == WolfVerdict::inconclusive);
    }
    SECTION("grid matches the closed-form rule and is symmetric") {
        for (unsigned p = 0; p <= 16; ++p)
            for (unsigned q = 0; q <= 16; ++q) {
                const bool symmetric_expected =
                    (p == q && p != 2 && p != 4 && p != 8) ||
                    (p != q && std::max(p, q) >= 11);
                const auto res = wolf_verdict(p, q);
                INFO("signature (" << p << "," << q << ")");
                CHECK((res.verdict == WolfVerdict::locally_symmetric) == symmetric_expected);
                CHECK(res.verdict == wolf_verdict(q, p).verdict);
            }
    }
    SECTION("traces replay") {
        for (auto [p, q] : std::vector<std::pair<unsigned, unsigned>>{
                 {3, 3}, {4, 4}, {1, 1}, {2, 11}, {5, 16}, {16, 5}, {0, 0}, {2, 3}}) {
            const auto res = wolf_verdict(p, q);
            CHECK(replay_trace(res.trace));
        }
    }
    SECTION("tampered traces fail replay") {
        auto res = wolf_verdict(2, 11);
        REQUIRE(replay_trace(res.trace));
        for (auto& s : res.trace.steps)
            if (s.rule == "inclusion-bounds") s.inputs["k"] = 5;
        CHECK_FALSE(replay_trace(res.trace));
    }
}
