#include <catch2/catch_amalgamated.hpp>

#include "nullcone/curvature.hpp"

#include <random>

using namespace nullcone;

namespace {

std::vector<Rational> vec(std::initializer_list<long long> xs) {
    std::vector<Rational> v;
    for (auto x : xs) v.emplace_back(x);
    return v;
}

} // namespace

TEST_CASE("symmetry checking") {
    SECTION("zero tensor is valid") {
        CovDerivTensor t{Signature(1, 1)};
        CHECK(check_symmetries(t).empty());
    }
    SECTION("an isolated entry violates the antisymmetric completion") {
        CovDerivTensor t{Signature(1, 2)};
        t.at(0, 1, 0, 1, 0) = 1;
        const auto v = check_symmetries(t);
        CHECK_FALSE(v.empty());
        bool antisym = false;
        for (const auto& viol : v)
            if (viol.identity == "antisymmetry") antisym = true;
        CHECK(antisym);
    }
    SECTION("generated tensors always pass") {
        for (unsigned m = 2; m <= 4; ++m) {
            const Signature sig(1, m - 1);
            for (std::uint64_t seed = 1; seed <= 3; ++seed) {
                const CovDerivTensor t = random_symmetric_tensor(sig, seed);
                CHECK(check_symmetries(t).empty());
            }
        }
    }
}

TEST_CASE("generated tensors are seeded and generically distinct") {
    const Signature sig(2, 2);
    const CovDerivTensor a = random_symmetric_tensor(sig, 5);
    const CovDerivTensor b = random_symmetric_tensor(sig, 5);
    const CovDerivTensor c = random_symmetric_tensor(sig, 6);
    CHECK(a == b);
    CHECK(a != c);
    CHECK_FALSE(a.is_zero());
    CHECK(symmetric_tensor_space_dimension(4) > 0);
    // m = 2 has a computed (possibly small) solution space; report it is consistent.
    const CovDerivTensor small = random_symmetric_tensor(Signature(1, 1), 3);
    CHECK(check_symmetries(small).empty());
}

TEST_CASE("operator at a point") {
    const Signature sig(1, 2);
    SECTION("zero tensor gives the zero operator") {
        CovDerivTensor t{sig};
        CHECK(szabo_at(t, vec({1, 2, 3})).is_zero());
    }
    SECTION("self-adjoint, kills v, and is cubic in v") {
        const InnerSpace sp{sig};
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const CovDerivTensor t = random_symmetric_tensor(sig, seed);
            const auto v = vec({2, 1, -3});
            const RatMat s = szabo_at(t, v);
            CHECK(is_self_adjoint(s, sp));
            const auto sv = s.apply(v);
            for (const auto& x : sv) CHECK(x == 0);
            // S(2v) = 8 S(v)
            std::vector<Rational> v2 = v;
            for (auto& x : v2) x *= 2;
            CHECK(szabo_at(t, v2) == s.scaled(Rational(8)));
            // Oddness: S(-v) = -S(v)
            std::vector<Rational> vm = v;
            for (auto& x : vm) x = -x;
            CHECK(szabo_at(t, vm) == s.scaled(Rational(-1)));
        }
    }
    SECTION("symmetry violations are rejected") {
        CovDerivTensor bad{sig};
        bad.at(0, 1, 0, 1, 0) = 1;
        CHECK_THROWS_AS(szabo_at(bad, vec({1, 0, 0})), SymmetryError);
    }
}

TEST_CASE("polynomial map agrees with pointwise evaluation") {
    for (const Signature sig : {Signature(1, 2), Signature(2, 2)}) {
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            const CovDerivTensor t = random_symmetric_tensor(sig, seed);
            const HomPolyMap s = szabo_polymap(t);
            CHECK(s.degree() == 3);
            std::mt19937_64 rng(seed * 97);
            std::uniform_int_distribution<int> coef(-4, 4);
            for (int rep = 0; rep < 20; ++rep) {
                std::vector<Rational> v(sig.m());
                for (auto& x : v) x = coef(rng);
                CHECK(s.evaluate(v) == szabo_at(t, v));
            }
        }
    }
}

TEST_CASE("the cubic map is a class member") {
    for (const Signature sig : {Signature(1, 2), Signature(2, 2), Signature(1, 3)}) {
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            const CovDerivTensor t = random_symmetric_tensor(sig, seed);
            const auto rep = pclass_check(szabo_polymap(t));
            CHECK(rep.member());
            CHECK(rep.n == 1);
        }
    }
}

TEST_CASE("vanishing equivalence") {
    const Signature sig(2, 2);
    SECTION("zero tensor") {
        const auto rep = vanishing_equivalence_report(CovDerivTensor{sig});
        CHECK(rep.map_zero);
        CHECK(rep.tensor_zero);
        CHECK(rep.equivalent());
    }
    SECTION("random nonzero tensors in m=4") {
        for (std::uint64_t seed = 1; seed <= 6; ++seed) {
            const CovDerivTensor t = random_symmetric_tensor(sig, seed);
            if (t.is_zero()) continue;
            const auto rep = vanishing_equivalence_report(t);
            CHECK_FALSE(rep.map_zero);
            CHECK_FALSE(rep.tensor_zero);
            CHECK(rep.equivalent());
        }
    }
    SECTION("scaling does not change the verdict") {
        const CovDerivTensor t = random_symmetric_tensor(sig, 4);
        const auto rep1 = vanishing_equivalence_report(t);
        const auto rep2 = vanishing_equivalence_report(t.scaled(make_rational(1, 7)));
        CHECK(rep1.equivalent() == rep2.equivalent());
        CHECK(rep1.map_zero == rep2.map_zero);
    }
}

TEST_CASE("equivariance under rational isometries") {
    const Signature sig(1, 2);
    const InnerSpace sp{sig};
    std::mt19937_64 rng(2718);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const CovDerivTensor t = random_symmetric_tensor(sig, seed);
        const RatMat a = random_isometry(sp, rng);
        REQUIRE(is_isometry(a, sp));
        const CovDerivTensor ta = pushforward(t, a);
        CHECK(check_symmetries(ta).empty());
        const auto ainv = *a.inverse();
        std::uniform_int_distribution<int> coef(-3, 3);
        for (int rep = 0; rep < 8; ++rep) {
            std::vector<Rational> v(sig.m());
            for (auto& x : v) x = coef(rng);
            // S_{A.T}(A v) = A S_T(v) A^{-1}
            CHECK(szabo_at(ta, a.apply(v)) == a * szabo_at(t, v) * ainv);
        }
    }
}
