#include <random>

#include "doctest.h"
#include "sevlab/branching.hpp"
#include "sevlab/error.hpp"

using namespace sevlab;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("restriction schemes split off the trivial line") {
    for (int a : {1, 2, 4, 8}) {
        const auto s = restriction_scheme(a);
        CHECK(weyl_dim(s.so, s.j_phi) == 3 * a + 2);
        CHECK(weyl_dim(s.levi, s.j_levi) == 3 * a + 3);
        std::mt19937_64 rng(static_cast<std::uint64_t>(a));
        for (int i = 0; i < 3; ++i) CHECK(scheme_valid_at(s, random_regular_point(s, rng)));
    }
    CHECK(code_of([] { (void)restriction_scheme(3); }) == ErrorCode::UnsupportedCase);
}

TEST_CASE("Kostant constituents restrict consistently") {
    for (int a : {1, 2, 4}) {
        const auto s = restriction_scheme(a);
        std::mt19937_64 rng(11);
        for (int i = 0; i < 2; ++i) CHECK(kostant_restriction_check(s, random_regular_point(s, rng)));
    }
}

TEST_CASE("Euler characteristic at random points") {
    for (int a : {1, 2, 4}) {
        const auto r = euler_check(a, 5, 2024);
        CHECK(r.scheme_ok);
        CHECK(r.values.size() == 5);
        CHECK(r.expected == Rational(a == 1 ? 1 : 3));
        CHECK(r.ok());
    }
    const auto s = restriction_scheme(1);
    const auto seq = identify_interval(s.pair);
    CHECK(euler_char_at_point(s, seq, {Rational(2)}) == Rational(1));
    CHECK(code_of([&] { (void)euler_char_at_point(s, seq, {Rational(1)}); }) == ErrorCode::SingularPoint);
}

TEST_CASE("sl2 greedy decomposition") {
    // V_2 + V_0 + V_0.
    std::map<Weight, BigInt> m{{{2}, 1}, {{0}, 3}, {{-2}, 1}};
    CHECK(sl2_trivial_count(m) == 2);
    CHECK(trivial_multiplicity(build_root_system("A", 1), m) == 2);
    std::map<Weight, BigInt> bad{{{2}, 1}};
    CHECK(code_of([&] { (void)sl2_trivial_count(bad); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("invariant counts") {
    // Rules and the Weyl-alternation count must agree for every a.
    for (int a : {1, 2, 4}) CHECK(invariant_dims(a) == invariant_dims_bruteforce(a));
    CHECK(invariant_dims(2) == expected_invariant_pattern(2, 2));
    CHECK(invariant_dims(4) == expected_invariant_pattern(4, 2));
    // For S^2 C^3 under SO(3) only L^1 carries an invariant.
    CHECK(invariant_dims(1) == std::vector<int>{1, 0, 0});
    CHECK(code_of([] { (void)invariant_dims(8); }) == ErrorCode::UnsupportedCase);

    for (int a : {1, 2, 4}) CHECK(higher_invariants(a, 2) == invariant_dims(a));
    for (int n = 2; n <= 6; ++n) {
        CHECK(higher_invariants(2, n) == expected_invariant_pattern(2, n));
        CHECK(higher_invariants(4, n) == expected_invariant_pattern(4, n));
    }
    CHECK(higher_invariants(1, 3) == std::vector<int>{1, 0, 0, 1});

    // Signed invariant counts reproduce the Euler characteristic.
    for (int a : {1, 2, 4}) {
        int chi = 0;
        const auto inv = invariant_dims(a);
        for (std::size_t k = 0; k < inv.size(); ++k) chi += (k % 2 ? -1 : 1) * inv[k];
        CHECK(chi == (a == 1 ? 1 : 3));
    }
}

TEST_CASE("invariant rules on Schur modules") {
    CHECK(has_so_invariant({2}, 3));
    CHECK_FALSE(has_so_invariant({3, 1}, 3));
    CHECK(has_so_invariant({1, 1, 1}, 3));
    CHECK(has_so_invariant({5, 1, 1, 1}, 4));
    CHECK(has_sp_invariant({1, 1}, 6));
    CHECK_FALSE(has_sp_invariant({2}, 6));
    CHECK(has_sl_pairing_invariant({2, 1}, {2, 1}, 3));
    CHECK(has_sl_pairing_invariant({2, 1, 1}, {1}, 3));
    CHECK_FALSE(has_sl_pairing_invariant({2}, {1, 1}, 3));
}

TEST_CASE("Cartan powers split") {
    for (int a : {1, 2, 4})
        for (const auto& row : cartan_splitting_check(a, 6, 9)) {
            CHECK(row.dim_power == row.dim_sum);
            CHECK(row.character_ok);
        }
    const auto a1 = cartan_splitting_check(1, 3);
    CHECK(a1[3].dim_power == 28);
    CHECK(a1[0].dim_power == 1);
    CHECK(cartan_splitting_check(4, 1)[1].dim_sum == 15);
}
