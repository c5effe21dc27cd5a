#include <cstdlib>
#include <random>
#include <set>

#include "doctest.h"
#include "sevlab/error.hpp"
#include "sevlab/lie.hpp"

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

std::vector<Rational> random_point(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<long> num(1, 9), den(1, 7);
    std::vector<Rational> p;
    for (std::size_t i = 0; i < n; ++i) p.emplace_back(num(rng) * (rng() % 2 ? 1 : -1), den(rng));
    return p;
}

Weight fundamental(int rank, int i, int c = 1) {
    Weight w(static_cast<std::size_t>(rank), 0);
    w[i - 1] = c;
    return w;
}

}  // namespace

TEST_CASE("positive roots agree with reflection closure") {
    struct Case { std::string type; int rank; std::size_t count; };
    for (const auto& c : std::vector<Case>{{"A", 2, 3}, {"A", 5, 15}, {"B", 3, 9}, {"C", 3, 9}, {"D", 3, 6},
                                           {"D", 6, 30}, {"E", 6, 36}, {"E", 7, 63}, {"F", 4, 24}}) {
        auto rs = build_root_system(c.type, c.rank);
        CAPTURE(rs.label());
        CHECK(rs.positive_roots().size() == c.count);
        auto a = rs.positive_roots();
        std::sort(a.begin(), a.end());
        CHECK(a == roots_by_reflection_closure(rs));
        for (int i = 0; i < rs.rank(); ++i) {
            Root simple(static_cast<std::size_t>(rs.rank()), 0);
            simple[i] = 1;
            CHECK(rs.coroot_pairing(rs.rho(), simple) == Rational(1));
        }
    }
    auto f4 = build_root_system("F", 4);
    int long_roots = 0;
    for (const auto& r : f4.positive_roots()) long_roots += f4.norm(r) == Rational(2);
    CHECK(long_roots == 12);
}

TEST_CASE("cartan matrix from ambient vectors") {
    auto c3 = build_root_system("C", 3);
    CHECK(c3.cartan(1, 2) == -1);
    CHECK(c3.cartan(2, 1) == -2);
    auto b3 = build_root_system("B", 3);
    CHECK(b3.cartan(1, 2) == -2);
    auto e6 = build_root_system("E", 6);
    CHECK(e6.cartan(1, 3) == -1);
    CHECK(e6.cartan(0, 2) == -1);
    CHECK(e6.cartan(1, 2) == 0);
    CHECK(code_of([] { (void)build_root_system("G", 2); }) == ErrorCode::UnsupportedType);
    CHECK(code_of([] { (void)build_root_system("E", 8); }) == ErrorCode::UnsupportedType);
}

TEST_CASE("weyl dimension formula") {
    auto a2 = build_root_system("A", 2);
    CHECK(weyl_dim(a2, {3, 0}) == binomial(5, 2));
    CHECK(weyl_dim(a2, {1, 1}) == 8);
    CHECK(weyl_dim(build_root_system("E", 6), fundamental(6, 1, 5)) == 100386);
    CHECK(weyl_dim(build_root_system("D", 6), fundamental(6, 1, 8)) == 63206);
    CHECK(weyl_dim(build_root_system("E", 7), fundamental(7, 7)) == 56);
    auto a5 = build_root_system("A", 5);
    CHECK(weyl_dim(a5, fundamental(5, 3)) == 20);
    CHECK(weyl_dim(a5, fundamental(5, 2)) == 15);
    CHECK(weyl_dim(build_root_system("E", 7), Weight(7, 0)) == 1);
    // Levi restriction ignores labels outside the subset.
    CHECK(weyl_dim(build_root_system("E", 7), {1, 0, 0, 0, 0, 0, -3}, {0, 1, 2, 3, 4, 5}) == 27);
    CHECK(code_of([&] { (void)weyl_dim(a2, {-1, 0}); }) == ErrorCode::NotDominant);
}

TEST_CASE("minuscule orbits reproduce module dimensions") {
    CHECK(build_root_system("E", 6).orbit(fundamental(6, 1)).size() == 27);
    CHECK(build_root_system("E", 7).orbit(fundamental(7, 7)).size() == 56);
    auto a5 = build_root_system("A", 5);
    CHECK(a5.orbit(fundamental(5, 3)).size() == 20);
    CHECK(a5.orbit(fundamental(5, 2)).size() == 15);
}

TEST_CASE("weyl group orders") {
    CHECK(build_root_system("A", 2).weyl_group().size() == 6);
    CHECK(root_system_from_label("A2xA2").weyl_group().size() == 36);
    CHECK(build_root_system("C", 3).weyl_group().size() == 48);
    CHECK(build_root_system("A", 5).weyl_group().size() == 720);
    CHECK(build_root_system("F", 4).weyl_group().size() == 1152);
    CHECK(build_root_system("D", 6).weyl_group().size() == 23040);
    CHECK(build_root_system("E", 6).weyl_group().size() == 51840);
    auto e7 = build_root_system("E", 7);
    CHECK(code_of([&] { (void)e7.weyl_group(); }) == ErrorCode::ClosureCapExceeded);
    auto a2 = build_root_system("A", 2);
    int odd = 0;
    for (const auto& w : a2.weyl_group()) odd += w.sign < 0;
    CHECK(odd == 3);
}

TEST_CASE("character evaluation") {
    auto a2 = build_root_system("A", 2);
    CHECK(char_eval(a2, {1, 0}, {Rational(2), Rational(3), Rational(1, 6)}) == Rational(31, 6));
    CHECK(char_eval(a2, {0, 0}, {Rational(5), Rational(-2)}) == Rational(1));
    CHECK(code_of([&] { (void)char_eval(a2, {1, 0}, {Rational(1), Rational(1), Rational(1)}); }) ==
          ErrorCode::SingularPoint);
    CHECK(code_of([&] { (void)char_eval(a2, {1, 0}, {Rational(0), Rational(2)}); }) == ErrorCode::ZeroSubstitution);

    std::mt19937_64 rng(11);
    auto a5 = build_root_system("A", 5);
    for (int trial = 0; trial < 3; ++trial) {
        auto x = random_point(rng, 5);
        Rational det = 1;
        for (const auto& v : x) det *= v;
        x.push_back(det.inverse());
        Rational e2;
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j) e2 += x[i] * x[j];
        Rational e1 = x[0] + x[1] + x[2] + x[3] + x[4] + x[5];
        auto both = char_eval_many(a5, {fundamental(5, 2), fundamental(5, 1)}, x);
        CHECK(both[0] == e2);
        CHECK(both[1] == e1);
        std::shuffle(x.begin(), x.end(), rng);
        CHECK(char_eval(a5, fundamental(5, 2), x) == e2);
    }
}

TEST_CASE("character is Weyl invariant") {
    std::mt19937_64 rng(3);
    for (const char* label : {"C3", "F4", "D4"}) {
        auto rs = root_system_from_label(label);
        const auto n = static_cast<std::size_t>(rs.rank());
        auto z = random_point(rng, n);
        Weight mu(n, 0);
        mu[0] = 1;
        mu[n - 1] = 1;
        const Rational base = char_eval(rs, mu, z);
        const auto& w = rs.weyl_group()[17];
        std::vector<Rational> moved(n, Rational(1));
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) moved[k] *= z[j].pow(w.matrix[j * n + k]);
        CAPTURE(label);
        CHECK(char_eval(rs, mu, moved) == base);
    }
}

TEST_CASE("freudenthal multiplicities") {
    auto a2 = build_root_system("A", 2);
    auto adj = freudenthal_weights(a2, {1, 1});
    CHECK(adj.multiplicities.at({0, 0}) == 2);
    CHECK(adj.dimension == 8);
    auto triv = freudenthal_weights(a2, {0, 0});
    CHECK(triv.multiplicities.size() == 1);
    auto e6 = build_root_system("E", 6);
    auto minus = freudenthal_weights(e6, fundamental(6, 1));
    CHECK(full_character(e6, minus).size() == 27);
    for (const auto& [w, m] : full_character(e6, minus)) CHECK(m == 1);

    // Summing the full character at a point must agree with the alternant ratio.
    auto c3 = build_root_system("C", 3);
    const Weight mu{1, 2, 1};
    auto full = full_character(c3, freudenthal_weights(c3, mu));
    const std::vector<Rational> z{Rational(2), Rational(-3, 5), Rational(7, 4)};
    Rational sum;
    for (const auto& [w, m] : full) {
        Rational term(m);
        for (std::size_t i = 0; i < 3; ++i) term *= z[i].pow(w[i]);
        sum += term;
    }
    CHECK(sum == char_eval(c3, mu, z));

    setenv("SEVLAB_BUDGET", "100", 1);
    CHECK(code_of([&] { (void)freudenthal_weights(c3, mu); }) == ErrorCode::BudgetExceeded);
    unsetenv("SEVLAB_BUDGET");
    CHECK(code_of([&] { (void)freudenthal_weights(a2, {1, -1}); }) == ErrorCode::NotDominant);
}

TEST_CASE("diagram involutions and duals") {
    auto a2 = build_root_system("A", 2);
    CHECK(levi_dual(a2, {}, {3, 0}) == Weight{0, 3});
    CHECK(levi_dual(a2, {}, {1, 1}) == Weight{1, 1});
    auto e6 = build_root_system("E", 6);
    CHECK(diagram_involution(e6) == std::vector<int>{5, 1, 4, 3, 2, 0});
    CHECK(levi_dual(e6, {}, fundamental(6, 1)) == fundamental(6, 6));
    CHECK(diagram_involution(build_root_system("C", 3)) == std::vector<int>{0, 1, 2});
    CHECK(diagram_involution(build_root_system("D", 6)) == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(diagram_involution(build_root_system("D", 5)) == std::vector<int>{0, 1, 2, 4, 3});

    // Levi A5 inside D6 reverses nodes 1..5; the dual's Levi labels follow sigma.
    auto d6 = build_root_system("D", 6);
    const std::vector<int> levi{0, 1, 2, 3, 4};
    CHECK(diagram_involution(d6, levi) == std::vector<int>{4, 3, 2, 1, 0, 5});
    const Weight mu{2, 0, 1, 0, 0, -3};
    const Weight dual = levi_dual(d6, levi, mu);
    CHECK(Weight(dual.begin(), dual.begin() + 5) == Weight{0, 0, 1, 0, 2});
    CHECK(weyl_dim(d6, dual, levi) == weyl_dim(d6, mu, levi));

    std::mt19937_64 rng(5);
    for (int t = 0; t < 3; ++t) {
        Weight m(6);
        for (auto& x : m) x = static_cast<int>(rng() % 3);
        CHECK(weyl_dim(e6, levi_dual(e6, {}, m)) == weyl_dim(e6, m));
    }
    CHECK(code_of([&] { (void)levi_dual(a2, {}, {-1, 0}); }) == ErrorCode::NotDominant);
}
