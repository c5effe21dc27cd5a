#include <random>

#include "doctest.h"
#include "sevlab/error.hpp"
#include "sevlab/laurent.hpp"
#include "sevlab/linalg.hpp"
#include "sevlab/permutation.hpp"
#include "sevlab/rational.hpp"

using namespace sevlab;

namespace {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-50, 50), den(1, 40);
    return Rational(num(rng), den(rng));
}

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

TEST_CASE("rational canonical form") {
    Rational r(6, -4);
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("7").is_integer());
    CHECK(code_of([] { (void)(Rational(1) / Rational(0)); }) == ErrorCode::SingularPoint);
    CHECK(code_of([] { (void)Rational(1, 3).to_integer(); }) == ErrorCode::NonIntegerResult);
    CHECK(binomial(30, 15) == BigInt("155117520"));
    CHECK(ipow(BigInt(2), 91) == BigInt("2475880078570760549798248448"));
}

TEST_CASE("rational field axioms on random triples") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        const Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("laurent evaluation") {
    auto t = LaurentPoly::monomial({"t"}, {1});
    auto p = t + LaurentPoly::monomial({"t"}, {-1});
    CHECK(p.eval({{"t", Rational(2)}}) == Rational(5, 2));
    CHECK(LaurentPoly::constant({"x"}, 3).eval({{"x", Rational(11, 5)}}) == Rational(3));
    auto q = LaurentPoly::monomial({"x", "y"}, {1, -1}) - LaurentPoly::constant({"x", "y"}, 1);
    CHECK(q.eval({{"x", Rational(7)}, {"y", Rational(7)}}).is_zero());
    CHECK(code_of([&] { (void)p.eval({{"t", Rational(0)}}); }) == ErrorCode::ZeroSubstitution);
    CHECK((p * p).coefficient({0}) == Rational(2));
}

TEST_CASE("exact linear algebra") {
    RationalMatrix a(3, 2);
    a(0, 0) = 1; a(0, 1) = 1;
    a(1, 0) = 1; a(1, 1) = -1;
    a(2, 0) = 2; a(2, 1) = 0;
    auto sol = solve_exact(a, {Rational(3), Rational(1), Rational(4)});
    CHECK(sol.values[0] == Rational(2));
    CHECK(sol.values[1] == Rational(1));
    CHECK(code_of([&] { (void)solve_exact(a, {Rational(3), Rational(1), Rational(5)}); }) ==
          ErrorCode::InconsistentSystem);
    RationalMatrix m(2, 2);
    m(0, 0) = 2; m(0, 1) = 1; m(1, 0) = 1; m(1, 1) = 1;
    CHECK(m * m.inverse() == RationalMatrix::identity(2));

    SparseEchelon<int> ech;
    CHECK(ech.insert({{1, Rational(2)}, {3, Rational(1)}}).has_value());
    CHECK(ech.insert({{3, Rational(1)}}).has_value());
    CHECK(ech.contains({{1, Rational(1)}}));
    CHECK_FALSE(ech.insert({{1, Rational(5)}, {3, Rational(-2)}}).has_value());
    CHECK(ech.rank() == 2);
}

TEST_CASE("permutation basics") {
    auto p = Permutation::from_cycles("(123)", 4);
    CHECK(p(1) == 2);
    CHECK(p(3) == 1);
    CHECK(p.order() == 3);
    CHECK((p * p.inverse()).is_identity());
    auto q = Permutation::from_cycles("(12)", 4);
    CHECK((p * q)(1) == 3);  // q first
    CHECK(Permutation::from_cycles("(1,10)(2,3)", 10).cycle_string() == "(1,10)(2,3)");
    CHECK(code_of([] { (void)Permutation::from_cycles("(11)", 3); }) == ErrorCode::ParseError);
}

TEST_CASE("group closure") {
    CHECK(group_closure({Permutation(6)}, 10).order() == 1);
    auto h = group_closure({Permutation::from_cycles("(147)(258)(369)", 9),
                            Permutation::from_cycles("(123)(456)(789)", 9)},
                           1000);
    CHECK(h.order() == 9);
    CHECK(h.is_transitive());
    auto a5 = group_closure({Permutation::from_cycles("(23456)", 6), Permutation::from_cycles("(36)(45)", 6),
                             Permutation::from_cycles("(156)(243)", 6), Permutation::from_cycles("(36)(12)", 6)},
                            1000);
    CHECK(a5.order() == 60);
    for (const auto& g : a5.generators()) CHECK(a5.order() % g.order() == 0);
    for (const auto& x : a5.elements()) CHECK(a5.contains(x.inverse()));
    CHECK(code_of([&] { (void)group_closure(a5.generators(), 59); }) == ErrorCode::ClosureCapExceeded);
    CHECK(code_of([] {
              (void)group_closure({Permutation(3), Permutation(4)}, 10);
          }) == ErrorCode::DegreeMismatch);
}

TEST_CASE("orbits partition the domain") {
    auto triv = group_closure({}, 1, 4);
    CHECK(orbits(triv).size() == 4);
    auto g = group_closure({Permutation::from_cycles("(12)", 3)}, 10);
    CHECK(orbits(g) == std::vector<std::vector<int>>{{1, 2}, {3}});
    std::vector<PointSet> pairs{{1, 2}, {1, 3}, {2, 3}};
    auto o = orbits(g, pairs);
    CHECK(o.size() == 2);
    CHECK(code_of([&] { (void)orbits(g, std::vector<PointSet>{{1, 3}}); }) == ErrorCode::DegreeMismatch);
}
