#include <random>
#include <set>

#include "doctest.h"
#include "sevlab/cominuscule.hpp"
#include "sevlab/datasets.hpp"
#include "sevlab/error.hpp"
#include "sevlab/wedge.hpp"

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

WedgeVector sum(WedgeVector x, const WedgeVector& y, const Rational& c = Rational(1)) {
    for (const auto& [m, v] : y.coords) x.add(m, c * v);
    return x;
}

std::vector<std::vector<Rational>> coordinate_forms(std::size_t n) {
    std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) out[i][i] = Rational(1);
    return out;
}

}  // namespace

TEST_CASE("wedge operators satisfy the sl2 relations on every monomial") {
    // [e_i, f_j] acts as delta_ij times the i-th Dynkin label of the weight.
    for (int a : {1, 2, 4}) {
        const auto model = wedge_model(a);
        const int n = static_cast<int>(model.labels.size());
        for (int k : {1, 2, 3}) {
            for (const auto& v : standard_basis(n, k)) {
                const auto dyn = model.dynkin(model.weight(v.coords.begin()->first));
                for (std::size_t i = 0; i < model.raising.size(); ++i)
                    for (std::size_t j = 0; j < model.lowering.size(); ++j) {
                        const auto ef = raising(model, static_cast<int>(i), lowering(model, static_cast<int>(j), v));
                        const auto fe = lowering(model, static_cast<int>(j), raising(model, static_cast<int>(i), v));
                        const auto comm = sum(ef, fe, Rational(-1));
                        const auto expected = i == j ? sum(WedgeVector{k, {}}, v, Rational(dyn[i])) : WedgeVector{k, {}};
                        CHECK(comm == expected);
                    }
            }
        }
    }
}

TEST_CASE("lowering examples") {
    const auto m1 = wedge_model(1);
    CHECK(m1.labels == std::vector<std::string>{"11", "12", "13", "22", "23", "33"});
    const auto e21_11 = lowering(m1, 0, parse_wedge(m1, "(11)"));
    CHECK(e21_11 == parse_wedge(m1, "2(12)"));
    const auto top = parse_wedge(m1, "(11)(12)(13)");
    CHECK(lowering(m1, 0, top) == parse_wedge(m1, "(11)(12)(23)+(11)(22)(13)"));
    CHECK(lowering(m1, 0, WedgeVector{3, {}}).is_zero());

    const auto m2 = wedge_model(2);
    const auto v = parse_wedge(m2, "(11)(12)(13)(21)(31)");
    for (int op = 0; op < 4; ++op) {
        const auto w = lowering(m2, op, v);
        // alpha_2 of each factor kills the highest weight vector.
        CHECK(w.is_zero() == (op % 2 == 1));
        if (w.is_zero()) continue;
        std::set<std::vector<int>> weights;
        for (const auto& [m, c] : w.coords) weights.insert(m2.weight(m));
        CHECK(weights.size() == 1);
        const auto& w0 = *weights.begin();
        CHECK(w0[0] + w0[1] + w0[2] == 5);
        CHECK(w0[3] + w0[4] + w0[5] == 5);
    }
}

TEST_CASE("parse and format") {
    const auto m = wedge_model(1);
    const auto v = parse_wedge(m, "(12)(11)");
    CHECK(v == parse_wedge(m, "-(11)(12)"));
    CHECK(format_wedge(m, parse_wedge(m, "(11)(22)(33)+2(12)(23)(13)")) == "-2(12)(13)(23) + (11)(22)(33)");
    CHECK(code_of([&] { (void)parse_wedge(m, "(11)(11)"); }) == ErrorCode::ParseError);
    CHECK(code_of([&] { (void)parse_wedge(m, "(11)+(12)(13)"); }) == ErrorCode::ParseError);
    CHECK(code_of([&] { (void)parse_wedge(m, "(44)"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { (void)wedge_model(8); }) == ErrorCode::UnsupportedCase);
}

TEST_CASE("wedge and contraction signs") {
    const auto m = wedge_model(4);
    const auto x = parse_wedge(m, "(12)(34)");
    const auto y = parse_wedge(m, "(13)");
    CHECK(wedge(x, y) == parse_wedge(m, "(12)(34)(13)"));
    CHECK(wedge(x, y) == parse_wedge(m, "-(12)(13)(34)"));
    CHECK(wedge(x, x).is_zero());
    // Contraction is an antiderivation: i(x ^ y) = i(x) ^ y + (-1)^|x| x ^ i(y).
    std::vector<Rational> phi(15);
    for (int i = 0; i < 15; ++i) phi[static_cast<std::size_t>(i)] = Rational(i * i - 3 * i + 1);
    const auto lhs = contract(phi, wedge(x, y));
    const auto rhs = sum(wedge(contract(phi, x), y), wedge(x, contract(phi, y)));
    CHECK(lhs == rhs);
}

TEST_CASE("module generation") {
    const auto m1 = wedge_model(1);
    const auto l3 = generate_module(m1, parse_wedge(m1, "(11)(12)(13)"));
    CHECK(l3.dim() == 10);
    CHECK(l3.by_weight.size() == 10);
    CHECK(generate_module(m1, parse_wedge(m1, "(11)")).dim() == 6);

    const auto m2 = wedge_model(2);
    CHECK(generate_module(m2, parse_wedge(m2, "(11)(12)(13)(21)(31)")).dim() == 36);

    CHECK(code_of([&] { (void)generate_module(m1, parse_wedge(m1, "(12)(22)(13)")); }) ==
          ErrorCode::NotHighestWeight);
    CHECK(code_of([&] { (void)generate_module(m1, parse_wedge(m1, "(22)")); }) == ErrorCode::NotHighestWeight);
    CHECK(code_of([&] { (void)generate_module(m1, parse_wedge(m1, "(11)+(12)")); }) == ErrorCode::NotHighestWeight);
}

TEST_CASE("degree-3 diagram") {
    const auto m = wedge_model(1);
    const auto l3 = generate_module(m, parse_wedge(m, "(11)(12)(13)"));
    const auto supports = diagram_supports(l3);
    CHECK(supports.size() == 10);
    std::set<std::vector<int>> covered;
    for (const auto& entry : rp2_diagram()) {
        const auto expected = parse_wedge(m, entry.expression);
        INFO(entry.expression);
        CHECK(matches_weight_vector(l3, m, expected));
        covered.insert(m.weight(expected.coords.begin()->first));
    }
    CHECK(covered.size() == 10);
    CHECK_FALSE(matches_weight_vector(l3, m, parse_wedge(m, "(11)(22)(33)+(12)(23)(13)")));

    const auto rp2 = *dataset("RP2_min").complex;
    const auto sel = bold_selection(l3, rp2);
    CHECK(sel.equals_facets);
    std::set<Monomial> bold;
    for (const auto& entry : rp2_diagram()) bold.insert(parse_wedge(m, entry.bold).coords.begin()->first);
    CHECK(std::set<Monomial>(sel.selected.begin(), sel.selected.end()) == bold);
    CHECK(bold.count(parse_wedge(m, "(12)(22)(23)").coords.begin()->first));

    // A 10-facet complex that misses a bold monomial.
    std::vector<std::vector<int>> other;
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 5; ++j) other.push_back({i, j, 6});
    CHECK(other.size() == 10);
    CHECK(code_of([&] { (void)bold_selection(l3, SimplicialComplex(6, other)); }) == ErrorCode::SelectionMissing);

    CHECK(code_of([] {
              // wedge^2 S^2 C^3 has a two-dimensional weight space at (2,1,1).
              const auto m1 = wedge_model(1);
              (void)diagram_supports(generate_module(m1, parse_wedge(m1, "(11)(12)")));
          }) == ErrorCode::MultiplicityNotFree);
}

TEST_CASE("contractions") {
    const auto m = wedge_model(1);
    std::vector<WedgeVector> bold;
    for (const auto& entry : rp2_diagram()) bold.push_back(parse_wedge(m, entry.bold));
    CHECK(contraction_image_rank(bold, coordinate_forms(6)) == 15);
    CHECK(contraction_rank(bold, std::vector<Rational>(6, Rational(0))) == 0);

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dist(-9, 9);
    for (int n : {6, 9}) {
        std::vector<Rational> phi(static_cast<std::size_t>(n));
        for (auto& x : phi) x = Rational(dist(rng));
        phi[0] = Rational(5);
        std::vector<std::size_t> ranks;
        for (int k = 0; k <= n; ++k) ranks.push_back(contraction_rank(standard_basis(n, k), phi));
        for (int k = 0; k < n; ++k)
            CHECK(BigInt(static_cast<unsigned long>(ranks[static_cast<std::size_t>(k)] +
                                                    ranks[static_cast<std::size_t>(k) + 1])) == binomial(n, k));
        if (n == 6) CHECK(ranks[3] == 10);
    }
}

TEST_CASE("images of L3 match the cominuscule constituents") {
    const auto m = wedge_model(1);
    const auto seq = identify_interval(cominuscule_pair(1));
    auto space = generate_module(m, parse_wedge(m, "(11)(12)(13)")).basis();
    for (int k = 3; k >= 1; --k) {
        CHECK(BigInt(static_cast<unsigned long>(space.size())) == seq.dim(k));
        space = contraction_image(space, coordinate_forms(6));
    }
    BigInt alternating = 0;
    for (int a : {1, 2}) {
        const auto s = identify_interval(cominuscule_pair(a));
        alternating = 0;
        for (int k = 1; k <= 2 * a + 1; ++k) alternating += (k % 2 ? -1 : 1) * s.dim(k);
        CHECK(alternating == (a == 1 ? -1 : -3));
    }
}

TEST_CASE("defectivity") {
    const auto d1 = defectivity_check(1);
    CHECK(d1.highest_weight == std::vector<int>{3, 3, 0});
    CHECK(d1.dim == 10);
    CHECK(d1.vanishes);
    const auto d2 = defectivity_check(2);
    CHECK(d2.highest_weight == std::vector<int>{2, 2, 0, 2, 2, 0});
    CHECK(d2.dim == 36);
    CHECK(d2.vanishes);
    CHECK(code_of([] { (void)defectivity_check(4); }) == ErrorCode::UnsupportedCase);

    const auto m = wedge_model(4);
    CHECK_FALSE(wedge(parse_wedge(m, "(12)(34)(56)"), parse_wedge(m, "(13)(24)(15)")).is_zero());
}

TEST_CASE("CP2 matching") {
    const auto r = cp2_match();
    CHECK(r.highest_facet == std::vector<int>{3, 4, 6, 8, 9});
    CHECK(r.decomposables == 9);
    CHECK(r.decomposables_are_facets);
    CHECK(r.weight_orbits == 4);
    CHECK(r.facet_orbits == 4);
    CHECK(r.orbits_correspond);
    CHECK(r.supports_ok);
    CHECK(r.support_sizes.size() == 36);
    CHECK(r.twisted_ok);
    CHECK(r.h_is_a3xa3);
    CHECK(r.tau_is_transpose);
    CHECK(r.ok());
}

TEST_CASE("M1 weight") {
    const auto r = m1_weight_check();
    CHECK(r.weight == std::vector<int>{5, 5, 2, 2, 2, 2});
    CHECK(r.highest);
    const auto m = wedge_model(4);
    CHECK(m.weight(parse_wedge(m, "(25)").coords.begin()->first) == std::vector<int>{0, 1, 0, 0, 1, 0});
}
