#include <set>

#include "doctest.h"
#include "sevlab/cominuscule.hpp"
#include "sevlab/datasets.hpp"
#include "sevlab/error.hpp"
#include "sevlab/lie.hpp"
#include "sevlab/simplicial.hpp"

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

std::vector<BigInt> big(std::initializer_list<long> xs) {
    std::vector<BigInt> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

std::vector<BigInt> tail(const FVector& fv) { return {fv.f.begin() + 1, fv.f.end()}; }

SimplicialComplex simplex_boundary(int n) {
    std::vector<std::vector<int>> facets;
    for (int skip = 1; skip <= n; ++skip) {
        std::vector<int> f;
        for (int v = 1; v <= n; ++v)
            if (v != skip) f.push_back(v);
        facets.push_back(f);
    }
    return SimplicialComplex(n, facets);
}

const std::vector<BigInt> kRp2 = big({6, 15, 10});
const std::vector<BigInt> kCp2 = big({9, 36, 84, 90, 36});
const std::vector<BigInt> kHp2 = big({15, 105, 455, 1365, 3003, 4515, 4230, 2205, 490});
const std::vector<BigInt> kOp2 = big({27, 351, 2925, 17550, 80730, 296010, 888030, 2220075, 4686825, 8335899,
                                      12184614, 14074164, 12301200, 7757100, 3309696, 853281, 100386});

}  // namespace

TEST_CASE("face vectors") {
    CHECK(tail(f_vector(SimplicialComplex(3, {{1, 2, 3}}))) == big({3, 3, 1}));
    CHECK(tail(f_vector(*dataset("RP2_min").complex)) == kRp2);
    CHECK(tail(f_vector(*dataset("CP2_min").complex)) == kCp2);
}

TEST_CASE("h vectors") {
    CHECK(h_from_f(make_fvector(big({3, 3}))).h == std::vector<Rational>{1, 1, 1});
    CHECK(h_from_f(make_fvector(kRp2)).h == std::vector<Rational>{1, 3, 6, 0});
    const auto h = h_from_f(make_fvector(kCp2)).h;
    CHECK(h[5] - h[0] == Rational(1));
    for (int n = 3; n <= 8; ++n) {
        const auto hb = h_from_f(f_vector(simplex_boundary(n))).h;
        for (const auto& x : hb) CHECK(x == Rational(1));
    }
}

TEST_CASE("klee solver reproduces the face tables") {
    CHECK(tail(klee_solve(1)) == kRp2);
    CHECK(tail(klee_solve(2)) == kCp2);
    CHECK(tail(klee_solve(4)) == kHp2);
    CHECK(tail(klee_solve(8)) == kOp2);
    for (int a : {1, 2, 4, 8}) {
        const auto fv = klee_solve(a);
        // The pseudomanifold relation (d+1) f_d = 2 f_{d-1}.
        CHECK(BigInt(fv.d + 1) * fv.at(fv.d) == 2 * fv.at(fv.d - 1));
        for (int k = 0; k <= a; ++k) CHECK(fv.at(k) == binomial(3 * a + 3, k + 1));
        const auto seq = identify_interval(cominuscule_pair(a));
        for (int k = 0; k <= 2 * a; ++k) CHECK(fv.at(k) == seq.dim(k + 1));
    }
}

TEST_CASE("manifold properties") {
    const auto cp2 = check_manifold_properties(*dataset("CP2_min").complex, 2);
    CHECK(cp2.tight);
    CHECK(cp2.dual);
    CHECK(cp2.defective);
    CHECK(cp2.pseudomanifold);
    CHECK(cp2.euler == 3);
    const auto rp2 = check_manifold_properties(*dataset("RP2_min").complex, 1);
    CHECK(rp2.tight);
    CHECK(rp2.dual);
    CHECK(rp2.defective);
    CHECK(rp2.pseudomanifold);
    CHECK(rp2.euler == 1);
    CHECK_FALSE(check_manifold_properties(SimplicialComplex(3, {{1, 2, 3}}), 1).pseudomanifold);
    CHECK_FALSE(check_manifold_properties(simplex_boundary(6), 1).dual);
    CHECK(code_of([] { (void)check_manifold_properties(SimplicialComplex(4, {{1, 2, 3}, {3, 4}}), 1); }) ==
          ErrorCode::NotPure);
}

TEST_CASE("vertex links") {
    CHECK(tail(link_f_vectors(1)) == big({5, 5}));
    CHECK(tail(link_f_vectors(2)) == big({8, 28, 40, 20}));
    CHECK(tail(link_f_vectors(4)) == big({14, 91, 364, 1001, 1806, 1974, 1176, 294}));
    CHECK(tail(link_f_vectors(8)) == big({26, 325, 2600, 14950, 65780, 230230, 657800, 1562275, 3087370, 4964102,
                                          6255184, 5922800, 4022200, 1838720, 505648, 63206}));
    for (auto [name, a] : {std::pair{"RP2_min", 1}, std::pair{"CP2_min", 2}}) {
        const auto c = *dataset(name).complex;
        for (int v = 1; v <= c.n_vertices(); ++v) {
            auto fv = f_vector(vertex_link(c, v));
            fv.f.erase(std::remove(fv.f.begin() + 1, fv.f.end(), BigInt(0)), fv.f.end());
            CHECK(tail(fv) == tail(link_f_vectors(a)));
        }
    }
    const long expected[] = {5, 20, 294, 63206};
    const char* so[] = {"B2", "D3", "D4", "D6"};
    const int as[] = {1, 2, 4, 8};
    for (int i = 0; i < 4; ++i) {
        const auto rs = root_system_from_label(so[i]);
        Weight w(static_cast<std::size_t>(rs.rank()), 0);
        w[0] = as[i];
        CHECK(link_facet_formula(as[i]) == expected[i]);
        CHECK(weyl_dim(rs, w) == expected[i]);
        CHECK(link_f_vectors(as[i]).f.back() == expected[i]);
    }
}

TEST_CASE("h double prime") {
    CHECK(h_doubleprime(1) == big({1, 3, 1}));
    CHECK(h_doubleprime(2)[1] == 4);
    for (int a : {1, 2, 4, 8}) {
        const auto h = h_doubleprime(a);
        CHECK(h.front() == 1);
        CHECK(std::equal(h.begin(), h.end(), h.rbegin()));
    }
}

TEST_CASE("automorphisms") {
    const auto cp2 = *dataset("CP2_min").complex;
    std::vector<Permutation> gens;
    for (const auto& [n, p] : dataset("CP2_generators").generators) gens.push_back(p);
    const auto h = verify_automorphisms(cp2, {gens[0], gens[1]});
    CHECK(h.group.order() == 9);
    CHECK(h.transitive);
    CHECK(h.facet_orbits.size() == 4);
    for (const auto& o : h.facet_orbits) CHECK(o.size() == 9);
    CHECK(verify_automorphisms(cp2, gens).group.order() == 18);
    const auto full = full_automorphism_group(cp2);
    CHECK(full.order() == 54);
    for (const auto& g : gens) CHECK(full.contains(g));
    CHECK(full.is_transitive());

    const auto rp2 = *dataset("RP2_min").complex;
    CHECK(verify_automorphisms(rp2, {Permutation(6)}).group.order() == 1);
    CHECK(full_automorphism_group(rp2).order() == 60);
    CHECK(code_of([&] { (void)verify_automorphisms(rp2, {Permutation::from_cycles("(12)", 6)}); }) ==
          ErrorCode::NotAnAutomorphism);
    CHECK(code_of([&] { (void)full_automorphism_group(simplex_boundary(11)); }) == ErrorCode::TooLarge);

    std::vector<Permutation> induced;
    for (const auto& [n, p] : dataset("HP2_generators").generators) induced.push_back(induced_pair_action(p));
    const auto a5 = group_closure(induced, 1000);
    CHECK(a5.order() == 60);
    CHECK(a5.is_transitive());
}

TEST_CASE("text format") {
    const auto cp2 = *dataset("CP2_min").complex;
    const auto back = from_text(to_text(cp2));
    CHECK(back.facets() == cp2.facets());
    CHECK(code_of([] { (void)from_text("1 2 3\n"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { (void)from_text("n_vertices=3\n1 2 x\n"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { (void)from_text("n_vertices=3\n1 2 4\n"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { (void)SimplicialComplex(4, {{1, 2, 3}, {1, 2}}); }) == ErrorCode::ParseError);
}

TEST_CASE("datasets") {
    const auto cp2 = dataset("CP2_min");
    CHECK(cp2.complex->facets().size() == 36);
    for (const auto& f : cp2.complex->facets()) CHECK(f.size() == 5);
    CHECK(code_of([] { (void)dataset("OP2_min"); }) == ErrorCode::UnknownDataset);

    std::set<int> m1;
    for (const auto& l : dataset("HP2_M1").labels) m1.insert(pair_vertex(l[1] - '0', l[2] - '0'));
    CHECK(m1 == std::set<int>{3, 4, 7, 10, 11, 12, 13, 14, 15});

    // tau acts on labels as the transpose, H as cyclic shifts of both indices.
    const auto dict = dataset("CP2_dictionary").dictionary;
    const auto gens = dataset("CP2_generators").generators;
    std::map<std::string, int> vertex_of;
    for (const auto& [v, l] : dict) vertex_of[l] = v;
    const auto& tau = gens[2].second;
    for (const auto& [v, l] : dict) CHECK(dict.at(tau(v)) == std::string{'(', l[2], l[1], ')'});
    for (int g = 0; g < 2; ++g) {
        // Each generator must shift exactly one index by a fixed 3-cycle.
        std::set<std::pair<int, int>> shifts;
        for (const auto& [v, l] : dict) {
            const auto& img = dict.at(gens[g].second(v));
            shifts.insert({(img[1] - l[1] + 3) % 3, (img[2] - l[2] + 3) % 3});
        }
        CHECK(shifts.size() == 1);
    }

    for (const auto& name : dataset_names()) {
        const auto d = dataset(name);
        CHECK_FALSE(d.provenance.empty());
        CHECK(dataset_json(d)["name"] == name);
    }
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("dataset digests are frozen") {
    const std::map<std::string, std::string> frozen = {
        {"RP2_min", "08f3a5c4d8609f3bb4a553e156d5aa01b8f7b677c25cc50ec6db3fc2df7bafcb"},
        {"CP2_min", "0242d03f014657ad99a817f08b15ebed6b90c525d11b025f6d83ade2e8630014"},
        {"CP2_dictionary", "a1574fe24ddb5a5a09db3bad779a044a81862ee73808f2f8386599d8432d5271"},
        {"CP2_generators", "ceb3ad0362cd5cd7f84f9c6d88f757e5f3e918e34e44168cab67ec51993e555b"},
        {"HP2_generators", "96a565cf40a83ab11c3739a442f711a9f9e0b8c7030c10a4dc5362600c8089a6"},
        {"HP2_pair_table", "914cd5580d25f6f906c20cfd4b1c58b5afa843f7f85e155ba7c30ec890518bc0"},
        {"HP2_M1", "d89f89a8f3438b78cfceabf00e286ab9429013fd03e8f9d761ce6670948bb8c9"},
    };
    for (const auto& [name, digest] : frozen) {
        CAPTURE(name);
        CHECK(sha256_hex(dataset_text(dataset(name))) == digest);
    }
}
