#include "sevlab/suite.hpp"

#include <set>
#include <sstream>

#include "sevlab/branching.hpp"
#include "sevlab/cominuscule.hpp"
#include "sevlab/datasets.hpp"
#include "sevlab/error.hpp"
#include "sevlab/highrank.hpp"
#include "sevlab/simplicial.hpp"
#include "sevlab/wedge.hpp"

namespace sevlab {

namespace {

std::vector<BigInt> big(std::initializer_list<long> xs) {
    std::vector<BigInt> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

// Face-number columns of the minimal triangulations, f_0 first.
std::vector<BigInt> face_table(int a) {
    switch (a) {
        case 1: return big({6, 15, 10});
        case 2: return big({9, 36, 84, 90, 36});
        case 4: return big({15, 105, 455, 1365, 3003, 4515, 4230, 2205, 490});
        default:
            return big({27, 351, 2925, 17550, 80730, 296010, 888030, 2220075, 4686825, 8335899, 12184614, 14074164,
                        12301200, 7757100, 3309696, 853281, 100386});
    }
}

// Vertex-link face numbers, f_0 first.
std::vector<BigInt> link_table(int a) {
    switch (a) {
        case 1: return big({5, 5});
        case 2: return big({8, 28, 40, 20});
        case 4: return big({14, 91, 364, 1001, 1806, 1974, 1176, 294});
        default:
            return big({26, 325, 2600, 14950, 65780, 230230, 657800, 1562275, 3087370, 4964102, 6255184, 5922800,
                        4022200, 1838720, 505648, 63206});
    }
}

template <class T>
std::string list_str(const std::vector<T>& xs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
    return os.str();
}

std::vector<BigInt> tail(const FVector& fv) { return {fv.f.begin() + 1, fv.f.end()}; }

std::string yes(bool b) { return b ? "true" : "false"; }

CheckResult compare(const std::string& expected, const std::string& actual) {
    return {expected, actual, expected == actual};
}

std::vector<std::vector<Rational>> coordinate_forms(std::size_t n) {
    std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) out[i][i] = Rational(1);
    return out;
}

std::string suffix(int a) { return ".a" + std::to_string(a); }

void add_faces(std::vector<Check>& out) {
    for (int a : {1, 2, 4, 8}) {
        out.push_back({"faces.klee" + suffix(a), "core", 1, false, [a] {
                           return compare(list_str(face_table(a)), list_str(tail(klee_solve(a))));
                       }});
        out.push_back({"faces.kostant" + suffix(a), "core", 1, false, [a] {
                           const auto seq = identify_interval(cominuscule_pair(a));
                           std::vector<BigInt> dims;
                           for (int k = 1; k <= 2 * a + 1; ++k) dims.push_back(seq.dim(k));
                           return compare(list_str(face_table(a)), list_str(dims));
                       }});
    }
}

void add_kostant(std::vector<Check>& out) {
    for (int a : {1, 2, 4, 8}) {
        out.push_back({"kostant.completeness" + suffix(a), "core", 2, false, [a] {
                           const auto pair = cominuscule_pair(a);
                           const int n = 3 * a + 3;
                           BigInt total = 0;
                           bool per_degree = true;
                           for (int k = 0; k <= n; ++k) {
                               BigInt s = 0;
                               for (const auto& c : wedge_decomposition(pair, k)) s += c.dim;
                               per_degree = per_degree && s == binomial(n, k);
                               total += s;
                           }
                           const std::string expected = ipow(2, static_cast<unsigned long>(n)).get_str();
                           return CheckResult{expected + " per-degree=true",
                                              total.get_str() + " per-degree=" + yes(per_degree),
                                              per_degree && total.get_str() == expected};
                       }});
    }
}

void add_structure(std::vector<Check>& out) {
    for (int a : {1, 2, 4, 8}) {
        out.push_back({"structure" + suffix(a), "core", 3, false, [a] {
                           const auto r = check_structure(cominuscule_pair(a));
                           const bool half = 2 * r.interval_size + 2 == r.n_ideals;
                           std::ostringstream act;
                           act << "tight=" << yes(r.tightness) << " dual=" << yes(r.duality)
                               << " edges=" << yes(r.edges) << " |I|=" << r.interval_size
                               << " ideals=" << r.n_ideals;
                           if (r.counts) act << " counts=" << list_str(r.component_counts);
                           return CheckResult{"all structure checks pass, |I|=(#ideals-2)/2", act.str(),
                                              r.ok() && half};
                       }});
    }
}

void add_cp2(std::vector<Check>& out) {
    out.push_back({"cp2.fvector", "triangulations", 4, false, [] {
                       const auto c = *dataset("CP2_min").complex;
                       return compare("36 facets; 9,36,84,90,36", std::to_string(c.facets().size()) + " facets; " +
                                                                       list_str(tail(f_vector(c))));
                   }});
    out.push_back({"cp2.properties", "triangulations", 4, false, [] {
                       const auto p = check_manifold_properties(*dataset("CP2_min").complex, 2);
                       return compare("tight dual defective pseudomanifold chi=3",
                                      std::string(p.tight ? "tight " : "") + (p.dual ? "dual " : "") +
                                          (p.defective ? "defective " : "") +
                                          (p.pseudomanifold ? "pseudomanifold " : "") + "chi=" + p.euler.get_str());
                   }});
    out.push_back({"cp2.generator_closure", "triangulations", 4, false, [] {
                       const auto c = *dataset("CP2_min").complex;
                       std::vector<Permutation> gens;
                       for (const auto& [n, p] : dataset("CP2_generators").generators) gens.push_back(p);
                       const auto g = verify_automorphisms(c, gens).group.order();
                       return CheckResult{">=54", std::to_string(g), g >= 54};
                   }});
    out.push_back({"cp2.full_group", "triangulations", 4, false, [] {
                       const auto g = full_automorphism_group(*dataset("CP2_min").complex);
                       return compare("54 transitive", std::to_string(g.order()) +
                                                           (g.is_transitive() ? " transitive" : " intransitive"));
                   }});
    out.push_back({"cp2.h_orbits", "triangulations", 4, false, [] {
                       const auto gens = dataset("CP2_generators").generators;
                       const auto h = verify_automorphisms(*dataset("CP2_min").complex, {gens[0].second, gens[1].second});
                       std::vector<std::size_t> sizes;
                       for (const auto& o : h.facet_orbits) sizes.push_back(o.size());
                       return compare("order=9 transitive orbits=9,9,9,9",
                                      "order=" + std::to_string(h.group.order()) +
                                          (h.transitive ? " transitive" : " intransitive") +
                                          " orbits=" + list_str(sizes));
                   }});
    out.push_back({"cp2.dictionary", "triangulations", 4, false, [] {
                       const auto r = cp2_match();
                       std::string facet;
                       for (int v : r.highest_facet) facet += std::to_string(v);
                       std::set<std::size_t> sizes(r.support_sizes.begin(), r.support_sizes.end());
                       bool sizes_ok = r.support_sizes.size() == 36;
                       for (auto s : sizes) sizes_ok = sizes_ok && (s == 1 || s == 2 || s == 4);
                       return CheckResult{"facet 34689; 36 supports in {1,2,4}, one facet each",
                                          "facet " + facet + "; " + std::to_string(r.support_sizes.size()) +
                                              " supports, sizes " +
                                              list_str(std::vector<std::size_t>(sizes.begin(), sizes.end())) +
                                              ", one facet each=" + yes(r.supports_ok),
                                          facet == "34689" && sizes_ok && r.ok()};
                   }});
}

void add_rp2(std::vector<Check>& out) {
    out.push_back({"rp2.l3_dimension", "core", 5, false, [] {
                       const auto m = wedge_model(1);
                       return compare("10", std::to_string(generate_module(m, parse_wedge(m, "(11)(12)(13)")).dim()));
                   }});
    out.push_back({"rp2.diagram", "core", 5, false, [] {
                       const auto m = wedge_model(1);
                       const auto l3 = generate_module(m, parse_wedge(m, "(11)(12)(13)"));
                       (void)diagram_supports(l3);
                       std::size_t matched = 0;
                       for (const auto& e : rp2_diagram())
                           if (matches_weight_vector(l3, m, parse_wedge(m, e.expression))) ++matched;
                       return compare("10 of 10", std::to_string(matched) + " of " +
                                                      std::to_string(rp2_diagram().size()));
                   }});
    out.push_back({"rp2.bold_selection", "core", 5, false, [] {
                       const auto m = wedge_model(1);
                       const auto l3 = generate_module(m, parse_wedge(m, "(11)(12)(13)"));
                       const auto sel = bold_selection(l3, *dataset("RP2_min").complex);
                       std::set<Monomial> bold;
                       for (const auto& e : rp2_diagram()) bold.insert(parse_wedge(m, e.bold).coords.begin()->first);
                       const bool same = std::set<Monomial>(sel.selected.begin(), sel.selected.end()) == bold;
                       return compare("unique, equals facets, equals bold terms",
                                      std::string("unique") + (sel.equals_facets ? ", equals facets" : "") +
                                          (same ? ", equals bold terms" : ""));
                   }});
    out.push_back({"rp2.contraction_rank", "core", 5, false, [] {
                       const auto m = wedge_model(1);
                       std::vector<WedgeVector> bold;
                       for (const auto& e : rp2_diagram()) bold.push_back(parse_wedge(m, e.bold));
                       return compare("15", std::to_string(contraction_image_rank(bold, coordinate_forms(6))));
                   }});
}

void add_hp2(std::vector<Check>& out) {
    out.push_back({"hp2.group", "triangulations", 6, false, [] {
                       std::vector<Permutation> induced;
                       for (const auto& [n, p] : dataset("HP2_generators").generators)
                           induced.push_back(induced_pair_action(p));
                       const auto g = group_closure(induced, 1000);
                       return compare("order=60 transitive on 15", "order=" + std::to_string(g.order()) +
                                                                       (g.is_transitive() ? " transitive" : " intransitive") +
                                                                       " on " + std::to_string(g.degree()));
                   }});
    out.push_back({"hp2.m1", "triangulations", 6, false, [] {
                       std::set<int> vertices;
                       for (const auto& l : dataset("HP2_M1").labels) vertices.insert(pair_vertex(l[1] - '0', l[2] - '0'));
                       const auto r = m1_weight_check();
                       return compare("9 vertices; weight 5,5,2,2,2,2; highest",
                                      std::to_string(vertices.size()) + " vertices; weight " + list_str(r.weight) +
                                          (r.highest ? "; highest" : "; not highest"));
                   }});
}

void add_links(std::vector<Check>& out) {
    const int so_rank[] = {2, 3, 4, 6};
    const char* so_type[] = {"B", "D", "D", "D"};
    const int as[] = {1, 2, 4, 8};
    for (int i = 0; i < 4; ++i) {
        const int a = as[i];
        const std::string type = so_type[i];
        const int rank = so_rank[i];
        out.push_back({"links" + suffix(a), "triangulations", 7, false, [a, type, rank] {
                           const auto rs = build_root_system(type, rank);
                           Weight w(static_cast<std::size_t>(rank), 0);
                           w[0] = a;
                           const auto table = link_table(a);
                           return compare(list_str(table) + "; formula=" + table.back().get_str() + "=weyl=" + table.back().get_str(),
                                          list_str(tail(link_f_vectors(a))) + "; formula=" +
                                              link_facet_formula(a).get_str() + "=weyl=" + weyl_dim(rs, w).get_str());
                       }});
    }
}

void add_euler(std::vector<Check>& out, std::uint64_t seed) {
    for (int a : {1, 2, 4, 8}) {
        const int points = a == 8 ? 3 : 5;
        out.push_back({"euler" + suffix(a), "characters", a == 8 ? 12 : 8, a == 8, [a, points, seed] {
                           const auto r = euler_check(a, points, seed);
                           std::vector<std::string> vals;
                           for (const auto& v : r.values) vals.push_back(v.str());
                           std::vector<std::string> exp(static_cast<std::size_t>(points), r.expected.str());
                           return CheckResult{join(exp) + "; scheme valid",
                                              join(vals) + (r.scheme_ok ? "; scheme valid" : "; scheme invalid"),
                                              r.ok()};
                       }});
    }
}

void add_invariants(std::vector<Check>& out) {
    for (int a : {1, 2, 4}) {
        out.push_back({"invariants" + suffix(a), "characters", 9, false, [a] {
                           return compare(list_str(expected_invariant_pattern(a, 2)), list_str(invariant_dims(a)));
                       }});
        out.push_back({"invariants.bruteforce" + suffix(a), "characters", 9, false, [a] {
                           return compare(list_str(invariant_dims(a)), list_str(invariant_dims_bruteforce(a)));
                       }});
        for (int n = 2; n <= 4; ++n)
            out.push_back({"invariants.higher" + suffix(a) + ".n" + std::to_string(n), "characters", 9, false,
                           [a, n] {
                               return compare(list_str(expected_invariant_pattern(a, n)),
                                              list_str(higher_invariants(a, n)));
                           }});
    }
}

void add_defectivity(std::vector<Check>& out) {
    for (int a : {1, 2}) {
        out.push_back({"defectivity" + suffix(a), "core", 10, false, [a] {
                           const auto r = defectivity_check(a);
                           return CheckResult{"all pairwise wedges vanish",
                                              std::to_string(r.pairs_checked) + " pairs, dim " +
                                                  std::to_string(r.dim) + (r.vanishes ? ", all vanish" : ", nonzero"),
                                              r.vanishes};
                       }});
    }
    out.push_back({"defectivity.control", "core", 10, false, [] {
                       const auto m = wedge_model(1);
                       const auto w = wedge(parse_wedge(m, "(11)(22)(33)"), parse_wedge(m, "(12)(13)(23)"));
                       return compare("nonzero", w.is_zero() ? "zero" : "nonzero");
                   }});
}

void add_highrank(std::vector<Check>& out) {
    out.push_back({"highrank.completeness", "highrank", 11, false, [] {
                       int bad = 0;
                       for (int a : {1, 2, 4})
                           for (int n = 1; n <= 6; ++n) {
                               const int dj = jordan_dim(a, n);
                               BigInt total = 0;
                               for (int k = 0; k <= dj; ++k)
                                   for (const auto& t : wedge_decomp_highrank(a, n, k)) total += t.dim;
                               if (total != ipow(2, static_cast<unsigned long>(dj))) ++bad;
                           }
                       return compare("0 mismatches", std::to_string(bad) + " mismatches");
                   }});
    out.push_back({"highrank.rank2", "highrank", 11, false, [] {
                       int bad = 0;
                       for (int a : {1, 2, 4}) {
                           const auto pair = cominuscule_pair(a);
                           for (int k = 0; k <= 3 * a + 3; ++k) {
                               std::multiset<BigInt> left, right;
                               for (const auto& t : wedge_decomp_highrank(a, 2, k)) left.insert(t.dim);
                               for (const auto& c : wedge_decomposition(pair, k)) right.insert(c.dim);
                               if (left != right) ++bad;
                           }
                           const auto seq = identify_interval(pair);
                           const auto f = face_numbers(a, 2);
                           for (int k = 1; k <= 2 * a + 1; ++k)
                               if (f[static_cast<std::size_t>(k - 1)] != seq.dim(k)) ++bad;
                       }
                       return compare("0 mismatches", std::to_string(bad) + " mismatches");
                   }});
    out.push_back({"highrank.closed_forms", "highrank", 11, false, [] {
                       int bad = 0;
                       for (int n = 2; n <= 6; ++n)
                           for (int a : {1, 2}) {
                               const auto f = face_numbers(a, n);
                               for (int k = 0; k < static_cast<int>(f.size()); ++k)
                                   if (f_closed_form_exact(a, n, k) != Rational(f[static_cast<std::size_t>(k)])) ++bad;
                           }
                       std::vector<std::string> readings;
                       for (auto r : matching_readings(6)) readings.push_back(to_string(r));
                       return CheckResult{"0 mismatches; reading " + to_string(FReading::RatioSquared),
                                          std::to_string(bad) + " mismatches; reading " + join(readings, " | "),
                                          bad == 0 && readings.size() == 1 &&
                                              readings[0] == to_string(FReading::RatioSquared)};
                   }});
    out.push_back({"highrank.alternating", "highrank", 11, false, [] {
                       std::vector<std::string> exp, act;
                       for (int a : {1, 2, 4})
                           for (int n = 2; n <= 6; ++n) {
                               exp.push_back(expected_alternating_sum(a, n).get_str());
                               act.push_back(alternating_sum(a, n).get_str());
                           }
                       return compare(join(exp), join(act));
                   }});
}

}  // namespace

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

std::vector<Check> verification_checks(std::uint64_t seed) {
    std::vector<Check> out;
    add_faces(out);
    add_kostant(out);
    add_structure(out);
    add_cp2(out);
    add_rp2(out);
    add_hp2(out);
    add_links(out);
    add_euler(out, seed);
    add_invariants(out);
    add_defectivity(out);
    add_highrank(out);
    return out;
}

std::vector<Check> suite_checks(const std::string& suite, std::uint64_t seed, bool skip_optional) {
    static const std::set<std::string> known{"core", "triangulations", "characters", "highrank", "all"};
    if (!known.count(suite)) throw Error(ErrorCode::UnsupportedCase, "unknown suite '" + suite + "'");
    std::vector<Check> out;
    for (auto& c : verification_checks(seed))
        if ((suite == "all" || c.suite == suite) && !(skip_optional && c.optional)) out.push_back(std::move(c));
    return out;
}

}  // namespace sevlab
