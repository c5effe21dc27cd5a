#include "sevlab/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "sevlab/error.hpp"
#include "sevlab/linalg.hpp"

namespace sevlab {

Face face_mask(const std::vector<int>& vertices) {
    Face m = 0;
    for (int v : vertices) m |= Face{1} << (v - 1);
    return m;
}

std::vector<int> face_vertices(Face f) {
    std::vector<int> out;
    for (int v = 1; f != 0; ++v, f >>= 1)
        if (f & 1u) out.push_back(v);
    return out;
}

SimplicialComplex::SimplicialComplex(int n_vertices, std::vector<std::vector<int>> facets)
    : n_vertices_(n_vertices), facets_(std::move(facets)) {
    if (n_vertices < 0 || n_vertices > 64) throw Error(ErrorCode::ParseError, "vertex count must lie in 0..64");
    for (auto& f : facets_) {
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            throw Error(ErrorCode::ParseError, "facet repeats a vertex");
        for (int v : f)
            if (v < 1 || v > n_vertices) throw Error(ErrorCode::ParseError, "vertex " + std::to_string(v) + " out of range");
        masks_.push_back(face_mask(f));
    }
    for (std::size_t i = 0; i < masks_.size(); ++i)
        for (std::size_t j = 0; j < masks_.size(); ++j)
            if (i != j && (masks_[i] & masks_[j]) == masks_[i])
                throw Error(ErrorCode::ParseError, "facet " + std::to_string(i + 1) + " lies in facet " + std::to_string(j + 1));
}

int SimplicialComplex::dimension() const {
    int d = -1;
    for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

bool SimplicialComplex::is_pure() const {
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](const auto& f) { return static_cast<int>(f.size()) - 1 == dimension(); });
}

bool SimplicialComplex::has_face(Face f) const {
    return std::any_of(masks_.begin(), masks_.end(), [f](Face m) { return (f & m) == f; });
}

std::vector<std::vector<Face>> SimplicialComplex::faces_by_size() const {
    std::unordered_set<Face> seen;
    for (Face m : masks_) {
        if (std::popcount(m) > 26) throw Error(ErrorCode::TooLarge, "facet too large to enumerate");
        // Walk every submask of the facet.
        for (Face s = m;; s = (s - 1) & m) {
            seen.insert(s);
            if (s == 0) break;
        }
    }
    std::vector<std::vector<Face>> out(static_cast<std::size_t>(dimension() + 2));
    if (masks_.empty()) return out;
    for (Face s : seen) out[static_cast<std::size_t>(std::popcount(s))].push_back(s);
    for (auto& v : out) std::sort(v.begin(), v.end());
    return out;
}

FVector make_fvector(const std::vector<BigInt>& f0_to_fd) {
    FVector fv;
    fv.d = static_cast<int>(f0_to_fd.size()) - 1;
    fv.f.push_back(1);
    fv.f.insert(fv.f.end(), f0_to_fd.begin(), f0_to_fd.end());
    return fv;
}

FVector f_vector(const SimplicialComplex& c) {
    FVector fv;
    fv.d = c.dimension();
    for (const auto& level : c.faces_by_size()) fv.f.emplace_back(static_cast<unsigned long>(level.size()));
    if (fv.f.empty()) fv.f.emplace_back(1);
    return fv;
}

namespace {

/// Coefficient of f_{j-1} in h_i.
BigInt h_coefficient(int d, int i, int j) {
    if (j > i) return 0;
    BigInt c = binomial(d + 1 - j, i - j);
    return (i - j) % 2 ? BigInt(-c) : c;
}

}  // namespace

HVector h_from_f(const FVector& fv) {
    HVector hv;
    for (int i = 0; i <= fv.d + 1; ++i) {
        BigInt s = 0;
        for (int j = 0; j <= i; ++j) s += h_coefficient(fv.d, i, j) * fv.f[static_cast<std::size_t>(j)];
        hv.h.emplace_back(s);
    }
    return hv;
}

int manifold_euler(int a) { return a == 1 ? 1 : 3; }

FVector klee_solve(int a) {
    const int d = 2 * a;
    const int n = 3 * a + 3;
    const int chi = manifold_euler(a);
    // Unknowns f_{a+1}..f_{2a} sit at f-indices j = a+2..2a+1.
    const int first = a + 2;
    const auto unknowns = static_cast<std::size_t>(a);
    std::vector<BigInt> known(static_cast<std::size_t>(d + 2), 0);
    for (int j = 0; j < first; ++j) known[j] = binomial(n, j);

    RationalMatrix m(static_cast<std::size_t>(d + 2), unknowns);
    std::vector<Rational> rhs;
    for (int i = 0; i <= d + 1; ++i) {
        BigInt target = binomial(d + 1, i) * (chi - 2);
        if (i % 2) target = -target;
        for (int j = 0; j < first; ++j) target -= (h_coefficient(d, d + 1 - i, j) - h_coefficient(d, i, j)) * known[j];
        for (std::size_t u = 0; u < unknowns; ++u) {
            const int j = first + static_cast<int>(u);
            m(static_cast<std::size_t>(i), u) = Rational(h_coefficient(d, d + 1 - i, j) - h_coefficient(d, i, j));
        }
        rhs.emplace_back(target);
    }
    const auto sol = solve_exact(m, rhs);
    std::vector<BigInt> f;
    for (int j = 1; j < first; ++j) f.push_back(known[j]);
    for (const auto& v : sol.values) {
        if (!v.is_integer()) throw Error(ErrorCode::NonIntegralSolution, "face count " + v.str() + " is not integral");
        f.push_back(v.num());
    }
    return make_fvector(f);
}

PropertyReport check_manifold_properties(const SimplicialComplex& c, int a) {
    if (!c.is_pure()) throw Error(ErrorCode::NotPure, "complex is not pure");
    const int n = c.n_vertices();
    if (n > 24) throw Error(ErrorCode::TooLarge, "subset checks limited to 24 vertices");
    PropertyReport rep;
    const Face all = n == 64 ? ~Face{0} : (Face{1} << n) - 1;

    rep.tight = true;
    rep.dual = true;
    for (Face s = 0; s <= all; ++s) {
        const int size = std::popcount(s);
        const bool face = c.has_face(s);
        if (size <= a + 1 && !face) rep.tight = false;
        if (size >= a + 1 && size <= 2 * a + 2 && face == c.has_face(all & ~s)) rep.dual = false;
        if (s == all) break;
    }

    rep.defective = true;
    const auto& masks = c.facet_masks();
    for (std::size_t i = 0; i < masks.size(); ++i)
        for (std::size_t j = i + 1; j < masks.size(); ++j)
            if (std::popcount(masks[i] & masks[j]) < a) rep.defective = false;

    const auto faces = c.faces_by_size();
    rep.pseudomanifold = c.dimension() >= 1;
    if (rep.pseudomanifold) {
        for (Face ridge : faces[static_cast<std::size_t>(c.dimension())]) {
            int count = 0;
            for (Face m : masks) count += (ridge & m) == ridge;
            if (count != 2) rep.pseudomanifold = false;
        }
    }
    rep.euler = 0;
    for (std::size_t k = 1; k < faces.size(); ++k) {
        if (k % 2) rep.euler += static_cast<unsigned long>(faces[k].size());
        else rep.euler -= static_cast<unsigned long>(faces[k].size());
    }
    return rep;
}

FVector link_f_vectors(int a) {
    const auto fv = klee_solve(a);
    const int n = 3 * a + 3;
    std::vector<BigInt> out;
    for (int j = 0; j <= 2 * a - 1; ++j) {
        const BigInt pairs = BigInt(j + 2) * fv.at(j + 1);
        if (pairs % n != 0)
            throw Error(ErrorCode::NonIntegralLinkCount, "link face count at dimension " + std::to_string(j) + " is not integral");
        out.push_back(pairs / n);
    }
    return make_fvector(out);
}

SimplicialComplex vertex_link(const SimplicialComplex& c, int vertex) {
    std::vector<std::vector<int>> facets;
    for (const auto& f : c.facets()) {
        if (!std::binary_search(f.begin(), f.end(), vertex)) continue;
        std::vector<int> rest;
        for (int v : f)
            if (v != vertex) rest.push_back(v);
        facets.push_back(rest);
    }
    return SimplicialComplex(c.n_vertices(), facets);
}

BigInt link_facet_formula(int a) {
    const BigInt num = BigInt(3 * a + 2) * binomial(2 * a + 1, a + 1);
    if (num % (a + 2) != 0) throw Error(ErrorCode::NonIntegral, "maximal link face count is not integral");
    return num / (a + 2);
}

std::vector<BigInt> h_doubleprime(int a) {
    std::vector<BigInt> h(static_cast<std::size_t>(2 * a + 1));
    for (int k = 0; k <= a; ++k) {
        h[k] = binomial(a + k + 1, k);
        h[2 * a - k] = h[k];
    }
    return h;
}

namespace {

bool preserves(const SimplicialComplex& c, const std::unordered_set<Face>& facets, const std::vector<int>& image) {
    for (Face m : c.facet_masks()) {
        Face img = 0;
        for (Face r = m; r != 0; r &= r - 1) img |= Face{1} << image[static_cast<std::size_t>(std::countr_zero(r))];
        if (!facets.count(img)) return false;
    }
    return true;
}

}  // namespace

AutomorphismReport verify_automorphisms(const SimplicialComplex& c, const std::vector<Permutation>& gens) {
    const std::unordered_set<Face> facets(c.facet_masks().begin(), c.facet_masks().end());
    for (std::size_t g = 0; g < gens.size(); ++g) {
        if (gens[g].degree() != static_cast<std::size_t>(c.n_vertices()))
            throw Error(ErrorCode::DegreeMismatch, "generator " + std::to_string(g + 1) + " has the wrong degree");
        if (!preserves(c, facets, gens[g].zero_based()))
            throw Error(ErrorCode::NotAnAutomorphism, "generator " + std::to_string(g + 1) + " " +
                                                          gens[g].cycle_string() + " does not preserve the facets");
    }
    AutomorphismReport rep;
    rep.group = group_closure(gens, 1000000, static_cast<std::size_t>(c.n_vertices()));
    rep.transitive = rep.group.is_transitive();
    rep.facet_orbits = orbits(rep.group, c.facets());
    return rep;
}

PermGroup full_automorphism_group(const SimplicialComplex& c) {
    const int n = c.n_vertices();
    if (n > 10) throw Error(ErrorCode::TooLarge, "exhaustive search limited to 10 vertices");
    const std::unordered_set<Face> facets(c.facet_masks().begin(), c.facet_masks().end());
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 0);
    std::vector<Permutation> found;
    do {
        if (preserves(c, facets, image)) {
            std::vector<int> one(image);
            for (int& v : one) ++v;
            found.push_back(Permutation::from_images(one));
        }
    } while (std::next_permutation(image.begin(), image.end()));

    // Greedily pick generators until their closure has every automorphism.
    std::vector<Permutation> gens;
    PermGroup g = group_closure({}, 1, static_cast<std::size_t>(n));
    for (const auto& p : found) {
        if (g.contains(p)) continue;
        gens.push_back(p);
        g = group_closure(gens, found.size());
    }
    return g;
}

std::string to_text(const SimplicialComplex& c) {
    std::ostringstream os;
    os << "n_vertices=" << c.n_vertices() << "\n";
    for (const auto& f : c.facets()) {
        for (std::size_t i = 0; i < f.size(); ++i) os << (i ? " " : "") << f[i];
        os << "\n";
    }
    return os.str();
}

SimplicialComplex from_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int n = -1;
    std::vector<std::vector<int>> facets;
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (n < 0) {
            const std::string key = "n_vertices=";
            if (line.rfind(key, 0) != 0) throw Error(ErrorCode::ParseError, "missing n_vertices header");
            try {
                n = std::stoi(line.substr(key.size()));
            } catch (...) {
                throw Error(ErrorCode::ParseError, "bad n_vertices header");
            }
            continue;
        }
        std::istringstream ls(line);
        std::vector<int> facet;
        std::string tok;
        while (ls >> tok) {
            try {
                std::size_t used = 0;
                facet.push_back(std::stoi(tok, &used));
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (...) {
                throw Error(ErrorCode::ParseError, "bad vertex '" + tok + "'");
            }
        }
        facets.push_back(facet);
    }
    if (n < 0) throw Error(ErrorCode::ParseError, "missing n_vertices header");
    return SimplicialComplex(n, facets);
}

}  // namespace sevlab
