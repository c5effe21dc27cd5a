#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sevlab/permutation.hpp"
#include "sevlab/rational.hpp"

namespace sevlab {

/// Vertex set as a bit mask; vertex v occupies bit v-1.
using Face = std::uint64_t;

Face face_mask(const std::vector<int>& vertices);
std::vector<int> face_vertices(Face f);

/// Facet list on the vertices 1..n_vertices (at most 64).
class SimplicialComplex {
public:
    /// Sorts each facet. Throws ParseError for out-of-range or repeated
    /// vertices, or when one facet contains another.
    SimplicialComplex(int n_vertices, std::vector<std::vector<int>> facets);

    int n_vertices() const { return n_vertices_; }
    const std::vector<std::vector<int>>& facets() const { return facets_; }
    const std::vector<Face>& facet_masks() const { return masks_; }
    /// Largest facet dimension; -1 for the void complex.
    int dimension() const;
    bool is_pure() const;
    bool has_face(Face f) const;
    /// Every face grouped by size; index 0 holds the empty face.
    std::vector<std::vector<Face>> faces_by_size() const;

private:
    int n_vertices_;
    std::vector<std::vector<int>> facets_;
    std::vector<Face> masks_;
};

/// f[0] = f_{-1}, f[k+1] = f_k for 0 <= k <= d.
struct FVector {
    int d = -1;
    std::vector<BigInt> f;
    BigInt at(int k) const { return f.at(static_cast<std::size_t>(k + 1)); }
};

/// Builds an f-vector from f_0..f_d with f_{-1} = 1.
FVector make_fvector(const std::vector<BigInt>& f0_to_fd);
FVector f_vector(const SimplicialComplex& c);

struct HVector {
    std::vector<Rational> h;
};

/// Coefficients of sum_i h_i x^{d+1-i} = sum_j f_{j-1} (x-1)^{d+1-j}.
HVector h_from_f(const FVector& fv);

/// Euler characteristic of the top-dimensional manifold: 1 for a = 1, 3 otherwise.
int manifold_euler(int a);

/// Face vector of a tight 2a-manifold on 3a+3 vertices satisfying Klee's
/// relations, solved exactly from all d+2 equations. Throws
/// InconsistentSystem or NonIntegralSolution.
FVector klee_solve(int a);

struct PropertyReport {
    bool tight = false;
    bool dual = false;
    bool defective = false;
    bool pseudomanifold = false;
    BigInt euler;
};

/// Throws NotPure, and TooLarge above 24 vertices.
PropertyReport check_manifold_properties(const SimplicialComplex& c, int a);

/// Vertex-link face numbers by double counting from klee_solve(a), assuming a
/// vertex-transitive triangulation. Throws NonIntegralLinkCount.
FVector link_f_vectors(int a);

/// Link of one vertex, with vertices kept in the original numbering.
SimplicialComplex vertex_link(const SimplicialComplex& c, int vertex);

/// (3a+2)/(a+2) * C(2a+1, a+1). Throws NonIntegral.
BigInt link_facet_formula(int a);

/// h''_k = h''_{2a-k} = C(a+k+1, k) for 0 <= k <= a.
std::vector<BigInt> h_doubleprime(int a);

struct AutomorphismReport {
    PermGroup group;
    bool transitive = false;
    std::vector<std::vector<PointSet>> facet_orbits;
};

/// Throws NotAnAutomorphism naming the first generator that moves a facet off the complex.
AutomorphismReport verify_automorphisms(const SimplicialComplex& c, const std::vector<Permutation>& gens);

/// Full automorphism group by exhaustive search; throws TooLarge above 10 vertices.
PermGroup full_automorphism_group(const SimplicialComplex& c);

/// "n_vertices=N" followed by one facet per line.
std::string to_text(const SimplicialComplex& c);
/// Throws ParseError.
SimplicialComplex from_text(const std::string& text);

}  // namespace sevlab
