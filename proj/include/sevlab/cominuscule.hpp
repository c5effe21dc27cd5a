#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sevlab/lie.hpp"

namespace sevlab {

/// Cominuscule grading g = g_-1 + g_0 + g_1 attached to one simple root.
/// Rank-two pairs (n = 2) are C3, A5, D6, E7 for a = 1, 2, 4, 8; the
/// higher-rank families are C_{n+1}, A_{2n+1}, D_{2n+2}.
struct CominusculePair {
    char algebra = 'R';
    int a = 1;
    int n = 2;
    RootSystem ambient;
    /// Zero-based index of the distinguished simple root alpha_0.
    int node = 0;
    /// Remaining nodes, ascending.
    std::vector<int> levi;
};

/// Throws UnsupportedPair unless a in {1,2,4,8}, n >= 1, and n = 2 when a = 8.
CominusculePair cominuscule_pair(int a, int n = 2);

/// Roots of g_1 with their cover relations; element 0 is alpha_0.
struct G1Poset {
    std::vector<Root> roots;
    /// (lower, upper) index pairs where upper - lower is a simple root.
    std::vector<std::pair<int, int>> covers;
    /// Row-major Cartan matrix of the ambient system, used for reduced words.
    std::vector<int> cartan;
    int rank = 0;
    std::size_t size() const { return roots.size(); }
};

G1Poset build_g1_poset(const CominusculePair& pair);

using RootMask = std::uint64_t;

/// Lower order ideal of the g_1 poset.
struct IdealElement {
    RootMask members = 0;
    int rank = 0;
    /// Reduced word s_{w_k}...s_{w_1} of the Schubert cell, read along one linear extension.
    std::vector<int> reduced_word;
    bool contains(int element) const { return (members >> element) & 1u; }
};

/// All lower ideals sorted by (rank, mask). Throws TooLarge for posets over 64
/// elements or more than `cap` ideals.
std::vector<IdealElement> enumerate_ideals(const G1Poset& poset, std::size_t cap = 1000000);

struct KostantComponent {
    IdealElement ideal;
    /// Sum of the ideal's roots in Dynkin labels; a Levi lowest weight.
    Weight kostant_weight;
    /// Levi highest weight of the same constituent (zero outside the Levi).
    Weight levi_weight;
    /// Coefficient of kostant_weight along the fundamental weight of alpha_0.
    Rational central_charge;
    BigInt dim;
};

KostantComponent kostant_component(const CominusculePair& pair, const G1Poset& poset, const IdealElement& v);

/// Constituents of the k-th exterior power of g_1. Throws OutOfRange.
std::vector<KostantComponent> wedge_decomposition(const CominusculePair& pair, int k);

struct LSequence {
    int a = 0;
    int n_roots = 0;
    IdealElement bottom;
    IdealElement top;
    /// Ideals v with bottom <= v <= top.
    std::vector<IdealElement> interval;
    /// L[k] for 0 <= k <= n_roots; nonempty exactly for 1 <= k <= 2a+1.
    std::vector<std::vector<KostantComponent>> L;

    BigInt dim(int k) const;
};

/// Locates the interval [s, t] and assembles L^1..L^{2a+1}. Throws
/// UnsupportedPair for n != 2, TopNotFound or TopNotUnique.
LSequence identify_interval(const CominusculePair& pair);

struct StructureReport {
    bool tightness = false;
    bool duality = false;
    bool partition = false;
    /// Component-count pattern; unset for a = 1.
    std::optional<bool> counts;
    bool edges = false;
    bool completeness = false;
    std::vector<int> component_counts;
    std::size_t n_ideals = 0;
    std::size_t interval_size = 0;
    std::vector<std::string> failures;
    bool ok() const { return tightness && duality && partition && counts.value_or(true) && edges && completeness; }
};

StructureReport check_structure(const CominusculePair& pair);

/// Expected number of irreducible constituents of L^{k+1}, using the range
/// a+1 <= k <= 3a/2 for the second two-component block.
int expected_component_count(int a, int k);

struct BirkhoffReport {
    bool distributive = false;
    std::size_t join_irreducibles = 0;
    bool isomorphic_to_g1 = false;
    std::size_t interval_size = 0;
    bool isomorphic_to_interval = false;
};

BirkhoffReport birkhoff_check(const CominusculePair& pair);

/// Isomorphism test for finite posets given by strict-order relations.
bool posets_isomorphic(const std::vector<std::vector<bool>>& less_a, const std::vector<std::vector<bool>>& less_b);

enum class Highlight { None, Interval, Dual };

/// Graphviz text of the ideal lattice, ranked by cardinality. Throws TooLarge
/// above 10^4 ideals and UnsupportedPair when highlighting a higher-rank pair.
std::string hasse_dot(const CominusculePair& pair, Highlight highlight);

}  // namespace sevlab
