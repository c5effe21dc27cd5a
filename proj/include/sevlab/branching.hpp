#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sevlab/cominuscule.hpp"
#include "sevlab/highrank.hpp"
#include "sevlab/lie.hpp"

namespace sevlab {

/// Restriction from the Levi factor acting on J to the automorphism group
/// SO(3, A) of a generic linear form: A1, A2, C3, F4 for a = 1, 2, 4, 8.
struct RestrictionScheme {
    int a = 1;
    CominusculePair pair;
    RootSystem levi;
    RootSystem so;
    /// Highest weight of the (3a+2)-dimensional module J_phi.
    Weight j_phi;
    /// Highest weight of J on the Levi.
    Weight j_levi;
    /// matrix[j][i]: exponent of the j-th SO fundamental coordinate in the
    /// i-th Levi fundamental coordinate; also maps Levi weights to SO weights.
    std::vector<std::vector<int>> matrix;
    /// For a = 2: whether the second SL(3) factor is evaluated at inverse coordinates.
    bool second_factor_inverted = false;
    std::string torus;

    Weight restrict(const Weight& levi_weight) const;
    std::vector<Rational> levi_point(const std::vector<Rational>& so_point) const;
};

/// Throws UnsupportedCase unless a in {1,2,4,8}.
RestrictionScheme restriction_scheme(int a);

/// Levi labels of a full-rank weight.
Weight levi_part(const CominusculePair& pair, const Weight& w);

/// Character of J at the restricted point, summed directly over the roots of g_1.
Rational j_character(const RestrictionScheme& s, const std::vector<Rational>& so_point);
/// chi(J) = chi(J_phi) + 1 at the point.
bool scheme_valid_at(const RestrictionScheme& s, const std::vector<Rational>& so_point);

/// Random SO torus point with small nonzero rational coordinates, regular for
/// both the Levi and the SO characters.
std::vector<Rational> random_regular_point(const RestrictionScheme& s, std::mt19937_64& rng);

/// sum_k (-1)^{k+1} chi(L^k) at the restricted point. Throws SingularPoint.
Rational euler_char_at_point(const RestrictionScheme& s, const LSequence& seq, const std::vector<Rational>& so_point);

struct EulerReport {
    int a = 0;
    std::vector<std::vector<Rational>> points;
    std::vector<Rational> values;
    bool scheme_ok = false;
    Rational expected;
    bool ok() const;
};

EulerReport euler_check(int a, int n_points, std::uint64_t seed);

/// For every k, e_k of the restricted weights of J equals the summed Kostant
/// constituents of wedge^k J at the point.
bool kostant_restriction_check(const RestrictionScheme& s, const std::vector<Rational>& so_point);

/// Weight multiplicities of a Levi module restricted to the SO torus.
std::map<Weight, BigInt> restricted_character(const RestrictionScheme& s, const Weight& levi_weight);

/// Multiplicity of the trivial module, sum_w det(w) m(rho - w rho).
BigInt trivial_multiplicity(const RootSystem& so, const std::map<Weight, BigInt>& mult);

/// Trivial summands in an A1 character by greedy removal of the top string.
BigInt sl2_trivial_count(const std::map<Weight, BigInt>& mult);

/// Invariant lines in L^{k+1}, k = 0..2a, by the classical rules: sl2
/// decomposition (a = 1), matching labels (a = 2), conjugate-even shapes (a = 4).
std::vector<int> invariant_dims(int a);
/// Same counts from restricted characters via trivial_multiplicity.
std::vector<int> invariant_dims_bruteforce(int a);

/// SO(N)-invariant in S_l(C^N): all parts even, or exactly N parts all odd.
bool has_so_invariant(const Partition& l, int N);
/// Sp(N)-invariant in S_l(C^N): conjugate has only even parts.
bool has_sp_invariant(const Partition& l, int N);
/// Invariant in S_l U (x) S_m U^vee under SL(N).
bool has_sl_pairing_invariant(const Partition& l, const Partition& m, int N);

/// Invariant counts in L^{k+1}, k = 0..an, of the higher-rank sequence.
std::vector<int> higher_invariants(int a, int n);

struct CartanRow {
    int k = 0;
    BigInt dim_power;
    BigInt dim_sum;
    bool character_ok = false;
};

/// dim J^{(k)} = sum_{l <= k} dim J_phi^{(l)}, also compared as characters at one point.
std::vector<CartanRow> cartan_splitting_check(int a, int k_max, std::uint64_t seed = 0);

/// The pattern k in {0, a, ..., na} with value 1, zero elsewhere.
std::vector<int> expected_invariant_pattern(int a, int n);

}  // namespace sevlab
