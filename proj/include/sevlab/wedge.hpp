#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sevlab/lie.hpp"
#include "sevlab/permutation.hpp"
#include "sevlab/rational.hpp"
#include "sevlab/simplicial.hpp"

namespace sevlab {

/// Wedge monomial as a bit mask over basis labels, in increasing label order.
using Monomial = std::uint32_t;

/// Sparse vector in a fixed exterior power.
struct WedgeVector {
    int degree = 0;
    std::map<Monomial, Rational> coords;
    bool is_zero() const { return coords.empty(); }
    void add(Monomial m, const Rational& c);
    friend bool operator==(const WedgeVector&, const WedgeVector&) = default;
};

/// Endomorphism of V given on basis vectors: images[i] lists (target, coefficient).
struct BasisOperator {
    std::vector<std::vector<std::pair<int, Rational>>> images;
};

/// Weight basis of a Levi module V with Chevalley generators of the Levi.
struct WedgeModel {
    std::string name;
    std::vector<std::string> labels;
    /// GL weight of each label, concatenated over factors.
    std::vector<std::vector<int>> weights;
    std::vector<int> factor_sizes;
    std::vector<BasisOperator> lowering;
    std::vector<BasisOperator> raising;
    RootSystem levi;

    int index_of(const std::string& label) const;
    std::vector<int> weight(Monomial m) const;
    /// Dynkin labels of a GL weight, factor by factor.
    Weight dynkin(const std::vector<int>& gl) const;
};

/// a = 1: S^2 C^3; a = 2: C^3 (x) C^3; a = 4: wedge^2 C^6. Throws UnsupportedCase otherwise.
WedgeModel wedge_model(int a);

WedgeVector apply_operator(const BasisOperator& op, const WedgeVector& v);
WedgeVector lowering(const WedgeModel& model, int op_index, const WedgeVector& v);
WedgeVector raising(const WedgeModel& model, int op_index, const WedgeVector& v);
WedgeVector wedge(const WedgeVector& x, const WedgeVector& y);
/// Interior product with a linear form given by its values on the basis.
WedgeVector contract(const std::vector<Rational>& phi, const WedgeVector& v);

/// Parses "(11)(22)(33)+2(12)(23)(13)"; factors may come in any order and are
/// sorted with the matching sign. Throws ParseError.
WedgeVector parse_wedge(const WedgeModel& model, const std::string& text);
std::string format_wedge(const WedgeModel& model, const WedgeVector& v);

struct ModuleSpan {
    int degree = 0;
    WedgeVector highest;
    /// Echelon basis of each weight space.
    std::map<std::vector<int>, std::vector<WedgeVector>> by_weight;
    std::size_t dim() const;
    std::vector<WedgeVector> basis() const;
};

/// Closure of `highest` under the lowering operators. Throws NotHighestWeight
/// when `highest` is not a weight vector killed by every raising operator, and
/// DimensionMismatch when the span differs from the Weyl dimension.
ModuleSpan generate_module(const WedgeModel& model, const WedgeVector& highest);

struct WeightSupport {
    std::vector<int> weight;
    /// Weight vector scaled so that its first monomial has coefficient one.
    WedgeVector vector;
};

/// Throws MultiplicityNotFree when some weight space has dimension above one.
std::vector<WeightSupport> diagram_supports(const ModuleSpan& span);

/// Whether `expected` is a nonzero multiple of the span's weight vector of the same weight.
bool matches_weight_vector(const ModuleSpan& span, const WedgeModel& model, const WedgeVector& expected);

struct DiagramEntry {
    std::string expression;
    std::string bold;
};

/// The ten weight vectors of L^3 in wedge^3 S^2 C^3, with the term kept by the triangulation.
const std::vector<DiagramEntry>& rp2_diagram();

struct BoldSelection {
    /// Selected monomial per weight vector, in support order.
    std::vector<Monomial> selected;
    bool equals_facets = false;
};

/// Label index i corresponds to vertex i+1. Throws SelectionAmbiguous or SelectionMissing.
BoldSelection bold_selection(const ModuleSpan& span, const SimplicialComplex& complex);

/// Rank of the image of `space` under contraction by `phi`.
std::size_t contraction_rank(const std::vector<WedgeVector>& space, const std::vector<Rational>& phi);
/// Rank of the span of all contractions of `space` by every form in `phis`.
std::size_t contraction_image_rank(const std::vector<WedgeVector>& space, const std::vector<std::vector<Rational>>& phis);
/// Echelon basis of that span.
std::vector<WedgeVector> contraction_image(const std::vector<WedgeVector>& space,
                                           const std::vector<std::vector<Rational>>& phis);

/// All monomials of degree k over n labels, as unit vectors.
std::vector<WedgeVector> standard_basis(int n_labels, int k);

/// Weight vectors of the given GL weight in degree k killed by every raising operator.
std::vector<WedgeVector> highest_weight_vectors(const WedgeModel& model, int k, const std::vector<int>& gl_weight);

struct DefectivityReport {
    std::vector<int> highest_weight;
    std::size_t dim = 0;
    std::size_t pairs_checked = 0;
    bool vanishes = false;
};

/// Builds the dual top constituent inside wedge^{a+2} and checks that all
/// pairwise products vanish in wedge^{2a+4}. Throws UnsupportedCase unless a is 1 or 2.
DefectivityReport defectivity_check(int a);

struct Cp2Report {
    WedgeVector highest;
    Monomial highest_monomial = 0;
    std::vector<int> highest_facet;
    std::size_t decomposables = 0;
    bool decomposables_are_facets = false;
    std::size_t weight_orbits = 0;
    std::size_t facet_orbits = 0;
    bool orbits_correspond = false;
    std::vector<std::size_t> support_sizes;
    bool supports_ok = false;
    bool twisted_ok = false;
    bool h_is_a3xa3 = false;
    bool tau_is_transpose = false;
    std::vector<std::string> failures;
    bool ok() const;
};

/// Compares L^5 of C^3 (x) C^3 with the nine-vertex complex projective plane.
Cp2Report cp2_match();

struct M1Report {
    std::vector<int> weight;
    bool highest = false;
};

M1Report m1_weight_check();

}  // namespace sevlab
