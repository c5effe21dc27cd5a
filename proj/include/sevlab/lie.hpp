#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "sevlab/linalg.hpp"
#include "sevlab/rational.hpp"

namespace sevlab {

/// Integral weight in Dynkin-label (fundamental-weight) coordinates.
using Weight = std::vector<int>;
/// Root in simple-root coordinates.
using Root = std::vector<int>;

struct WeylElement {
    /// Row-major rank x rank action on Dynkin labels.
    std::vector<int> matrix;
    int sign = 1;
};

namespace detail {
struct WeylCache;
}

/// Root datum of a (possibly reducible) semisimple Lie algebra, simple roots
/// numbered as in Bourbaki.
class RootSystem {
public:
    /// Builds from the Gram matrix (alpha_i, alpha_j) of the simple roots.
    RootSystem(std::string label, RationalMatrix gram);

    const std::string& label() const { return label_; }
    int rank() const { return rank_; }
    const RationalMatrix& gram() const { return gram_; }
    /// cartan(i, j) = <alpha_i, alpha_j^vee>; row i is alpha_i in Dynkin labels.
    int cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i * rank_ + j)]; }
    const std::vector<Root>& positive_roots() const { return positive_; }
    const Rational& root_norm(std::size_t index) const { return norms_[index]; }
    Weight rho() const { return Weight(static_cast<std::size_t>(rank_), 1); }
    /// Squared length of a root given in simple-root coordinates.
    Rational norm(const Root& r) const;
    /// Ambient vectors of the simple roots, when the system was built from a table.
    const std::vector<std::vector<Rational>>& ambient_simple_roots() const { return ambient_; }
    void set_ambient(std::vector<std::vector<Rational>> ambient) { ambient_ = std::move(ambient); }

    /// <lambda, beta^vee> for a root beta in simple-root coordinates.
    Rational coroot_pairing(const Weight& lambda, const Root& beta) const;
    /// Dynkin labels of a root.
    Weight root_to_weight(const Root& r) const;
    /// Simple-root coordinates of a weight (rational in general).
    std::vector<Rational> weight_to_root_coords(const Weight& w) const;
    /// (lambda, mu) for weights in Dynkin coordinates.
    Rational inner(const Weight& a, const Weight& b) const;

    Weight reflect(int i, const Weight& lambda) const;
    Weight dominant_conjugate(const Weight& lambda) const;
    bool is_dominant(const Weight& lambda) const;
    /// W-orbit of a weight, sorted.
    std::vector<Weight> orbit(const Weight& lambda) const;

    /// Lazily computed Weyl group, shared between copies. Throws ClosureCapExceeded
    /// when the group is larger than `cap`.
    const std::vector<WeylElement>& weyl_group(std::size_t cap = 60000) const;

    /// Connected components of the Dynkin diagram, each as ascending node list.
    std::vector<std::vector<int>> components() const;

private:
    std::string label_;
    int rank_ = 0;
    RationalMatrix gram_;
    std::vector<int> cartan_;
    std::vector<Root> positive_;
    std::vector<Rational> norms_;
    RationalMatrix root_coords_from_labels_;
    RationalMatrix weight_gram_;
    std::vector<std::vector<Rational>> ambient_;
    std::shared_ptr<detail::WeylCache> weyl_;
};

/// Simple types A_n, B_n, C_n, D_n (n >= 3), E6, E7, F4. `type` is one of
/// "A","B","C","D","E","F". Throws UnsupportedType otherwise.
RootSystem build_root_system(const std::string& type, int rank);
/// Parses labels like "A2", "E6", "D6", "A2xA2".
RootSystem root_system_from_label(const std::string& label);
/// Subsystem spanned by the given simple roots, renumbered in the given order.
RootSystem sub_system(const RootSystem& rs, const std::vector<int>& nodes);
RootSystem product(const RootSystem& a, const RootSystem& b);

/// Positive roots generated independently by closing the simple roots under
/// simple reflections; used to cross-check the string construction.
std::vector<Root> roots_by_reflection_closure(const RootSystem& rs);

/// Weyl dimension formula over the positive roots supported on `levi`
/// (all nodes when empty). `mu` has full rank; labels outside `levi` are ignored.
/// Throws NotDominant if a selected label is negative.
BigInt weyl_dim(const RootSystem& rs, const Weight& mu, const std::vector<int>& levi = {});

/// Weyl group elements as matrices on Dynkin labels; refuses groups over `cap`.
const std::vector<WeylElement>& weyl_group_elements(const RootSystem& rs, std::size_t cap = 60000);

/// Converts GL(n+1) eigenvalues (x_1..x_{n+1}) to fundamental-weight torus
/// coordinates z_k = x_1 ... x_k of SL(n+1).
std::vector<Rational> gl_to_fundamental(const std::vector<Rational>& eigenvalues);

/// Character of the irreducible module V_mu at a torus point, via the Weyl
/// character formula as a ratio of alternants. `point` lists z_i = e^{w_i}
/// (length rank); for type A_n a length-(n+1) list of GL eigenvalues is also
/// accepted. Throws SingularPoint when the denominator vanishes.
Rational char_eval(const RootSystem& rs, const Weight& mu, const std::vector<Rational>& point);

/// Evaluates many highest weights at one point sharing the denominator.
std::vector<Rational> char_eval_many(const RootSystem& rs, const std::vector<Weight>& mus,
                                     const std::vector<Rational>& point);

struct WeightSystem {
    Weight highest;
    /// Dominant weights with their multiplicities.
    std::map<Weight, BigInt> multiplicities;
    BigInt dimension;
};

/// Dimension budget for Freudenthal's recursion; SEVLAB_BUDGET overrides the default 2e7.
BigInt freudenthal_budget();

/// Dominant weight multiplicities via Freudenthal's recursion, cross-checked
/// against weyl_dim (DimensionMismatch on disagreement). Throws BudgetExceeded.
WeightSystem freudenthal_weights(const RootSystem& rs, const Weight& mu);

/// Full character as weight -> multiplicity (all weights, not only dominant).
std::map<Weight, BigInt> full_character(const RootSystem& rs, const WeightSystem& ws);

/// Permutation sigma of the nodes with -w0(w_i) = w_{sigma(i)}, restricted to
/// the subsystem on `levi` (all nodes when empty). Entries outside `levi` are fixed.
std::vector<int> diagram_involution(const RootSystem& rs, const std::vector<int>& levi = {});

/// Highest weight of the dual of V_mu for the Levi on `levi`.
Weight levi_dual(const RootSystem& rs, const std::vector<int>& levi, const Weight& mu);

std::string weight_str(const Weight& w);

}  // namespace sevlab
