#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace sevlab {

/// Bijection of the points 1..m, stored zero-based.
class Permutation {
public:
    Permutation() = default;
    /// Identity on `degree` points.
    explicit Permutation(std::size_t degree);
    /// `images[i]` is the image of point i+1 (one-based values). Throws ParseError if not bijective.
    static Permutation from_images(const std::vector<int>& one_based_images);
    /// Cycle notation such as "(147)(258)(369)" (single-digit points) or
    /// "(1,4,7)(10,11)" / "(1 4 7)"; fixed points may be omitted.
    static Permutation from_cycles(const std::string& cycles, std::size_t degree);

    std::size_t degree() const { return images_.size(); }
    /// One-based image of a one-based point.
    int operator()(int point) const { return images_[static_cast<std::size_t>(point - 1)] + 1; }
    const std::vector<int>& zero_based() const { return images_; }

    /// (p * q)(x) = p(q(x)): q is applied first.
    Permutation operator*(const Permutation& q) const;
    Permutation inverse() const;
    bool is_identity() const;
    std::size_t order() const;
    std::string cycle_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const noexcept;
};

/// Finite permutation group with its elements materialized.
class PermGroup {
public:
    const std::vector<Permutation>& generators() const { return generators_; }
    /// Elements sorted lexicographically by images; identity first.
    const std::vector<Permutation>& elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }
    std::size_t degree() const { return degree_; }
    bool contains(const Permutation& p) const;
    bool is_transitive() const;

    friend PermGroup group_closure(const std::vector<Permutation>& gens, std::size_t cap, std::size_t degree);

private:
    std::size_t degree_ = 0;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;
};

/// Breadth-first closure of the generated group. Throws ClosureCapExceeded when
/// the group would exceed `cap` elements and DegreeMismatch when generators act
/// on different point sets. `degree` is only used when `gens` is empty.
PermGroup group_closure(const std::vector<Permutation>& gens, std::size_t cap, std::size_t degree = 0);

using PointSet = std::vector<int>;

/// Orbits of the group on the points 1..degree; each orbit sorted, orbits
/// ordered by their smallest element.
std::vector<std::vector<int>> orbits(const PermGroup& g);

/// Orbits of the induced action on a family of point sets (each set sorted).
/// Every set in `domain` must map into `domain`; throws DegreeMismatch otherwise.
std::vector<std::vector<PointSet>> orbits(const PermGroup& g, const std::vector<PointSet>& domain);

/// Image of a sorted point set.
PointSet apply(const Permutation& p, const PointSet& s);

}  // namespace sevlab
