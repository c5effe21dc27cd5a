#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "sevlab/rational.hpp"

namespace sevlab {

/// Dense row-major matrix over the rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RationalMatrix operator*(const RationalMatrix& o) const;
    RationalMatrix transpose() const;

    /// Reduced row echelon form; returns the pivot columns.
    std::vector<std::size_t> rref();
    std::size_t rank() const;
    /// Throws DimensionMismatch when singular or not square.
    RationalMatrix inverse() const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct LinearSolution {
    std::vector<Rational> values;
    /// Number of independent equations; equals the number of unknowns when the solution is unique.
    std::size_t rank = 0;
};

/// Solves A x = b exactly, keeping every equation. Throws InconsistentSystem
/// when the (possibly overdetermined) system has no solution and
/// DimensionMismatch when it is underdetermined.
LinearSolution solve_exact(const RationalMatrix& a, const std::vector<Rational>& b);

/// Sparse semi-echelon basis over monomial keys. Each stored row has a pivot
/// equal to its smallest key, normalized to coefficient one; no two rows share
/// a pivot, so reducing a vector key-by-key in increasing order decides
/// membership in the span.
template <class Key>
class SparseEchelon {
public:
    using Row = std::map<Key, Rational>;

    /// Reduces `v` against the basis in place.
    void reduce(Row& v) const {
        auto it = v.begin();
        while (it != v.end()) {
            auto pivot = rows_.find(it->first);
            if (pivot == rows_.end()) {
                ++it;
                continue;
            }
            const Key key = it->first;
            const Rational factor = it->second;
            for (const auto& [k, c] : pivot->second) {
                auto& slot = v[k];
                slot -= factor * c;
            }
            for (auto jt = v.begin(); jt != v.end();) {
                if (jt->second.is_zero()) jt = v.erase(jt); else ++jt;
            }
            it = v.upper_bound(key);
        }
    }

    /// Inserts `v` if it is independent; returns the reduced row that was added.
    std::optional<Row> insert(Row v) {
        reduce(v);
        if (v.empty()) return std::nullopt;
        const Rational lead = v.begin()->second;
        for (auto& [k, c] : v) c /= lead;
        rows_.emplace(v.begin()->first, v);
        return v;
    }

    bool contains(Row v) const {
        reduce(v);
        return v.empty();
    }

    std::size_t rank() const { return rows_.size(); }
    const std::map<Key, Row>& rows() const { return rows_; }

private:
    std::map<Key, Row> rows_;
};

}  // namespace sevlab
