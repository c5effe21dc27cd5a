#include "sevlab/linalg.hpp"

#include <utility>

#include "sevlab/error.hpp"

namespace sevlab {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape");
    RationalMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
        }
    return r;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::vector<std::size_t> RationalMatrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t p = row;
        while (p < rows_ && (*this)(p, col).is_zero()) ++p;
        if (p == rows_) continue;
        if (p != row)
            for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(row, j));
        const Rational lead = (*this)(row, col);
        for (std::size_t j = col; j < cols_; ++j) (*this)(row, j) /= lead;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row || (*this)(i, col).is_zero()) continue;
            const Rational f = (*this)(i, col);
            for (std::size_t j = col; j < cols_; ++j) (*this)(i, j) -= f * (*this)(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t RationalMatrix::rank() const {
    RationalMatrix copy = *this;
    return copy.rref().size();
}

RationalMatrix RationalMatrix::inverse() const {
    if (rows_ != cols_) throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
    const std::size_t n = rows_;
    RationalMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
        aug(i, n + i) = 1;
    }
    auto pivots = aug.rref();
    if (pivots.size() < n || pivots[n - 1] != n - 1)
        throw Error(ErrorCode::DimensionMismatch, "singular matrix");
    RationalMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

LinearSolution solve_exact(const RationalMatrix& a, const std::vector<Rational>& b) {
    if (b.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length");
    const std::size_t n = a.cols();
    RationalMatrix aug(a.rows(), n + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    auto pivots = aug.rref();
    for (std::size_t p : pivots)
        if (p == n) throw Error(ErrorCode::InconsistentSystem, "linear system has no solution");
    if (pivots.size() < n) throw Error(ErrorCode::DimensionMismatch, "linear system is underdetermined");
    LinearSolution sol;
    sol.rank = pivots.size();
    sol.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) sol.values[pivots[i]] = aug(i, n);
    return sol;
}

}  // namespace sevlab
