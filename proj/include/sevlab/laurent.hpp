#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "sevlab/rational.hpp"

namespace sevlab {

struct ExponentHash {
    std::size_t operator()(const std::vector<int>& e) const noexcept {
        std::size_t h = e.size();
        for (int x : e) h = h * 1000003u ^ static_cast<std::size_t>(x + 0x5bd1);
        return h;
    }
};

/// Sparse multivariate Laurent polynomial with rational coefficients.
class LaurentPoly {
public:
    using Exponents = std::vector<int>;
    using Terms = std::unordered_map<Exponents, Rational, ExponentHash>;

    explicit LaurentPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

    static LaurentPoly constant(std::vector<std::string> variables, const Rational& c);
    static LaurentPoly monomial(std::vector<std::string> variables, Exponents exps, const Rational& c = 1);

    const std::vector<std::string>& variables() const { return vars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Exponents& e) const;

    void add_term(const Exponents& e, const Rational& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator*(const LaurentPoly& o) const;
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    /// Exact evaluation; every variable must be assigned. Throws
    /// ZeroSubstitution when a variable occurring with a negative exponent is 0.
    Rational eval(const std::map<std::string, Rational>& point) const;

    /// Terms sorted lexicographically by exponent, for deterministic output.
    std::vector<std::pair<Exponents, Rational>> sorted_terms() const;
    std::string str() const;

private:
    void check_compatible(const LaurentPoly& o) const;

    std::vector<std::string> vars_;
    Terms terms_;
};

}  // namespace sevlab
