#include "sevlab/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "sevlab/error.hpp"

namespace sevlab {

LaurentPoly LaurentPoly::constant(std::vector<std::string> variables, const Rational& c) {
    const auto n = variables.size();
    LaurentPoly p(std::move(variables));
    p.add_term(Exponents(n, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(std::vector<std::string> variables, Exponents exps, const Rational& c) {
    LaurentPoly p(std::move(variables));
    p.add_term(exps, c);
    return p;
}

Rational LaurentPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const Exponents& e, const Rational& c) {
    if (e.size() != vars_.size())
        throw Error(ErrorCode::DegreeMismatch, "exponent vector length differs from variable count");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void LaurentPoly::check_compatible(const LaurentPoly& o) const {
    if (vars_ != o.vars_) throw Error(ErrorCode::DegreeMismatch, "Laurent polynomials over different variables");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_compatible(o);
    LaurentPoly r(vars_);
    Exponents e(vars_.size());
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

Rational LaurentPoly::eval(const std::map<std::string, Rational>& point) const {
    std::vector<Rational> values;
    values.reserve(vars_.size());
    for (const auto& v : vars_) {
        auto it = point.find(v);
        if (it == point.end()) throw Error(ErrorCode::DegreeMismatch, "variable '" + v + "' not assigned");
        values.push_back(it->second);
    }
    Rational total;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (e[i] < 0 && values[i].is_zero())
                throw Error(ErrorCode::ZeroSubstitution, "variable '" + vars_[i] + "' has a negative exponent");
            term *= values[i].pow(e[i]);
        }
        total += term;
    }
    return total;
}

std::vector<std::pair<LaurentPoly::Exponents, Rational>> LaurentPoly::sorted_terms() const {
    std::vector<std::pair<Exponents, Rational>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    return out;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : sorted_terms()) {
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        first = false;
        Rational mag = c.sign() < 0 ? -c : c;
        bool unit = mag == Rational(1);
        bool any = false;
        std::ostringstream mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (any) mono << "*";
            mono << vars_[i];
            if (e[i] != 1) mono << "^" << e[i];
            any = true;
        }
        if (!unit || !any) os << mag << (any ? "*" : "");
        os << mono.str();
    }
    return os.str();
}

}  // namespace sevlab
