#include "sevlab/rational.hpp"

#include "sevlab/error.hpp"

namespace sevlab {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::ClosureCapExceeded: return "ClosureCapExceeded";
        case ErrorCode::DegreeMismatch: return "DegreeMismatch";
        case ErrorCode::ZeroSubstitution: return "ZeroSubstitution";
        case ErrorCode::UnsupportedType: return "UnsupportedType";
        case ErrorCode::NotDominant: return "NotDominant";
        case ErrorCode::NonIntegerResult: return "NonIntegerResult";
        case ErrorCode::SingularPoint: return "SingularPoint";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::UnsupportedPair: return "UnsupportedPair";
        case ErrorCode::TopNotFound: return "TopNotFound";
        case ErrorCode::TopNotUnique: return "TopNotUnique";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::InconsistentSystem: return "InconsistentSystem";
        case ErrorCode::NonIntegralSolution: return "NonIntegralSolution";
        case ErrorCode::NotPure: return "NotPure";
        case ErrorCode::NonIntegralLinkCount: return "NonIntegralLinkCount";
        case ErrorCode::NonIntegral: return "NonIntegral";
        case ErrorCode::NotAnAutomorphism: return "NotAnAutomorphism";
        case ErrorCode::UnknownDataset: return "UnknownDataset";
        case ErrorCode::NotHighestWeight: return "NotHighestWeight";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::MultiplicityNotFree: return "MultiplicityNotFree";
        case ErrorCode::SelectionAmbiguous: return "SelectionAmbiguous";
        case ErrorCode::SelectionMissing: return "SelectionMissing";
        case ErrorCode::UnsupportedCase: return "UnsupportedCase";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::IOError: return "IOError";
    }
    return "Unknown";
}

Rational::Rational(const BigInt& num, const BigInt& den) : q_(num, den) {
    if (den == 0) throw Error(ErrorCode::SingularPoint, "zero denominator");
    q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    Rational r;
    if (r.q_.set_str(text, 10) != 0 || r.q_.get_den() == 0)
        throw Error(ErrorCode::ParseError, "not a rational number: '" + text + "'");
    r.q_.canonicalize();
    return r;
}

BigInt Rational::to_integer() const {
    if (!is_integer()) throw Error(ErrorCode::NonIntegerResult, str() + " is not an integer");
    return q_.get_num();
}

Rational Rational::pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    Rational r;
    mpz_pow_ui(r.q_.get_num_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(r.q_.get_den_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw Error(ErrorCode::ZeroSubstitution, "inverse of zero");
    Rational r;
    r.q_ = 1 / q_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorCode::SingularPoint, "division by zero");
    q_ /= o.q_;
    return *this;
}

BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt ipow(const BigInt& base, unsigned long exponent) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

std::string to_string(const BigInt& v) { return v.get_str(); }

}  // namespace sevlab

std::size_t std::hash<sevlab::Rational>::operator()(const sevlab::Rational& r) const noexcept {
    const auto& q = r.raw();
    std::size_t h = mpz_get_ui(q.get_num_mpz_t()) * 1000003u;
    h ^= mpz_get_ui(q.get_den_mpz_t()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= static_cast<std::size_t>(sgn(q) + 1);
    return h;
}
