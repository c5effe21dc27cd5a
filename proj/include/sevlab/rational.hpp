#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>

namespace sevlab {

using BigInt = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}
    Rational(int v) : q_(v) {}
    Rational(const BigInt& v) : q_(v) {}
    Rational(const BigInt& num, const BigInt& den);
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    /// Parses "p", "-p" or "p/q".
    static Rational parse(const std::string& text);

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// Integer value; throws NonIntegerResult when the value is not integral.
    BigInt to_integer() const;
    std::string str() const { return q_.get_str(); }

    Rational pow(long exponent) const;
    Rational inverse() const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.q_ = -a.q_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    const mpq_class& raw() const { return q_; }

private:
    mpq_class q_;
};

BigInt binomial(long n, long k);
BigInt ipow(const BigInt& base, unsigned long exponent);
std::string to_string(const BigInt& v);

}  // namespace sevlab

template <>
struct std::hash<sevlab::Rational> {
    std::size_t operator()(const sevlab::Rational& r) const noexcept;
};
