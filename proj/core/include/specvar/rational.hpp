#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "specvar/errors.hpp"

namespace specvar {

/// Arbitrary-precision integer used for polynomial coefficients and
/// multiplicities.
using Integer = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always in lowest terms with positive denominator;
/// arithmetic never rounds. Immutable in spirit: operations return new values.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}  // NOLINT: implicit by design
    Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw DomainError("ZeroDenominator", "rational with zero denominator");
        v_ = Q(num) / Q(den);
    }
    Rational(long long num, long long den) : Rational(Integer(num), Integer(den)) {}

    /// Parses "p/q" or "p" (optional leading sign, arbitrary precision).
    static Rational parse(std::string_view s);

    Integer numerator() const { return boost::multiprecision::numerator(v_); }
    Integer denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

    Rational operator-() const { return Rational(Q(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DomainError("DivisionByZero", "rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return v_ < 0 ? -*this : *this; }

    double to_double() const { return v_.convert_to<double>(); }

    /// "p/q", or just "p" when the value is an integer.
    std::string str() const;

private:
    using Q = boost::multiprecision::cpp_rational;
    explicit Rational(Q v) : v_(std::move(v)) {}
    Q v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// lcm of two positive integers.
inline Integer lcm(const Integer& a, const Integer& b) {
    return boost::multiprecision::lcm(a, b);
}

}  // namespace specvar
