#pragma once

#include <map>
#include <string>
#include <string_view>

#include "specvar/rational.hpp"

namespace specvar {

/// Finitely supported polynomial in T with rational exponents and integer
/// coefficients, e.g. T^2 - 2*T^{3/2} + T. No zero coefficients are stored
/// and terms iterate in ascending exponent order.
///
/// Values are immutable after construction and safe to share across threads.
class QPoly {
public:
    using Terms = std::map<Rational, Integer>;

    QPoly() = default;

    /// Single term c * T^e (the zero polynomial if c == 0).
    static QPoly term(const Rational& exponent, const Integer& coeff);
    static QPoly one() { return term(0, 1); }
    static QPoly zero() { return QPoly(); }

    /// Adopts an already-collected term map, dropping zero coefficients.
    static QPoly from_terms(Terms terms);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Integer coefficient(const Rational& exponent) const;

    /// Sum of all coefficients, i.e. the value at T = 1.
    Integer mass() const;

    Rational min_exponent() const;  // throws on the zero polynomial
    Rational max_exponent() const;

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const Integer& c);
    QPoly operator-() const;

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    /// Multiplies by T^d, shifting every exponent.
    QPoly shifted(const Rational& d) const;

    /// d/dT. Every coefficient*exponent product must stay integral
    /// (always true for integer exponents); throws DomainError otherwise.
    QPoly derivative() const;

    /// lcm of the denominators of all exponents (1 for the zero polynomial).
    Integer exponent_lcm() const;

    /// Substitutes T = S^{1/N}: exponents are multiplied by N and must become
    /// integers. Together with from_rescaled this is the identity.
    std::map<Integer, Integer> rescaled(const Integer& N) const;
    static QPoly from_rescaled(const std::map<Integer, Integer>& terms, const Integer& N);

    /// JSON list of [exponent "p/q", coefficient "n"] pairs, ascending exponent.
    std::string to_json() const;
    static QPoly from_json(std::string_view text);

    std::string str() const;

private:
    void add_term(const Rational& e, const Integer& c);
    Terms terms_;
};

/// Exact quotient num/den in integer-coefficient polynomials with rational
/// exponents. Internally rescales exponents by the least common denominator N
/// of both operands so the work is ordinary long division over the integers in
/// S = T^{1/N}. Throws NotDivisible on a nonzero remainder, which for
/// characteristic products signals an inadmissible weight system.
QPoly qpoly_exact_div(const QPoly& num, const QPoly& den);

inline QPoly qpoly_mul(const QPoly& a, const QPoly& b) { return a * b; }

}  // namespace specvar
