#pragma once

#include <cstddef>
#include <vector>

#include "specvar/qpoly.hpp"
#include "specvar/rational.hpp"

namespace specvar {

/// Sorted multiset of spectral numbers alpha_1 <= ... <= alpha_mu of a
/// singularity in n+1 variables. Construction enforces
///   -1 < alpha_1,  alpha_mu < n,  alpha_i + alpha_{mu+1-i} = n - 1.
class Spectrum {
public:
    Spectrum(std::vector<Rational> values, int ambient);

    const std::vector<Rational>& values() const { return values_; }
    std::size_t mu() const { return values_.size(); }
    int ambient() const { return ambient_; }

    const Rational& min() const { return values_.front(); }
    const Rational& max() const { return values_.back(); }

    /// Expectation value (n-1)/2 around which the spectrum is symmetric.
    Rational center() const { return Rational(ambient_ - 1, 2); }

private:
    std::vector<Rational> values_;
    int ambient_ = 0;
};

/// Characteristic function chi = (1/mu) * sum_i T^{alpha_i + 1}, carried as
/// the integer-coefficient sum together with mu.
struct CharacteristicFunction {
    QPoly sum;  // sum_i T^{alpha_i + 1}
    Integer mu;
};

CharacteristicFunction characteristic_function(const Spectrum& s);

/// (1/mu) * sum_i (alpha_i - (n-1)/2)^2, exact.
Rational variance(const Spectrum& s);

/// gamma = -(1/4) sum_i (alpha_i - (n-1)/2)^2 + mu*(alpha_mu - alpha_1)/48.
/// Zero for every quasihomogeneous spectrum; conjecturally >= 0 in general.
Rational gamma_from_spectrum(const Spectrum& s);

/// Degrees d_i = 1 + alpha_1 - alpha_i (descending, so d_1 = 1) and
/// D = 2 - (alpha_mu - alpha_1); they satisfy d_i + d_{mu+1-i} = D.
struct FrobeniusDegrees {
    std::vector<Rational> d;
    Rational D;
};

FrobeniusDegrees frobenius_degrees(const Spectrum& s);

/// gamma recomputed from the degrees: -(1/4) sum (d_i - D/2)^2 + mu(2-D)/48.
/// Agrees exactly with gamma_from_spectrum for every spectrum.
Rational gamma_from_degrees(const FrobeniusDegrees& fd);

}  // namespace specvar
