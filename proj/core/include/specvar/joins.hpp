#pragma once

#include <vector>

#include "specvar/spectrum.hpp"

namespace specvar {

/// Thom-Sebastiani join: the spectrum of f + g in disjoint variables is the
/// multiset { alpha_i + beta_j + 1 } with ambient dimension n_1 + n_2 + 1.
/// Accepts any symmetric multisets, not only realizable spectra.
Spectrum join(const Spectrum& a, const Spectrum& b);

/// Spectrum of sum x_i^{a_i} as an iterated join of the one-variable spectra
/// { k/a - 1 | k = 1..a-1 }. Equals spectrum_from_weights(1/a_0,...,1/a_n).
/// Throws BadExponent if some a_i < 2.
Spectrum brieskorn_pham(const std::vector<int>& exponents);

struct GammaJoinReport {
    Rational lhs;  // gamma(join(a, b))
    Rational rhs;  // mu(a)*gamma(b) + mu(b)*gamma(a)
    bool equal = false;
};

/// Bilinearity of gamma under joins; equal is true for all symmetric inputs.
GammaJoinReport gamma_join_check(const Spectrum& a, const Spectrum& b);

}  // namespace specvar
