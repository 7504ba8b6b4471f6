#pragma once

#include <vector>

#include "specvar/qpoly.hpp"
#include "specvar/rational.hpp"
#include "specvar/spectrum.hpp"

namespace specvar {

/// Weights w_0..w_n in (0,1/2] of a quasihomogeneous singularity of degree 1.
///
/// Construction validates the range of each weight and admissibility, defined
/// operationally: the characteristic product
///     P(T) = prod_i (T - T^{w_i}) / (T^{w_i} - 1)
/// must divide out exactly with nonnegative coefficients. The expansion is
/// computed once and cached; it lists T^{alpha_i + 1} with multiplicities.
class WeightSystem {
public:
    explicit WeightSystem(std::vector<Rational> weights);

    /// Convenience: Brieskorn-Pham weights 1/a_i.
    static WeightSystem from_exponents(const std::vector<int>& exponents);

    const std::vector<Rational>& weights() const { return weights_; }
    std::size_t variables() const { return weights_.size(); }
    int ambient() const { return static_cast<int>(weights_.size()) - 1; }

    /// Cached expansion of the characteristic product.
    const QPoly& characteristic_product() const { return product_; }

private:
    std::vector<Rational> weights_;  // sorted ascending
    QPoly product_;
};

/// mu = prod_i (1 - w_i)/w_i, cross-checked against the coefficient mass of
/// the cached characteristic product. Throws NotInteger if the product
/// formula is non-integral (cannot happen for an admissible system).
Integer milnor_number(const WeightSystem& w);

/// Reads the spectrum off the characteristic product: exponents minus one,
/// with multiplicities, ambient n = (number of weights) - 1.
Spectrum spectrum_from_weights(const WeightSystem& w);

struct VarianceReport {
    Rational lhs;  // variance of the spectrum
    Rational rhs;  // (alpha_mu - alpha_1)/12
    bool equal = false;
};

/// Exact check of the identity  variance = (alpha_mu - alpha_1)/12  for
/// quasihomogeneous weight systems.
VarianceReport verify_variance_identity(const WeightSystem& w);

}  // namespace specvar
