#include "specvar/weight_system.hpp"

#include <algorithm>

#include "specvar/errors.hpp"

namespace specvar {

WeightSystem::WeightSystem(std::vector<Rational> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw BadParams("weight system needs at least one weight");
    for (const auto& w : weights_) {
        if (!(Rational(0) < w && w <= Rational(1, 2)))
            throw OutOfRange("weight " + w.str() + " outside (0, 1/2]");
    }
    std::sort(weights_.begin(), weights_.end());

    QPoly num = QPoly::one();
    QPoly den = QPoly::one();
    for (const auto& w : weights_) {
        num = num * (QPoly::term(1, 1) - QPoly::term(w, 1));
        den = den * (QPoly::term(w, 1) - QPoly::term(0, 1));
    }
    product_ = qpoly_exact_div(num, den);  // NotDivisible: inadmissible weights
    for (const auto& [e, c] : product_.terms()) {
        if (c < 0)
            throw NotDivisible("characteristic product has a negative multiplicity at T^" +
                               e.str());
    }
}

WeightSystem WeightSystem::from_exponents(const std::vector<int>& exponents) {
    std::vector<Rational> ws;
    ws.reserve(exponents.size());
    for (int a : exponents) {
        if (a < 2) throw BadExponent("Brieskorn-Pham exponent " + std::to_string(a) + " < 2");
        ws.emplace_back(1, a);
    }
    return WeightSystem(std::move(ws));
}

Integer milnor_number(const WeightSystem& w) {
    Rational mu(1);
    for (const auto& wi : w.weights()) mu *= (Rational(1) - wi) / wi;
    if (!mu.is_integer())
        throw NotInteger("prod (1 - w_i)/w_i = " + mu.str() + " is not an integer");
    // Independent route: total coefficient mass of the expanded product.
    if (mu.numerator() != w.characteristic_product().mass())
        throw DomainError("MilnorMismatch",
                          "product formula and characteristic expansion disagree");
    return mu.numerator();
}

Spectrum spectrum_from_weights(const WeightSystem& w) {
    std::vector<Rational> alphas;
    for (const auto& [e, c] : w.characteristic_product().terms())
        alphas.insert(alphas.end(), c.convert_to<std::size_t>(), e - 1);
    return Spectrum(std::move(alphas), w.ambient());
}

VarianceReport verify_variance_identity(const WeightSystem& w) {
    const Spectrum s = spectrum_from_weights(w);
    VarianceReport r;
    r.lhs = variance(s);
    r.rhs = (s.max() - s.min()) / 12;
    r.equal = (r.lhs == r.rhs);
    return r;
}

}  // namespace specvar
