#include "specvar/joins.hpp"

#include "specvar/errors.hpp"

namespace specvar {

Spectrum join(const Spectrum& a, const Spectrum& b) {
    std::vector<Rational> values;
    values.reserve(a.mu() * b.mu());
    for (const auto& x : a.values())
        for (const auto& y : b.values()) values.push_back(x + y + 1);
    return Spectrum(std::move(values), a.ambient() + b.ambient() + 1);
}

namespace {

Spectrum one_variable_spectrum(int a) {
    if (a < 2) throw BadExponent("Brieskorn-Pham exponent " + std::to_string(a) + " < 2");
    std::vector<Rational> values;
    values.reserve(a - 1);
    for (int k = 1; k < a; ++k) values.push_back(Rational(k, a) - 1);
    return Spectrum(std::move(values), 0);
}

}  // namespace

Spectrum brieskorn_pham(const std::vector<int>& exponents) {
    if (exponents.empty()) throw BadExponent("Brieskorn-Pham needs at least one exponent");
    Spectrum s = one_variable_spectrum(exponents.front());
    for (std::size_t i = 1; i < exponents.size(); ++i)
        s = join(s, one_variable_spectrum(exponents[i]));
    return s;
}

GammaJoinReport gamma_join_check(const Spectrum& a, const Spectrum& b) {
    GammaJoinReport r;
    r.lhs = gamma_from_spectrum(join(a, b));
    r.rhs = Rational(Integer(a.mu())) * gamma_from_spectrum(b) +
            Rational(Integer(b.mu())) * gamma_from_spectrum(a);
    r.equal = (r.lhs == r.rhs);
    return r;
}

}  // namespace specvar
