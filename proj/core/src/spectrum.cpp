#include "specvar/spectrum.hpp"

#include <algorithm>

#include "specvar/errors.hpp"

namespace specvar {

namespace {

// The heavy sums below share one denominator across all entries and
// accumulate in integers; per-term rational normalization would dominate the
// runtime on large spectra.
Integer common_denominator(const std::vector<Rational>& values) {
    Integer m = 1;
    for (const auto& v : values) m = lcm(m, v.denominator());
    return m;
}

std::vector<Integer> scaled_by(const std::vector<Rational>& values, const Integer& m) {
    std::vector<Integer> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(v.numerator() * (m / v.denominator()));
    return out;
}

// sum (alpha_i - (n-1)/2)^2 as (integer, square of the common denominator).
std::pair<Integer, Integer> centered_square_sum(const Spectrum& s) {
    const Integer m2 = 2 * common_denominator(s.values());
    const Integer center = Integer(s.ambient() - 1) * (m2 / 2);
    Integer acc = 0;
    for (const auto& v : s.values()) {
        const Integer d = v.numerator() * (m2 / v.denominator()) - center;
        acc += d * d;
    }
    return {acc, m2 * m2};
}

/// Calls fn(value, multiplicity) for each run of equal values in a sorted list.
template <typename Fn>
void for_each_run(const std::vector<Rational>& sorted, Fn&& fn) {
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i + 1;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        fn(sorted[i], j - i);
        i = j;
    }
}

}  // namespace

Spectrum::Spectrum(std::vector<Rational> values, int ambient)
    : values_(std::move(values)), ambient_(ambient) {
    if (values_.empty()) throw DomainError("EmptySpectrum", "spectrum must have mu >= 1 entries");
    const Integer m = common_denominator(values_);
    std::vector<Integer> k = scaled_by(values_, m);
    if (!std::is_sorted(k.begin(), k.end())) {
        std::sort(values_.begin(), values_.end());
        k = scaled_by(values_, m);
    }
    const Rational n(ambient_);
    if (!(Rational(-1) < values_.front()))
        throw DomainError("SpectrumRange", "alpha_1 = " + values_.front().str() + " <= -1");
    if (!(values_.back() < n))
        throw DomainError("SpectrumRange",
                          "alpha_mu = " + values_.back().str() + " >= n = " + n.str());
    const Integer target = Integer(ambient_ - 1) * m;
    const std::size_t mu = values_.size();
    for (std::size_t i = 0; i <= (mu - 1) / 2; ++i) {
        if (k[i] + k[mu - 1 - i] != target)
            throw DomainError("SpectrumSymmetry",
                              "alpha_" + std::to_string(i + 1) + " + alpha_" +
                                  std::to_string(mu - i) + " != n - 1");
    }
}

CharacteristicFunction characteristic_function(const Spectrum& s) {
    QPoly::Terms terms;
    for_each_run(s.values(), [&](const Rational& a, std::size_t count) {
        terms.emplace_hint(terms.end(), a + 1, Integer(count));
    });
    return {QPoly::from_terms(std::move(terms)), Integer(s.mu())};
}

Rational variance(const Spectrum& s) {
    const auto [num, den] = centered_square_sum(s);
    return Rational(num, den * Integer(s.mu()));
}

Rational gamma_from_spectrum(const Spectrum& s) {
    const auto [num, den] = centered_square_sum(s);
    const Rational spread = s.max() - s.min();
    return Rational(-num, 4 * den) + Rational(Integer(s.mu())) * spread / 48;
}

FrobeniusDegrees frobenius_degrees(const Spectrum& s) {
    FrobeniusDegrees fd;
    fd.d.reserve(s.mu());
    const Rational a1 = s.min();
    // alpha ascending makes 1 + alpha_1 - alpha descending, with d_1 = 1.
    for (const auto& a : s.values()) fd.d.push_back(Rational(1) + a1 - a);
    fd.D = Rational(2) - (s.max() - s.min());
    return fd;
}

Rational gamma_from_degrees(const FrobeniusDegrees& fd) {
    const Rational half_D = fd.D / 2;
    Rational sum_sq;
    for (const auto& d : fd.d) {
        const Rational x = d - half_D;
        sum_sq += x * x;
    }
    const Integer m(fd.d.size());
    return Rational(-1, 4) * sum_sq + Rational(m) * (Rational(2) - fd.D) / 48;
}

}  // namespace specvar
