#pragma once

#include <random>
#include <vector>

#include "specvar/rational.hpp"
#include "specvar/spectrum.hpp"

namespace specvar::testing {

/// Random symmetric multiset around (n-1)/2, valid as a Spectrum but not
/// necessarily realizable by a singularity.
inline Spectrum random_symmetric_spectrum(std::mt19937& rng, int ambient, int max_half_size = 6) {
    std::uniform_int_distribution<int> half_size(1, max_half_size);
    std::uniform_int_distribution<int> den(2, 24);
    std::uniform_int_distribution<int> with_center(0, 1);

    const Rational center(ambient - 1, 2);
    std::vector<Rational> values;
    const int h = half_size(rng);
    for (int i = 0; i < h; ++i) {
        // offset in (0, 1/2): keeps every entry inside (-1, n)
        const int q = den(rng);
        std::uniform_int_distribution<int> num(1, q - 1);
        const Rational offset(num(rng), 2 * q);
        values.push_back(center - offset);
        values.push_back(center + offset);
    }
    if (with_center(rng)) values.push_back(center);
    return Spectrum(values, ambient);
}

/// Independent gamma oracle: evaluates the defining formula over a plain
/// value list, bypassing the Spectrum helpers.
inline Rational gamma_oracle(const std::vector<Rational>& values, int ambient) {
    const Rational center(ambient - 1, 2);
    Rational sum_sq;
    Rational lo = values.front(), hi = values.front();
    for (const auto& a : values) {
        const Rational d = a - center;
        sum_sq += d * d;
        if (a < lo) lo = a;
        if (hi < a) hi = a;
    }
    return Rational(-1, 4) * sum_sq + Rational(Integer(values.size())) * (hi - lo) / 48;
}

}  // namespace specvar::testing
