#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "specvar/rational.hpp"

namespace specvar {

/// The eight bimodal series with closed-form gamma.
enum class BimodalSeries { E3p, Z1p, Q2p, W1p, S1p, W1p_sharp, S1p_sharp, U1p };

constexpr std::array<BimodalSeries, 8> kAllBimodalSeries = {
    BimodalSeries::E3p,       BimodalSeries::Z1p,       BimodalSeries::Q2p,
    BimodalSeries::W1p,       BimodalSeries::S1p,       BimodalSeries::W1p_sharp,
    BimodalSeries::S1p_sharp, BimodalSeries::U1p};

/// kappa = 9, 7, 6, 6, 5 for E3p, Z1p, Q2p, W1p, S1p and 6, 5, 9/2 for the
/// sharp/U series.
Rational bimodal_kappa(BimodalSeries s);

const char* to_string(BimodalSeries s);
std::optional<BimodalSeries> parse_bimodal_series(const std::string& name);

/// gamma(T_pqr) = (1/24)(1 - 1/p - 1/q - 1/r) for cusp and simple elliptic
/// singularities (1/p + 1/q + 1/r <= 1, each >= 2). Zero exactly on the
/// simple elliptic locus 1/p + 1/q + 1/r = 1; throws OutOfRange outside the
/// domain.
Rational gamma_tpqr(int p, int q, int r);

/// gamma of the bimodal series member with parameter p >= 1:
///   p/(48 kappa) * (1 - 1/(p + kappa))   for E3p, Z1p, Q2p, W1p, S1p
///   p/(48 kappa) * (1 + 1/(p + 2 kappa)) for W1p#, S1p#, U1p
/// Strictly positive for every p >= 1.
Rational gamma_bimodal(BimodalSeries s, int p);

struct TpqrRow {
    int p = 0, q = 0, r = 0;
    Rational gamma;
    bool nonneg = false;
    bool is_zero = false;
};

struct BimodalRow {
    BimodalSeries series = BimodalSeries::E3p;
    int p = 0;
    Rational gamma;
    bool nonneg = false;
    bool is_zero = false;
};

template <typename Row>
struct ScanReport {
    std::vector<Row> rows;            // lexicographic parameter order
    std::optional<Rational> min_gamma;
    std::vector<Row> zeros;
};

/// Sweeps 2 <= p <= q <= r <= max over the cusp/simple-elliptic domain.
/// Empty bounds give an empty report.
ScanReport<TpqrRow> scan_tpqr(int max);

/// Sweeps all eight series for 1 <= p <= pmax.
ScanReport<BimodalRow> scan_bimodal(int pmax);

}  // namespace specvar
