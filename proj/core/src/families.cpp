#include "specvar/families.hpp"

#include "specvar/errors.hpp"

namespace specvar {

Rational bimodal_kappa(BimodalSeries s) {
    switch (s) {
        case BimodalSeries::E3p: return 9;
        case BimodalSeries::Z1p: return 7;
        case BimodalSeries::Q2p: return 6;
        case BimodalSeries::W1p: return 6;
        case BimodalSeries::S1p: return 5;
        case BimodalSeries::W1p_sharp: return 6;
        case BimodalSeries::S1p_sharp: return 5;
        case BimodalSeries::U1p: return Rational(9, 2);
    }
    throw BadParams("unknown bimodal series");
}

const char* to_string(BimodalSeries s) {
    switch (s) {
        case BimodalSeries::E3p: return "E3p";
        case BimodalSeries::Z1p: return "Z1p";
        case BimodalSeries::Q2p: return "Q2p";
        case BimodalSeries::W1p: return "W1p";
        case BimodalSeries::S1p: return "S1p";
        case BimodalSeries::W1p_sharp: return "W1p#";
        case BimodalSeries::S1p_sharp: return "S1p#";
        case BimodalSeries::U1p: return "U1p";
    }
    return "?";
}

std::optional<BimodalSeries> parse_bimodal_series(const std::string& name) {
    for (auto s : kAllBimodalSeries)
        if (name == to_string(s)) return s;
    // Accept "W1p_sharp" style spellings too.
    if (name == "W1p_sharp") return BimodalSeries::W1p_sharp;
    if (name == "S1p_sharp") return BimodalSeries::S1p_sharp;
    return std::nullopt;
}

Rational gamma_tpqr(int p, int q, int r) {
    if (p < 2 || q < 2 || r < 2)
        throw OutOfRange("T_pqr parameters must be >= 2");
    const Rational s = Rational(1, p) + Rational(1, q) + Rational(1, r);
    if (s > Rational(1))
        throw OutOfRange("1/p + 1/q + 1/r = " + s.str() +
                         " > 1: outside the cusp/simple-elliptic range");
    return (Rational(1) - s) / 24;
}

Rational gamma_bimodal(BimodalSeries s, int p) {
    if (p < 1) throw OutOfRange("bimodal series parameter p must be >= 1");
    const Rational kappa = bimodal_kappa(s);
    const Rational prefactor = Rational(p) / (Rational(48) * kappa);
    switch (s) {
        case BimodalSeries::W1p_sharp:
        case BimodalSeries::S1p_sharp:
        case BimodalSeries::U1p:
            return prefactor * (Rational(1) + Rational(1) / (Rational(p) + 2 * kappa));
        default:
            return prefactor * (Rational(1) - Rational(1) / (Rational(p) + kappa));
    }
}

ScanReport<TpqrRow> scan_tpqr(int max) {
    ScanReport<TpqrRow> report;
    for (int p = 2; p <= max; ++p)
        for (int q = p; q <= max; ++q)
            for (int r = q; r <= max; ++r) {
                if (Rational(1, p) + Rational(1, q) + Rational(1, r) > Rational(1)) continue;
                TpqrRow row;
                row.p = p;
                row.q = q;
                row.r = r;
                row.gamma = gamma_tpqr(p, q, r);
                row.nonneg = row.gamma >= Rational(0);
                row.is_zero = row.gamma.is_zero();
                if (!report.min_gamma || row.gamma < *report.min_gamma)
                    report.min_gamma = row.gamma;
                if (row.is_zero) report.zeros.push_back(row);
                report.rows.push_back(std::move(row));
            }
    return report;
}

ScanReport<BimodalRow> scan_bimodal(int pmax) {
    ScanReport<BimodalRow> report;
    for (auto s : kAllBimodalSeries)
        for (int p = 1; p <= pmax; ++p) {
            BimodalRow row;
            row.series = s;
            row.p = p;
            row.gamma = gamma_bimodal(s, p);
            row.nonneg = row.gamma >= Rational(0);
            row.is_zero = row.gamma.is_zero();
            if (!report.min_gamma || row.gamma < *report.min_gamma)
                report.min_gamma = row.gamma;
            if (row.is_zero) report.zeros.push_back(row);
            report.rows.push_back(std::move(row));
        }
    return report;
}

}  // namespace specvar
