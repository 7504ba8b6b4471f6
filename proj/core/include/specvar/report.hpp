#pragma once

#include <string>
#include <vector>

#include "specvar/errors.hpp"
#include "specvar/families.hpp"
#include "specvar/frobenius/checks.hpp"
#include "specvar/joins.hpp"
#include "specvar/weight_system.hpp"

namespace specvar::report {

/// All rationals are serialized as "p/q" strings ("p" when integral); no
/// floating point enters the exact reports. Emission is deterministic:
/// identical inputs give byte-identical output.

std::string spectrum_json(const WeightSystem& w);
std::string spectrum_csv(const WeightSystem& w);

std::string bp_json(const std::vector<int>& exponents);
std::string bp_csv(const std::vector<int>& exponents);

std::string join_json(const WeightSystem& left, const WeightSystem& right);
std::string join_csv(const WeightSystem& left, const WeightSystem& right);

std::string tpqr_json(int p, int q, int r);
std::string tpqr_csv(int p, int q, int r);
std::string bimodal_json(BimodalSeries series, int p);
std::string bimodal_csv(BimodalSeries series, int p);

std::string scan_tpqr_json(int max);
std::string scan_tpqr_csv(int max);
std::string scan_bimodal_json(int pmax);
std::string scan_bimodal_csv(int pmax);

std::string checks_json(const frob::FrobeniusModel& model,
                        const std::vector<frob::CheckResult>& checks);
std::string checks_csv(const std::vector<frob::CheckResult>& checks);

/// Machine-readable error object for exit-code-2 paths.
std::string error_json(const DomainError& e);

}  // namespace specvar::report
