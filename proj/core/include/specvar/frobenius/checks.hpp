#pragma once

#include <string>
#include <vector>

#include "specvar/frobenius/model.hpp"

namespace specvar::frob {

/// One verification row: measured value (complex parts kept separate),
/// expected value, tolerance, verdict.
struct CheckResult {
    std::string name;
    double measured = 0.0;
    double measured_imag = 0.0;
    double expected = 0.0;
    double tol = 0.0;
    bool pass = false;
    std::string detail;
};

/// Multiplication/F-manifold axioms: commutativity, associativity, unit,
/// metric invariance, the integrability condition by finite-difference Lie
/// derivatives, Lie_E(o) = o with the 2/n Euler coefficient (and, when
/// n != m, evidence that 2/m fails), plus the exact potentiality oracle.
std::vector<CheckResult> axiom_checks(const FrobeniusModel& model, unsigned seed = 1234,
                                      int sample_points = 100);

/// Socle-field facts: the closed form 2 d2 + d3 + ... + dm, the exact
/// det(H_op) = -4 t_2^{n-2}, the numeric vanishing-order slope fit, dual-base
/// independence, and the metric-change rule H = Z o H~.
std::vector<CheckResult> socle_checks(const FrobeniusModel& model, unsigned seed = 1234);

/// Rotation coefficients and d log tau_I: symmetry, the closed form of
/// gamma_12, skewness of V, e/E-derivative identities, Darboux-Egoroff
/// (m >= 3), numerical closedness of d log tau_I, branch invariance, and the
/// V-matrix spectrum (m = 2).
std::vector<CheckResult> tau_checks(const FrobeniusModel& model);

/// Caustic behaviour: fitted residue of d log tau_I against -(n-2)^2/(16n)
/// and the log-coefficient of G. Needs n >= 3.
std::vector<CheckResult> residue_checks(const FrobeniusModel& model);

/// Euler/G-function: Delta G along t_2: 1 -> e against the closed form,
/// E G against the degree formula (m = 2), and Lie_E(g) = D g (m = 2).
std::vector<CheckResult> euler_checks(const FrobeniusModel& model);

/// Every suite that applies to the model.
std::vector<CheckResult> all_checks(const FrobeniusModel& model, unsigned seed = 1234);

}  // namespace specvar::frob
