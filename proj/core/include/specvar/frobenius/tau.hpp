#pragma once

#include <vector>

#include "specvar/frobenius/model.hpp"

namespace specvar::frob {

/// Rotation-coefficient data at an off-caustic point.
///   gamma_ij = (1/2) eta_ij / (sqrt(eta_i) sqrt(eta_j)),  V_ij = -(u_i - u_j) gamma_ij.
/// sqrt_signs records the branch choice per index (+1: principal square root).
/// gamma is symmetric, V skew-symmetric; both have zero diagonal.
struct TauData {
    Vec t;
    std::vector<Complex> u;
    Vec eta_i;
    Mat eta_ij;
    Vec sqrt_eta;
    std::vector<int> sqrt_signs;
    Mat gamma;
    Mat V;
};

/// Throws OnCaustic off the domain and ZeroEta when some eta_i vanishes.
/// sqrt_signs defaults to all +1; entries must be +-1.
TauData rotation_coefficients(const FrobeniusModel& model, const Vec& t,
                              std::vector<int> sqrt_signs = {});

/// Coefficients of d log tau_I = (1/8) sum_{i != j} (u_i - u_j)
/// (eta_ij^2 / (eta_i eta_j)) du_i, in canonical (du) and coordinate (dt)
/// frames. Only even combinations of the square roots enter, so the value is
/// branch independent.
struct DlogTau {
    Vec du_coeffs;
    Vec dt_coeffs;
};

DlogTau dlog_tau_at(const FrobeniusModel& model, const Vec& t);

/// Max over distinct (i,j,k) of |e_k gamma_ij - gamma_ik gamma_kj| with the
/// directional derivative taken by Richardson-extrapolated central
/// differences. Needs m >= 3 (no triple exists otherwise).
double darboux_egoroff_residual(const FrobeniusModel& model, const Vec& t, double h = 1e-5);

struct VMatrixReport {
    Mat minus_v;                      // the matrix -(V_ij)
    std::vector<Complex> eigenvalues; // sorted by real part
    std::vector<Rational> expected;   // {d_i - D/2} = {+-(n-2)/(2n)}
    double max_deviation = 0.0;
};

/// Eigenvalues of -(V_ij) against {d_i - D/2} for the m = 2 model with
/// E = sum u_i e_i.
VMatrixReport v_matrix_check(const FrobeniusModel& model, const Vec& t);

}  // namespace specvar::frob
