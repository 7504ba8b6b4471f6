#pragma once

#include <vector>

#include "specvar/frobenius/model.hpp"
#include "specvar/frobenius/numerics.hpp"

namespace specvar::frob {

/// The 1-form dG = d log tau_I - (1/24) d log J evaluated on a direction,
/// with d log J = -(1/2) d log det(H_op) computed through Jacobi's formula
/// tr(H_op^{-1} D_v H_op). Additive constants of G and the scale of J drop
/// out of this form.
Complex g_one_form(const FrobeniusModel& model, const Vec& t, const Vec& dir);

/// G(end) - G(start) along a polyline that avoids the caustic.
/// Throws PathOnCaustic and NoConvergence.
Complex g_function_delta(const FrobeniusModel& model, const std::vector<Vec>& path,
                         const QuadratureOptions& opts = {});

struct CausticResidueReport {
    double fitted = 0.0;          // residue of d log tau_I along the caustic
    double fitted_imag = 0.0;
    double error_bar = 0.0;       // max pairwise deviation over the fit points
    Rational expected;            // -(n-2)^2 / (16 n)
};

/// Fits the dt_2/t_2 coefficient of d log tau_I along the ray
/// t_2 = 10^{-1}..10^{-6}. Needs n >= 3 (a caustic to approach).
CausticResidueReport caustic_residue(const FrobeniusModel& model);

struct EulerGammaReport {
    Complex EG;                 // directional derivative of G along E
    Rational gamma_formula;     // -(1/4) sum (d_i - D/2)^2 + m(2-D)/48
    Rational closed_form;       // -(n-2)(n-3)/(12 n^2); equals gamma_formula
    double deviation = 0.0;     // |EG - gamma_formula|
};

/// E G for the m = 2 model at a generic point against the degree formula
/// with d = (1, 2/n), D = 1 + 2/n.
EulerGammaReport euler_gamma_check(const FrobeniusModel& model);

}  // namespace specvar::frob
