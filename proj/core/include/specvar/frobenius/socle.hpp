#pragma once

#include <vector>

#include "specvar/frobenius/model.hpp"

namespace specvar::frob {

/// Socle field H = sum_i X_i o X~_i for any g-dual bases (X_i), (X~_i); the
/// sum is basis independent. Default bases: coordinate fields and the columns
/// of gram^{-1}. Throws DegenerateMetric.
Vec socle_field(const FrobeniusModel& model, const Vec& t);

/// Same with an explicit multiplication-invariant Gram matrix (used to check
/// that two metrics related by g~(X,Y) = g(Z o X, Y) satisfy H = Z o H~).
Vec socle_field_with_gram(const FrobeniusModel& model, const Vec& t, const Mat& gram);

/// Same with an explicit (invertible) primal basis, columns of B; the dual
/// basis is computed from the Gram matrix. For base-independence tests.
Vec socle_field_with_basis(const FrobeniusModel& model, const Vec& t, const Mat& basis);

/// Exact socle field for the model's own metric: components as polynomials in
/// t_2. For this metric it is the constant field 2 d2 + d3 + ... + dm.
std::vector<QPoly> socle_field_symbolic(const FrobeniusModel& model);

/// Exact determinant of H_op = (H o .) as a polynomial in t_2; equals
/// -4 t_2^{n-2} for every m.
QPoly det_hop_symbolic(const FrobeniusModel& model);

struct DetHopOrder {
    QPoly symbolic;       // det(H_op) as polynomial in t_2
    int order = 0;        // vanishing order along the caustic (n - 2)
    double fitted_slope = 0.0;  // numeric log-log slope of |det| as t_2 -> 0
};

/// Vanishing order of det(H_op) along the caustic, by the exact symbolic
/// route plus an independent slope fit of the numerically assembled operator
/// at t_2 = 10^{-1}..10^{-6}.
DetHopOrder det_hop_order(const FrobeniusModel& model);

}  // namespace specvar::frob
