#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "specvar/frobenius/model.hpp"

namespace specvar::frob {

/// Scalar field on C^m.
using ScalarField = std::function<Complex(const Vec&)>;
/// 1-form: value on a tangent direction at a point.
using OneForm = std::function<Complex(const Vec& t, const Vec& dir)>;
/// Vector field.
using VectorField = std::function<Vec(const Vec&)>;

struct QuadratureOptions {
    double tol = 1e-10;   // absolute difference between successive refinements
    int max_halvings = 18;
};

/// Integrates a 1-form along the straight segment from a to b by composite
/// 8-point Gauss-Legendre, doubling the panel count until two successive
/// estimates agree within tol. Throws NoConvergence.
Complex integrate_segment(const OneForm& form, const Vec& a, const Vec& b,
                          const QuadratureOptions& opts = {});

/// Same along a polyline.
Complex integrate_path(const OneForm& form, const std::vector<Vec>& path,
                       const QuadratureOptions& opts = {});

/// Central-difference directional derivative with one Richardson step:
/// (4 D(h/2) - D(h)) / 3.
Complex directional_derivative(const ScalarField& f, const Vec& t, const Vec& dir,
                               double h = 1e-5);

/// Plain central difference at a fixed step (for order-of-convergence tests).
Complex central_difference(const ScalarField& f, const Vec& t, const Vec& dir, double h);

/// Componentwise directional derivative of a vector field (Richardson).
Vec directional_derivative(const VectorField& f, const Vec& t, const Vec& dir, double h = 1e-5);

/// Lie bracket [v, w](t) = D_v w - D_w v by finite differences.
Vec lie_bracket(const VectorField& v, const VectorField& w, const Vec& t, double h = 1e-5);

/// Least-squares line fit y ~ slope*x + intercept.
std::pair<double, double> least_squares_line(const std::vector<double>& x,
                                             const std::vector<double>& y);

}  // namespace specvar::frob
