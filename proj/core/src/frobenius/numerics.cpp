#include "specvar/frobenius/numerics.hpp"

#include <array>
#include <cmath>

namespace specvar::frob {

namespace {

// 8-point Gauss-Legendre on [-1, 1].
constexpr std::array<double, 8> kGlNodes = {
    -0.9602898564975362, -0.7966664774136267, -0.5255324099163290, -0.1834346424956498,
    0.1834346424956498,  0.5255324099163290,  0.7966664774136267,  0.9602898564975362};
constexpr std::array<double, 8> kGlWeights = {
    0.1012285362903763, 0.2223810344533745, 0.3137066458778873, 0.3626837833783620,
    0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};

Complex composite_gl(const OneForm& form, const Vec& a, const Vec& b, int panels) {
    const Vec dir = b - a;
    Complex acc(0.0);
    const double width = 1.0 / panels;
    for (int p = 0; p < panels; ++p) {
        const double mid = (p + 0.5) * width;
        for (std::size_t k = 0; k < kGlNodes.size(); ++k) {
            const double s = mid + 0.5 * width * kGlNodes[k];
            acc += kGlWeights[k] * form(a + s * dir, dir);
        }
    }
    return acc * Complex(0.5 * width);
}

}  // namespace

Complex integrate_segment(const OneForm& form, const Vec& a, const Vec& b,
                          const QuadratureOptions& opts) {
    Complex prev = composite_gl(form, a, b, 1);
    int panels = 2;
    for (int i = 0; i < opts.max_halvings; ++i, panels *= 2) {
        const Complex cur = composite_gl(form, a, b, panels);
        if (std::abs(cur - prev) < opts.tol) return cur;
        prev = cur;
    }
    throw NoConvergence("segment quadrature did not reach tol = " + std::to_string(opts.tol));
}

Complex integrate_path(const OneForm& form, const std::vector<Vec>& path,
                       const QuadratureOptions& opts) {
    if (path.size() < 2) throw BadParams("path needs at least two points");
    Complex acc(0.0);
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        acc += integrate_segment(form, path[i], path[i + 1], opts);
    return acc;
}

Complex central_difference(const ScalarField& f, const Vec& t, const Vec& dir, double h) {
    return (f(t + h * dir) - f(t - h * dir)) / Complex(2.0 * h);
}

Complex directional_derivative(const ScalarField& f, const Vec& t, const Vec& dir, double h) {
    const Complex coarse = central_difference(f, t, dir, h);
    const Complex fine = central_difference(f, t, dir, h / 2.0);
    return (Complex(4.0) * fine - coarse) / Complex(3.0);
}

Vec directional_derivative(const VectorField& f, const Vec& t, const Vec& dir, double h) {
    const Vec coarse = (f(t + h * dir) - f(t - h * dir)) / Complex(2.0 * h);
    const Vec fine = (f(t + (h / 2.0) * dir) - f(t - (h / 2.0) * dir)) / Complex(h);
    return (Complex(4.0) * fine - coarse) / Complex(3.0);
}

Vec lie_bracket(const VectorField& v, const VectorField& w, const Vec& t, double h) {
    return directional_derivative(w, t, v(t), h) - directional_derivative(v, t, w(t), h);
}

std::pair<double, double> least_squares_line(const std::vector<double>& x,
                                             const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw BadParams("least_squares_line needs matching inputs of size >= 2");
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    const double slope = (n * sxy - sx * sy) / denom;
    const double intercept = (sy - slope * sx) / n;
    return {slope, intercept};
}

}  // namespace specvar::frob
