#include "specvar/frobenius/socle.hpp"

#include <cmath>

#include "specvar/frobenius/numerics.hpp"

namespace specvar::frob {

namespace {

constexpr double kDegenerateTol = 1e-12;

Mat dual_basis(const Mat& gram, const Mat& basis) {
    // g(B_i, C_j) = delta_ij  =>  C = gram^{-1} B^{-T}.
    Eigen::FullPivLU<Mat> lu(basis.transpose() * gram);
    if (!lu.isInvertible() || std::abs(lu.determinant()) < kDegenerateTol)
        throw DegenerateMetric("gram/basis pairing is singular");
    return lu.inverse();
}

}  // namespace

Vec socle_field_with_basis(const FrobeniusModel& model, const Vec& t, const Mat& basis) {
    const Mat dual = dual_basis(model.gram(), basis);
    Vec h = Vec::Zero(model.m());
    for (int i = 0; i < model.m(); ++i) h += model.multiply(t, basis.col(i), dual.col(i));
    return h;
}

Vec socle_field_with_gram(const FrobeniusModel& model, const Vec& t, const Mat& gram) {
    const Mat basis = Mat::Identity(model.m(), model.m());
    const Mat dual = [&] {
        Eigen::FullPivLU<Mat> lu(gram);
        if (!lu.isInvertible() || std::abs(lu.determinant()) < kDegenerateTol)
            throw DegenerateMetric("gram matrix is singular");
        return lu.inverse();
    }();
    Vec h = Vec::Zero(model.m());
    for (int i = 0; i < model.m(); ++i) h += model.multiply(t, basis.col(i), dual.col(i));
    return h;
}

Vec socle_field(const FrobeniusModel& model, const Vec& t) {
    return socle_field_with_gram(model, t, model.gram());
}

namespace {

// Exact inverse of a rational matrix by Gauss-Jordan elimination.
std::vector<std::vector<Rational>> rational_inverse(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) throw DegenerateMetric("rational gram matrix is singular");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const Rational inv_p = Rational(1) / a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] *= inv_p;
            inv[col][j] *= inv_p;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col].is_zero()) continue;
            const Rational f = a[row][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[row][j] -= f * a[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

QPoly det_qpoly(const std::vector<std::vector<QPoly>>& mat, std::vector<int> cols) {
    // Laplace expansion along the remaining first row; zero entries prune.
    const std::size_t row = mat.size() - cols.size();
    if (cols.empty()) return QPoly::one();
    QPoly det;
    for (std::size_t pick = 0; pick < cols.size(); ++pick) {
        const QPoly& entry = mat[row][cols[pick]];
        if (entry.is_zero()) continue;
        std::vector<int> rest;
        rest.reserve(cols.size() - 1);
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != pick) rest.push_back(cols[j]);
        QPoly minor = entry * det_qpoly(mat, std::move(rest));
        det += (pick % 2 == 0) ? minor : -minor;
    }
    return det;
}

}  // namespace

std::vector<QPoly> socle_field_symbolic(const FrobeniusModel& model) {
    const int m = model.m();
    const auto inv = rational_inverse(model.gram_rational());
    std::vector<QPoly> h(m);
    for (int i = 0; i < m; ++i)
        for (int b = 0; b < m; ++b) {
            const Rational& c = inv[b][i];  // dual basis column i, component b
            if (c.is_zero()) continue;
            if (!c.is_integer())
                throw DomainError("NonIntegerGram", "symbolic socle needs an integral gram inverse");
            for (int k = 0; k < m; ++k) h[k] += model.structure_t2(i, b, k) * c.numerator();
        }
    return h;
}

QPoly det_hop_symbolic(const FrobeniusModel& model) {
    const int m = model.m();
    const auto h = socle_field_symbolic(model);
    std::vector<std::vector<QPoly>> op(m, std::vector<QPoly>(m));
    for (int k = 0; k < m; ++k)
        for (int j = 0; j < m; ++j) {
            QPoly entry;
            for (int i = 0; i < m; ++i) {
                if (h[i].is_zero()) continue;
                entry += h[i] * model.structure_t2(i, j, k);
            }
            op[k][j] = std::move(entry);
        }
    std::vector<int> cols(m);
    for (int j = 0; j < m; ++j) cols[j] = j;
    return det_qpoly(op, std::move(cols));
}

DetHopOrder det_hop_order(const FrobeniusModel& model) {
    DetHopOrder result;
    result.symbolic = det_hop_symbolic(model);
    const Rational lowest = result.symbolic.min_exponent();
    if (!lowest.is_integer())
        throw DomainError("BadOrder", "det(H_op) has a non-integer vanishing order");
    result.order = static_cast<int>(lowest.numerator().convert_to<long long>());

    // Independent numeric route: assemble H_op from the dual-basis sum and
    // fit log|det| against log t_2.
    std::vector<double> logs_t, logs_det;
    Vec t = Vec::Zero(model.m());
    t(0) = Complex(0.3, 0.0);
    for (int i = 2; i < model.m(); ++i) t(i) = Complex(0.2 + 0.1 * i, 0.0);
    for (int k = 1; k <= 6; ++k) {
        const double t2 = std::pow(10.0, -k);
        t(1) = Complex(t2, 0.0);
        const Vec h = socle_field(model, t);
        const Mat op = model.mult_operator(t, h);
        logs_t.push_back(std::log(t2));
        logs_det.push_back(std::log(std::abs(op.determinant())));
    }
    result.fitted_slope = least_squares_line(logs_t, logs_det).first;
    return result;
}

}  // namespace specvar::frob
