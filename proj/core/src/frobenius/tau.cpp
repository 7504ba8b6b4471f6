#include "specvar/frobenius/tau.hpp"

#include <algorithm>
#include <cmath>

#include "specvar/frobenius/numerics.hpp"

namespace specvar::frob {

namespace {
constexpr double kEtaTol = 1e-300;
}

TauData rotation_coefficients(const FrobeniusModel& model, const Vec& t,
                              std::vector<int> sqrt_signs) {
    const int m = model.m();
    if (sqrt_signs.empty()) sqrt_signs.assign(m, 1);
    if (static_cast<int>(sqrt_signs.size()) != m)
        throw BadParams("sqrt_signs needs one entry per dimension");
    for (int s : sqrt_signs)
        if (s != 1 && s != -1) throw BadParams("sqrt_signs entries must be +-1");

    const PointAlgebra pa = idempotents_at(model, t);
    const MetricData md = metric_data_at(model, pa);

    TauData td;
    td.t = t;
    td.u = pa.u;
    td.eta_i = md.eta_i;
    td.eta_ij = md.eta_ij;
    td.sqrt_signs = std::move(sqrt_signs);
    td.sqrt_eta = Vec(m);
    for (int i = 0; i < m; ++i) {
        if (std::abs(md.eta_i(i)) < kEtaTol)
            throw ZeroEta("eta_" + std::to_string(i + 1) + " vanishes at this point");
        td.sqrt_eta(i) = Complex(static_cast<double>(td.sqrt_signs[i])) * std::sqrt(md.eta_i(i));
    }

    td.gamma = Mat::Zero(m, m);
    td.V = Mat::Zero(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            td.gamma(i, j) = Complex(0.5) * md.eta_ij(i, j) / (td.sqrt_eta(i) * td.sqrt_eta(j));
            td.V(i, j) = -pa.u_diff(i, j) * td.gamma(i, j);
        }
    return td;
}

DlogTau dlog_tau_at(const FrobeniusModel& model, const Vec& t) {
    const int m = model.m();
    const PointAlgebra pa = idempotents_at(model, t);
    const MetricData md = metric_data_at(model, pa);

    DlogTau form;
    form.du_coeffs = Vec::Zero(m);
    for (int i = 0; i < m; ++i) {
        Complex acc(0.0);
        for (int j = 0; j < m; ++j) {
            if (j == i) continue;
            const Complex num = md.eta_ij(i, j) * md.eta_ij(i, j);
            acc += pa.u_diff(i, j) * num / (md.eta_i(i) * md.eta_i(j));
        }
        form.du_coeffs(i) = acc / Complex(8.0);
    }
    form.dt_coeffs = pa.du_dt.transpose() * form.du_coeffs;
    return form;
}

double darboux_egoroff_residual(const FrobeniusModel& model, const Vec& t, double h) {
    const int m = model.m();
    if (m < 3) throw BadParams("Darboux-Egoroff triples need m >= 3");

    const TauData td = rotation_coefficients(model, t);
    const PointAlgebra pa = idempotents_at(model, t);

    double worst = 0.0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (j == i) continue;
            auto gamma_ij = [&](const Vec& point) {
                return rotation_coefficients(model, point).gamma(i, j);
            };
            for (int k = 0; k < m; ++k) {
                if (k == i || k == j) continue;
                const Complex lhs = directional_derivative(gamma_ij, t, pa.idempotents[k], h);
                const Complex rhs = td.gamma(i, k) * td.gamma(k, j);
                worst = std::max(worst, std::abs(lhs - rhs));
            }
        }
    return worst;
}

VMatrixReport v_matrix_check(const FrobeniusModel& model, const Vec& t) {
    if (model.m() != 2) throw BadParams("v_matrix_check is defined for the m = 2 model");
    const TauData td = rotation_coefficients(model, t);

    VMatrixReport report;
    report.minus_v = -td.V;
    Eigen::ComplexEigenSolver<Mat> solver(report.minus_v);
    for (int i = 0; i < 2; ++i) report.eigenvalues.push_back(solver.eigenvalues()(i));
    std::sort(report.eigenvalues.begin(), report.eigenvalues.end(),
              [](const Complex& a, const Complex& b) { return a.real() < b.real(); });

    // d = (1, 2/n), D = 1 + 2/n, so d_i - D/2 = +-(n-2)/(2n).
    const int n = model.n();
    report.expected = {Rational(-(n - 2), 2 * n), Rational(n - 2, 2 * n)};
    for (std::size_t i = 0; i < 2; ++i) {
        const double dev =
            std::abs(report.eigenvalues[i] - Complex(report.expected[i].to_double()));
        report.max_deviation = std::max(report.max_deviation, dev);
    }
    return report;
}

}  // namespace specvar::frob
