#include "specvar/frobenius/gfunction.hpp"

#include <cmath>

#include "specvar/frobenius/socle.hpp"
#include "specvar/frobenius/tau.hpp"
#include "specvar/spectrum.hpp"

namespace specvar::frob {

namespace {

Mat hop_matrix(const FrobeniusModel& model, const Vec& t) {
    return model.mult_operator(t, socle_field(model, t));
}

}  // namespace

Complex g_one_form(const FrobeniusModel& model, const Vec& t, const Vec& dir) {
    const DlogTau tau = dlog_tau_at(model, t);
    const Complex dtau = (tau.dt_coeffs.transpose() * dir)(0, 0);

    // d log det(H_op)[dir] = tr(H_op^{-1} D_dir H_op); entries are polynomial
    // in t_2, so a Richardson central difference is accurate to roundoff.
    const double h = 1e-5;
    const Mat coarse = (hop_matrix(model, t + h * dir) - hop_matrix(model, t - h * dir)) /
                       Complex(2.0 * h);
    const Mat fine = (hop_matrix(model, t + (h / 2.0) * dir) -
                      hop_matrix(model, t - (h / 2.0) * dir)) / Complex(h);
    const Mat d_hop = (Complex(4.0) * fine - coarse) / Complex(3.0);
    const Mat hop = hop_matrix(model, t);
    Eigen::FullPivLU<Mat> lu(hop);
    if (!lu.isInvertible()) throw DegenerateMetric("H_op is singular at the evaluation point");
    const Complex dlogdet = lu.solve(d_hop).trace();

    // dG = d log tau_I + (1/48) d log det(H_op).
    return dtau + dlogdet / Complex(48.0);
}

Complex g_function_delta(const FrobeniusModel& model, const std::vector<Vec>& path,
                         const QuadratureOptions& opts) {
    for (const Vec& p : path)
        if (model.on_caustic(p)) throw PathOnCaustic("path vertex lies on the caustic");
    try {
        return integrate_path(
            [&](const Vec& t, const Vec& dir) { return g_one_form(model, t, dir); }, path, opts);
    } catch (const OnCaustic& e) {
        throw PathOnCaustic(e.what());
    }
}

CausticResidueReport caustic_residue(const FrobeniusModel& model) {
    if (model.n() < 3) throw BadParams("caustic residue needs n >= 3 (no caustic for n = 2)");

    Vec t = Vec::Zero(model.m());
    t(0) = Complex(0.3, 0.0);
    for (int i = 2; i < model.m(); ++i) t(i) = Complex(0.4 + 0.2 * i, 0.0);

    // The dt_2 coefficient of d log tau_I behaves like c/t_2 + analytic;
    // sample c(t_2)*t_2 on a geometric sequence and read off the constant.
    std::vector<Complex> samples;
    for (int k = 1; k <= 6; ++k) {
        t(1) = Complex(std::pow(10.0, -k), 0.0);
        const DlogTau form = dlog_tau_at(model, t);
        samples.push_back(form.dt_coeffs(1) * t(1));
    }

    CausticResidueReport report;
    Complex mean(0.0);
    for (const Complex& s : samples) mean += s;
    mean /= Complex(static_cast<double>(samples.size()));
    report.fitted = mean.real();
    report.fitted_imag = mean.imag();
    for (std::size_t a = 0; a < samples.size(); ++a)
        for (std::size_t b = a + 1; b < samples.size(); ++b)
            report.error_bar = std::max(report.error_bar, std::abs(samples[a] - samples[b]));
    const int n = model.n();
    report.expected = Rational(-(n - 2) * (n - 2), 16 * n);
    return report;
}

EulerGammaReport euler_gamma_check(const FrobeniusModel& model) {
    if (model.m() != 2) throw BadParams("euler_gamma_check is defined for the m = 2 model");
    const int n = model.n();

    Vec t(2);
    t << Complex(0.37, 0.11), Complex(1.3, 0.45);
    EulerGammaReport report;
    report.EG = g_one_form(model, t, model.euler(t));

    FrobeniusDegrees fd;
    fd.d = {Rational(1), Rational(2, n)};
    fd.D = Rational(1) + Rational(2, n);
    report.gamma_formula = gamma_from_degrees(fd);
    report.closed_form = Rational(-(n - 2) * (n - 3), 12 * n * n);
    if (report.gamma_formula != report.closed_form)
        throw DomainError("GammaFormulaMismatch",
                          "degree formula disagrees with -(n-2)(n-3)/(12 n^2)");
    report.deviation = std::abs(report.EG - Complex(report.gamma_formula.to_double()));
    return report;
}

}  // namespace specvar::frob
