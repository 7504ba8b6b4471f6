#include "specvar/frobenius/checks.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "specvar/frobenius/gfunction.hpp"
#include "specvar/frobenius/numerics.hpp"
#include "specvar/frobenius/socle.hpp"
#include "specvar/frobenius/tau.hpp"

namespace specvar::frob {

namespace {

CheckResult make_result(std::string name, Complex measured, double expected, double tol,
                        std::string detail = {}) {
    CheckResult r;
    r.name = std::move(name);
    r.measured = measured.real();
    r.measured_imag = measured.imag();
    r.expected = expected;
    r.tol = tol;
    r.pass = std::abs(measured - Complex(expected)) <= tol;
    r.detail = std::move(detail);
    return r;
}

struct Sampler {
    std::mt19937 rng;
    std::uniform_real_distribution<double> real{-1.0, 1.0};

    explicit Sampler(unsigned seed) : rng(seed) {}

    Complex scalar() { return {real(rng), real(rng)}; }

    Vec vector(int m) {
        Vec v(m);
        for (int i = 0; i < m; ++i) v(i) = scalar();
        return v;
    }

    /// Point with t_2 kept in the right half plane, away from caustic and cut.
    Vec point(int m) {
        Vec t = vector(m);
        t(1) = Complex(1.0 + 0.5 * real(rng), 0.5 * real(rng));
        return t;
    }
};

Vec generic_point(const FrobeniusModel& model) {
    Vec t = Vec::Zero(model.m());
    t(0) = Complex(0.2, 0.05);
    t(1) = Complex(1.1, 0.4);
    for (int i = 2; i < model.m(); ++i) t(i) = Complex(0.5 + 0.1 * i, 0.1);
    return t;
}

double euler_mult_residual(const FrobeniusModel& model, const Vec& t, Complex t2_coeff) {
    // Lie_E(o)(X,Y) = [E, X o Y] - [E,X] o Y - X o [E,Y] for coordinate
    // fields; the Euler condition asks this to equal X o Y.
    auto euler = [&](const Vec& p) { return model.euler_with_t2_coeff(p, t2_coeff); };
    const int m = model.m();
    double worst = 0.0;
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            auto di = [&](const Vec&) { return Vec(Vec::Unit(m, i)); };
            auto dj = [&](const Vec&) { return Vec(Vec::Unit(m, j)); };
            auto prod = [&](const Vec& p) {
                return Vec(model.multiply(p, Vec::Unit(m, i), Vec::Unit(m, j)));
            };
            const Vec lie = lie_bracket(euler, prod, t) -
                            model.multiply(t, lie_bracket(euler, di, t), Vec::Unit(m, j)) -
                            model.multiply(t, Vec::Unit(m, i), lie_bracket(euler, dj, t));
            worst = std::max(worst, (lie - prod(t)).cwiseAbs().maxCoeff());
        }
    return worst;
}

double integrability_residual(const FrobeniusModel& model, const Vec& t, double h,
                              bool richardson) {
    // Lie_{X o Y}(o)(A,B) = X o Lie_Y(o)(A,B) + Y o Lie_X(o)(A,B) over
    // coordinate fields.
    const int m = model.m();
    auto coord = [&](int i) { return [m, i](const Vec&) { return Vec(Vec::Unit(m, i)); }; };
    auto bracket = [&](const VectorField& v, const VectorField& w, const Vec& p) {
        if (richardson) return lie_bracket(v, w, p, h);
        // plain central differences at step h, for order-of-convergence probes
        auto dd = [&](const VectorField& f, const Vec& dir) {
            return Vec(((f(p + h * dir) - f(p - h * dir)) / Complex(2.0 * h)).eval());
        };
        return Vec(dd(w, v(p)) - dd(v, w(p)));
    };
    auto lie_mult = [&](const VectorField& x, int a, int b, const Vec& p) {
        auto prod = [&](const Vec& q) {
            return Vec(model.multiply(q, Vec::Unit(m, a), Vec::Unit(m, b)));
        };
        return Vec(bracket(x, prod, p) - model.multiply(p, bracket(x, coord(a), p), Vec::Unit(m, b)) -
                   model.multiply(p, Vec::Unit(m, a), bracket(x, coord(b), p)));
    };

    double worst = 0.0;
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            auto xy = [&](const Vec& q) {
                return Vec(model.multiply(q, Vec::Unit(m, i), Vec::Unit(m, j)));
            };
            for (int a = 0; a < m; ++a)
                for (int b = a; b < m; ++b) {
                    const Vec lhs = lie_mult(xy, a, b, t);
                    const Vec rhs = model.multiply(t, Vec::Unit(m, i), lie_mult(coord(j), a, b, t)) +
                                    model.multiply(t, Vec::Unit(m, j), lie_mult(coord(i), a, b, t));
                    worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
                }
        }
    return worst;
}

}  // namespace

std::vector<CheckResult> axiom_checks(const FrobeniusModel& model, unsigned seed,
                                      int sample_points) {
    const int m = model.m();
    Sampler sampler(seed);
    double commut = 0.0, assoc = 0.0, unit = 0.0, invariance = 0.0;
    for (int s = 0; s < sample_points; ++s) {
        const Vec t = sampler.vector(m);
        const Vec x = sampler.vector(m), y = sampler.vector(m), z = sampler.vector(m);
        commut = std::max(
            commut, (model.multiply(t, x, y) - model.multiply(t, y, x)).cwiseAbs().maxCoeff());
        assoc = std::max(assoc, (model.multiply(t, model.multiply(t, x, y), z) -
                                 model.multiply(t, x, model.multiply(t, y, z)))
                                    .cwiseAbs()
                                    .maxCoeff());
        unit = std::max(unit, (model.multiply(t, model.unit(), x) - x).cwiseAbs().maxCoeff());
        invariance = std::max(invariance, std::abs(model.g(model.multiply(t, x, y), z) -
                                                   model.g(x, model.multiply(t, y, z))));
    }

    std::vector<CheckResult> out;
    out.push_back(make_result("mult_commutative", commut, 0.0, 1e-12));
    out.push_back(make_result("mult_associative", assoc, 0.0, 1e-12));
    out.push_back(make_result("mult_unit", unit, 0.0, 1e-12));
    out.push_back(make_result("metric_mult_invariant", invariance, 0.0, 1e-12));

    double integ = 0.0, lie_e = 0.0;
    for (int s = 0; s < 3; ++s) {
        const Vec t = sampler.point(m);
        integ = std::max(integ, integrability_residual(model, t, 1e-3, true));
        lie_e = std::max(lie_e, euler_mult_residual(model, t, Complex(2.0 / model.n())));
    }
    out.push_back(make_result("integrability", integ, 0.0, 1e-8,
                              "Lie_(X o Y)(o) = X o Lie_Y(o) + Y o Lie_X(o)"));
    out.push_back(make_result("lie_euler_mult", lie_e, 0.0, 1e-8,
                              "Euler coefficient 2/n on the t_2 direction"));
    if (model.n() != model.m()) {
        const double alt = euler_mult_residual(model, generic_point(model),
                                               Complex(2.0 / model.m()));
        CheckResult r;
        r.name = "lie_euler_mult_2m_fails";
        r.measured = alt;
        r.expected = 0.0;
        r.tol = 0.0;
        r.pass = alt > 1e-2;
        r.detail = "printed 2/m coefficient does not scale the multiplication";
        out.push_back(std::move(r));
    }
    if (model.metric_kind() == MetricKind::flat_potential) {
        const bool pot = model.potentiality_ok();
        CheckResult r;
        r.name = "potentiality_exact";
        r.measured = pot ? 0.0 : 1.0;
        r.expected = 0.0;
        r.tol = 0.0;
        r.pass = pot;
        r.detail = "XYZ(Phi) reproduces A and nabla A is fully symmetric, exact arithmetic";
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckResult> socle_checks(const FrobeniusModel& model, unsigned seed) {
    const int m = model.m();
    std::vector<CheckResult> out;

    const auto h_sym = socle_field_symbolic(model);
    bool matches = h_sym[0].is_zero() && h_sym[1] == QPoly::term(0, 2);
    for (int i = 2; i < m; ++i) matches = matches && h_sym[i] == QPoly::one();
    out.push_back(make_result("socle_closed_form", matches ? 0.0 : 1.0, 0.0, 0.0,
                              "H = 2 d2 + d3 + ... + dm, exact"));

    const QPoly expected_det = QPoly::term(model.n() - 2, -4);
    const QPoly det = det_hop_symbolic(model);
    out.push_back(make_result("det_hop_closed_form", det == expected_det ? 0.0 : 1.0, 0.0, 0.0,
                              "det(H_op) = -4 t_2^(n-2), exact"));

    const DetHopOrder order = det_hop_order(model);
    out.push_back(make_result("det_hop_vanishing_order", Complex(order.fitted_slope),
                              static_cast<double>(model.n() - 2), 0.01,
                              "log-log slope of |det H_op| as t_2 -> 0"));

    Sampler sampler(seed);
    double base_dev = 0.0, change_dev = 0.0;
    for (int s = 0; s < 5; ++s) {
        const Vec t = sampler.point(m);
        const Vec h = socle_field(model, t);

        Mat basis = Mat::Identity(m, m);
        basis += 0.3 * sampler.vector(m) * sampler.vector(m).transpose();
        base_dev = std::max(
            base_dev, (socle_field_with_basis(model, t, basis) - h).cwiseAbs().maxCoeff());

        // Metric change g~(X,Y) = g(Z o X, Y) with invertible Z o.
        Vec z = model.unit() + 0.4 * sampler.vector(m);
        const Mat z_op = model.mult_operator(t, z);
        const Mat gram_tilde = z_op.transpose() * model.gram();
        const Vec h_tilde = socle_field_with_gram(model, t, gram_tilde);
        change_dev = std::max(
            change_dev, (h - model.multiply(t, z, h_tilde)).cwiseAbs().maxCoeff());
    }
    out.push_back(make_result("socle_base_independence", base_dev, 0.0, 1e-10));
    out.push_back(make_result("socle_metric_change", change_dev, 0.0, 1e-10,
                              "H = Z o H~ for g~ = g(Z o ., .)"));
    return out;
}

std::vector<CheckResult> tau_checks(const FrobeniusModel& model) {
    const int m = model.m();
    const int n = model.n();
    const Vec t0 = generic_point(model);
    std::vector<CheckResult> out;

    const TauData td = rotation_coefficients(model, t0);
    double sym = 0.0, skew = 0.0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            sym = std::max(sym, std::abs(td.gamma(i, j) - td.gamma(j, i)));
            skew = std::max(skew, std::abs(td.V(i, j) + td.V(j, i)));
        }
    out.push_back(make_result("gamma_symmetric", sym, 0.0, 1e-12));
    out.push_back(make_result("v_skew_symmetric", skew, 0.0, 1e-12));

    const double gamma12_expected =
        (n - 2) / 8.0 * std::pow(std::abs(t0(1)), -0.5 * n);
    out.push_back(make_result("gamma_12_magnitude", std::abs(td.gamma(0, 1)), gamma12_expected,
                              1e-10, "|gamma_12| = ((n-2)/8) |t_2|^(-n/2)"));

    if (m >= 3) {
        double off = 0.0;
        for (int j = 2; j < m; ++j)
            off = std::max({off, std::abs(td.gamma(0, j)), std::abs(td.gamma(1, j))});
        out.push_back(make_result("gamma_product_directions", off, 0.0, 1e-12,
                                  "gamma_ij = 0 against the A_1 blocks"));
        out.push_back(
            make_result("darboux_egoroff", darboux_egoroff_residual(model, t0), 0.0, 1e-8));
    }

    auto gamma01 = [&](const Vec& p) { return rotation_coefficients(model, p).gamma(0, 1); };
    const Vec e = model.unit();
    out.push_back(make_result("unit_kills_gamma",
                              directional_derivative(gamma01, t0, e), 0.0, 1e-8,
                              "e(gamma_ij) = 0"));

    if (m == 2) {
        const double D = 1.0 + 2.0 / n;
        double eta_dev = 0.0;
        for (int i = 0; i < m; ++i) {
            auto eta_fn = [&](const Vec& p) {
                const PointAlgebra pa = idempotents_at(model, p);
                return metric_data_at(model, pa).eta_i(i);
            };
            const Complex lhs = directional_derivative(eta_fn, t0, model.euler(t0));
            const PointAlgebra pa0 = idempotents_at(model, t0);
            const Complex rhs = Complex(D - 2.0) * metric_data_at(model, pa0).eta_i(i);
            eta_dev = std::max(eta_dev, std::abs(lhs - rhs));
        }
        out.push_back(make_result("euler_eta", eta_dev, 0.0, 1e-8, "E(eta_i) = (D-2) eta_i"));

        const Complex lhs = directional_derivative(gamma01, t0, model.euler(t0));
        out.push_back(make_result("euler_gamma", std::abs(lhs + td.gamma(0, 1)), 0.0, 1e-8,
                                  "E(gamma_ij) = -gamma_ij"));

        const VMatrixReport vm = v_matrix_check(model, t0);
        out.push_back(make_result("v_matrix_eigenvalues", vm.max_deviation, 0.0, 1e-8,
                                  "spectrum of -(V_ij) is {+-(n-2)/(2n)}"));
    }

    {
        // Loop integral of d log tau_I around a small 2-cell off the caustic.
        auto form = [&](const Vec& p, const Vec& dir) {
            return Complex((dlog_tau_at(model, p).dt_coeffs.transpose() * dir)(0, 0));
        };
        Vec v1 = Vec::Zero(m), v2 = Vec::Zero(m);
        v1(1) = Complex(0.2, 0.0);
        v2(0) = Complex(0.15, 0.0);
        v2(1) = Complex(0.0, 0.2);
        const std::vector<Vec> loop = {t0, t0 + v1, t0 + v1 + v2, t0 + v2, t0};
        out.push_back(make_result("dlog_tau_closed", integrate_path(form, loop), 0.0, 1e-7,
                                  "loop integral over a 2-cell boundary"));
    }

    {
        // Two algebraic routes to d log tau_I, with random square-root branch
        // flips in the V-route; only even combinations may survive.
        std::mt19937 rng(99);
        double worst = 0.0;
        const DlogTau ref = dlog_tau_at(model, t0);
        for (int trial = 0; trial < 4; ++trial) {
            std::vector<int> signs(m);
            for (int i = 0; i < m; ++i) signs[i] = (rng() & 1) ? 1 : -1;
            const TauData flipped = rotation_coefficients(model, t0, signs);
            Vec du = Vec::Zero(m);
            for (int i = 0; i < m; ++i) {
                Complex acc(0.0);
                for (int j = 0; j < m; ++j) {
                    if (j == i) continue;
                    acc += flipped.V(i, j) * flipped.V(i, j) / (flipped.u[i] - flipped.u[j]);
                }
                du(i) = acc / Complex(2.0);
            }
            worst = std::max(worst, (du - ref.du_coeffs).cwiseAbs().maxCoeff());
        }
        out.push_back(make_result("branch_invariance", worst, 0.0, 1e-12,
                                  "(1/2) sum V_ij^2/(u_i-u_j) route, flipped roots"));
    }
    return out;
}

std::vector<CheckResult> residue_checks(const FrobeniusModel& model) {
    std::vector<CheckResult> out;
    if (model.n() < 3) return out;
    const CausticResidueReport r = caustic_residue(model);
    std::ostringstream spread;
    spread.precision(3);
    spread << std::scientific << r.error_bar;
    out.push_back(make_result("caustic_residue", Complex(r.fitted, r.fitted_imag),
                              r.expected.to_double(), 1e-6,
                              "residue of d log tau_I along the caustic; spread " + spread.str()));

    const int n = model.n();
    const double g_coeff = r.fitted + (n - 2) / 48.0;
    const double g_expected = -(n - 2.0) * (n - 3.0) / (24.0 * n);
    out.push_back(make_result("g_log_coefficient", g_coeff, g_expected, 1e-6,
                              "log t_2 coefficient of G; zero iff n = 3"));
    return out;
}

std::vector<CheckResult> euler_checks(const FrobeniusModel& model) {
    const int m = model.m();
    const int n = model.n();
    std::vector<CheckResult> out;

    {
        Vec start = Vec::Zero(m), end = Vec::Zero(m);
        for (int i = 2; i < m; ++i) start(i) = end(i) = Complex(0.5 + 0.1 * i, 0.0);
        start(1) = Complex(1.0, 0.0);
        end(1) = Complex(std::exp(1.0), 0.0);
        const Complex dg = g_function_delta(model, {start, end});
        const double expected = -(2.0 - n) * (3.0 - n) / (24.0 * n);
        out.push_back(make_result("delta_g_unit_ray", dg, expected, 1e-8,
                                  "Delta G for t_2: 1 -> e"));
    }

    if (m == 2) {
        const EulerGammaReport eg = euler_gamma_check(model);
        out.push_back(make_result("euler_applied_to_g", eg.EG, eg.closed_form.to_double(), 1e-8,
                                  "E G = -(n-2)(n-3)/(12 n^2) = degree formula"));

        // Lie_E(g)(X,Y) = E g(X,Y) - g([E,X],Y) - g(X,[E,Y]) = D g(X,Y).
        const Vec t0 = generic_point(model);
        auto euler = [&](const Vec& p) { return model.euler(p); };
        const double D = 1.0 + 2.0 / n;
        double dev = 0.0;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                auto gij = [&](const Vec&) { return model.gram()(i, j); };
                auto coord_i = [&](const Vec&) { return Vec(Vec::Unit(m, i)); };
                auto coord_j = [&](const Vec&) { return Vec(Vec::Unit(m, j)); };
                const Complex lie = directional_derivative(gij, t0, model.euler(t0)) -
                                    model.g(lie_bracket(euler, coord_i, t0), Vec::Unit(m, j)) -
                                    model.g(Vec::Unit(m, i), lie_bracket(euler, coord_j, t0));
                dev = std::max(dev, std::abs(lie - Complex(D) * model.gram()(i, j)));
            }
        out.push_back(make_result("lie_euler_metric", dev, 0.0, 1e-8,
                                  "Lie_E(g) = D g with D = 1 + 2/n"));
    }
    return out;
}

std::vector<CheckResult> all_checks(const FrobeniusModel& model, unsigned seed) {
    std::vector<CheckResult> out = axiom_checks(model, seed);
    auto append = [&out](std::vector<CheckResult> v) {
        out.insert(out.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
    };
    append(socle_checks(model, seed));
    append(tau_checks(model));
    append(residue_checks(model));
    append(euler_checks(model));
    return out;
}

}  // namespace specvar::frob
