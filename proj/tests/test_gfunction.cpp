#include <doctest.h>

#include <cmath>

#include "specvar/frobenius/checks.hpp"
#include "specvar/frobenius/gfunction.hpp"

using namespace specvar;
using namespace specvar::frob;

namespace {

std::vector<Vec> unit_ray(int m, double from, double to) {
    Vec a = Vec::Zero(m), b = Vec::Zero(m);
    for (int i = 2; i < m; ++i) a(i) = b(i) = Complex(0.6 + 0.1 * i, 0.0);
    a(1) = Complex(from, 0.0);
    b(1) = Complex(to, 0.0);
    return {a, b};
}

}  // namespace

TEST_CASE("caustic residue of d log tau_I") {
    SUBCASE("n = 3 gives -1/48") {
        const auto r = caustic_residue(FrobeniusModel(3, 2, MetricKind::flat_potential));
        CHECK(r.expected == Rational(-1, 48));
        CHECK(std::abs(r.fitted - r.expected.to_double()) < 1e-6);
        CHECK(std::abs(r.fitted_imag) < 1e-6);
        CHECK(r.error_bar < 1e-6);
    }
    SUBCASE("n = 6 gives -1/6") {
        const auto r = caustic_residue(FrobeniusModel(6, 2, MetricKind::flat_potential));
        CHECK(r.expected == Rational(-1, 6));
        CHECK(std::abs(r.fitted - r.expected.to_double()) < 1e-6);
    }
    SUBCASE("m = 3 sees the same residue") {
        for (int n : {3, 5}) {
            const auto r = caustic_residue(FrobeniusModel(n, 3, MetricKind::flat_potential));
            CHECK(std::abs(r.fitted - r.expected.to_double()) < 1e-6);
        }
    }
    SUBCASE("n = 2 has no caustic to approach") {
        CHECK_THROWS_AS(caustic_residue(FrobeniusModel(2, 2, MetricKind::flat_potential)),
                        BadParams);
    }
}

TEST_CASE("Delta G along the unit ray") {
    SUBCASE("n = 3: G is constant") {
        const FrobeniusModel model(3, 2, MetricKind::flat_potential);
        const Complex dg = g_function_delta(model, unit_ray(2, 1.0, std::exp(1.0)));
        CHECK(std::abs(dg) < 1e-8);
    }
    SUBCASE("n = 4: Delta G = -1/48 over one log unit") {
        const FrobeniusModel model(4, 2, MetricKind::flat_potential);
        const Complex dg = g_function_delta(model, unit_ray(2, 1.0, std::exp(1.0)));
        CHECK(std::abs(dg - Complex(-1.0 / 48.0)) < 1e-8);
    }
    SUBCASE("reversal flips the sign") {
        const FrobeniusModel model(5, 2, MetricKind::flat_potential);
        const auto path = unit_ray(2, 1.0, 2.5);
        const Complex forward = g_function_delta(model, path);
        const Complex backward = g_function_delta(model, {path[1], path[0]});
        CHECK(std::abs(forward + backward) < 1e-10);
    }
    SUBCASE("path additivity") {
        const FrobeniusModel model(6, 2, MetricKind::flat_potential);
        Vec mid = Vec::Zero(2);
        mid(1) = Complex(1.7, 0.5);
        const auto ends = unit_ray(2, 1.0, std::exp(1.0));
        const Complex direct = g_function_delta(model, ends);
        const Complex dogleg = g_function_delta(model, {ends[0], mid, ends[1]});
        CHECK(std::abs(direct - dogleg) < 1e-9);
    }
    SUBCASE("paths touching the caustic are rejected") {
        const FrobeniusModel model(4, 2, MetricKind::flat_potential);
        CHECK_THROWS_AS(g_function_delta(model, unit_ray(2, 0.0, 1.0)), PathOnCaustic);
    }
    SUBCASE("an unreachable tolerance reports no convergence") {
        const FrobeniusModel model(4, 2, MetricKind::flat_potential);
        QuadratureOptions opts;
        opts.tol = 0.0;
        opts.max_halvings = 3;
        CHECK_THROWS_AS(g_function_delta(model, unit_ray(2, 1.0, 2.0), opts), NoConvergence);
    }
}

TEST_CASE("Euler derivative of G") {
    SUBCASE("closed form over n") {
        for (int n : {2, 3, 4, 5, 6}) {
            const FrobeniusModel model(n, 2, MetricKind::flat_potential);
            const auto r = euler_gamma_check(model);
            CHECK(r.gamma_formula == r.closed_form);
            CHECK(r.closed_form == Rational(-(n - 2) * (n - 3), 12 * n * n));
            CHECK(r.deviation < 1e-8);
        }
    }
    SUBCASE("n = 6 hits -1/36") {
        const auto r = euler_gamma_check(FrobeniusModel(6, 2, MetricKind::flat_potential));
        CHECK(r.closed_form == Rational(-1, 36));
    }
    SUBCASE("m = 2 required") {
        CHECK_THROWS_AS(euler_gamma_check(FrobeniusModel(3, 3, MetricKind::flat_potential)),
                        BadParams);
    }
}

TEST_CASE("euler check suite, including Lie_E(g) = D g") {
    const FrobeniusModel model(4, 2, MetricKind::flat_potential);
    bool saw_metric_scaling = false;
    for (const auto& c : euler_checks(model)) {
        INFO(c.name, " measured=", c.measured);
        CHECK(c.pass);
        saw_metric_scaling = saw_metric_scaling || c.name == "lie_euler_metric";
    }
    CHECK(saw_metric_scaling);
}

TEST_CASE("the combined check suite passes for both metric kinds") {
    for (const auto& [n, m, kind] :
         {std::tuple{3, 2, MetricKind::flat_potential}, {6, 3, MetricKind::test_metric}}) {
        const FrobeniusModel model(n, m, kind);
        for (const auto& c : all_checks(model)) {
            INFO(c.name, " n=", n, " m=", m, " measured=", c.measured);
            CHECK(c.pass);
        }
    }
}
