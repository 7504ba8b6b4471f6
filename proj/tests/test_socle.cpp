#include <doctest.h>

#include <random>

#include "specvar/frobenius/socle.hpp"

using namespace specvar;
using namespace specvar::frob;

TEST_CASE("socle field closed form") {
    for (int n : {2, 3, 5}) {
        for (int m : {2, 3, 4}) {
            const FrobeniusModel model(n, m, MetricKind::test_metric);

            SUBCASE("symbolic") {
                const auto h = socle_field_symbolic(model);
                CHECK(h[0].is_zero());
                CHECK(h[1] == QPoly::term(0, 2));
                // Each A_1 block contributes its own unit, as in the
                // one-dimensional case H = e.
                for (int i = 2; i < m; ++i) CHECK(h[i] == QPoly::one());
            }
            SUBCASE("numeric at random points") {
                std::mt19937 rng(42);
                std::uniform_real_distribution<double> u(-1.0, 1.0);
                for (int trial = 0; trial < 10; ++trial) {
                    Vec t(m);
                    for (int i = 0; i < m; ++i) t(i) = Complex(u(rng), u(rng));
                    const Vec h = socle_field(model, t);
                    CHECK(std::abs(h(0)) < 1e-14);
                    CHECK(std::abs(h(1) - 2.0) < 1e-14);
                    for (int i = 2; i < m; ++i) CHECK(std::abs(h(i) - 1.0) < 1e-14);
                }
            }
        }
    }
}

TEST_CASE("det H_op is -4 t_2^(n-2) exactly") {
    for (int n = 2; n <= 8; ++n)
        for (int m : {2, 3, 5}) {
            const FrobeniusModel model(n, m, MetricKind::test_metric);
            CHECK(det_hop_symbolic(model) == QPoly::term(n - 2, -4));
        }
}

TEST_CASE("vanishing order of det H_op") {
    SUBCASE("n = 2 has no caustic") {
        const auto r = det_hop_order(FrobeniusModel(2, 2, MetricKind::test_metric));
        CHECK(r.order == 0);
        CHECK(std::abs(r.fitted_slope) < 0.01);
    }
    SUBCASE("slope fit recovers n - 2 for the flat metric") {
        for (int n : {3, 5, 8}) {
            const auto r = det_hop_order(FrobeniusModel(n, 3, MetricKind::flat_potential));
            CHECK(r.order == n - 2);
            CHECK(std::abs(r.fitted_slope - (n - 2)) < 0.01);
        }
    }
}

TEST_CASE("socle field is independent of the dual basis choice") {
    const FrobeniusModel model(4, 3, MetricKind::flat_potential);
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Vec t(3);
    t << Complex(0.2, 0.1), Complex(0.8, 0.3), Complex(0.5, -0.4);
    const Vec reference = socle_field(model, t);
    for (int trial = 0; trial < 20; ++trial) {
        Mat basis(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) basis(i, j) = Complex(u(rng), u(rng));
        if (std::abs(basis.determinant()) < 0.05) continue;
        const Vec h = socle_field_with_basis(model, t, basis);
        CHECK((h - reference).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("metric change rule H = Z o H~") {
    const FrobeniusModel model(5, 3, MetricKind::flat_potential);
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> u(-0.4, 0.4);
    Vec t(3);
    t << Complex(0.3, 0.0), Complex(1.1, 0.2), Complex(0.6, 0.1);
    const Vec h = socle_field(model, t);
    for (int trial = 0; trial < 10; ++trial) {
        Vec z = model.unit();
        for (int i = 0; i < 3; ++i) z(i) += Complex(u(rng), u(rng));
        const Mat gram_tilde = model.mult_operator(t, z).transpose() * model.gram();
        const Vec h_tilde = socle_field_with_gram(model, t, gram_tilde);
        CHECK((h - model.multiply(t, z, h_tilde)).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("degenerate metric is rejected") {
    const FrobeniusModel model(3, 2, MetricKind::test_metric);
    Vec t(2);
    t << Complex(0.1, 0.0), Complex(0.9, 0.0);
    CHECK_THROWS_AS(socle_field_with_gram(model, t, Mat::Zero(2, 2)), DegenerateMetric);
}
