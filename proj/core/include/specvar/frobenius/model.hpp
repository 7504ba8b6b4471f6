#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

#include "specvar/errors.hpp"
#include "specvar/qpoly.hpp"
#include "specvar/rational.hpp"

namespace specvar::frob {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

/// Integer power by repeated multiplication; well defined at z = 0 for k >= 0.
Complex ipow(Complex z, int k);

enum class MetricKind { test_metric, flat_potential };

/// The explicit massive F-manifold C^m with multiplication
///   d1 o d2 = d2,  d2 o d2 = t_2^{n-2} d1,  di o dj = delta_ij di otherwise,
/// unit e = d1 + d3 + ... + dm and caustic {t_2 = 0}; it decomposes as
/// I_2(n) x A_1^{m-2}.
///
/// Two metric constructions are supported. test_metric is induced by the
/// 1-form eps(d_i) = 1 - delta_{i1} via g(X,Y) = eps(X o Y). flat_potential
/// comes from the potential
///   Phi = t_1^2 t_2 / 2 + t_2^{n+1}/((n+1)n(n-1)) + sum_{i>=3} t_i^3 / 6
/// as A(X,Y,Z) = XYZ(Phi). On this family the two constructions produce the
/// same Gram matrix: a multiplication-invariant metric is determined by its
/// 1-form g(e,.), and the flat metric's 1-form is exactly
/// dt_2 + dt_3 + ... + dt_m. The enum records which construction (and which
/// verification route) a model is meant to exercise.
///
/// For m > 2 the product metric admits no global conformal Euler symmetry, so
/// Euler-dependent checks are restricted to m = 2. Models are immutable and
/// all per-point evaluations are pure.
class FrobeniusModel {
public:
    FrobeniusModel(int n, int m, MetricKind kind);

    int n() const { return n_; }
    int m() const { return m_; }
    MetricKind metric_kind() const { return kind_; }

    /// |t_2| below this counts as on-caustic (idempotents blow up like
    /// t_2^{-(n-2)/2}). Irrelevant for n = 2, which has no caustic.
    double caustic_threshold() const { return 1e-10; }
    bool on_caustic(const Vec& t) const;

    Vec unit() const;

    /// Euler field t_1 d1 + (2/n) t_2 d2 + sum_{i>=3} t_i di. Off the caustic
    /// it equals sum u_i e_i in canonical coordinates.
    Vec euler(const Vec& t) const;

    /// Variant with an arbitrary coefficient on the t_2 d2 term; the Lie_E
    /// tests use it to show that only 2/n scales the multiplication by 1.
    Vec euler_with_t2_coeff(const Vec& t, Complex coeff) const;

    /// Pointwise product X o Y at t.
    Vec multiply(const Vec& t, const Vec& x, const Vec& y) const;

    /// Matrix of the endomorphism (X o .) at t.
    Mat mult_operator(const Vec& t, const Vec& x) const;

    /// Constant Gram matrix g(d_i, d_j) (see class comment).
    const Mat& gram() const { return gram_; }
    std::vector<std::vector<Rational>> gram_rational() const;

    /// g evaluated on two tangent vectors.
    Complex g(const Vec& x, const Vec& y) const;

    /// Coefficient of d_k in d_i o d_j as an exact polynomial in t_2.
    QPoly structure_t2(int i, int j, int k) const;

    /// A_{ijk} = g(d_i o d_j, d_k) as an exact polynomial in t_2.
    QPoly a_tensor_t2(int i, int j, int k) const;

    /// Third partial of the flat potential Phi, reduced to a polynomial in
    /// t_2 (all other variables differentiate away).
    QPoly potential_third_derivative(int i, int j, int k) const;

    /// Exact potentiality oracle: XYZ(Phi) reproduces A and the (4,0)-tensor
    /// of fourth partials / nabla A is fully symmetric.
    bool potentiality_ok() const;

private:
    int n_;
    int m_;
    MetricKind kind_;
    Mat gram_;
};

/// Semisimple data at one off-caustic point: idempotent frame, canonical
/// coordinates, and the analytic t_2-derivatives of the frame. The branch is
/// the principal square root of t_2 on the cut plane C minus (-inf, 0]; u_1
/// carries the + branch.
struct PointAlgebra {
    Vec t;
    std::vector<Vec> idempotents;       // e_1..e_m
    std::vector<Vec> didempotents_dt2;  // d e_i / d t_2
    std::vector<Complex> u;             // canonical coordinates
    Complex shift;                      // (2/n) t_2^{n/2}, so u_{1/2} = t_1 +- shift
    /// Jacobian J(i,k) = du_i / dt_k.
    Mat du_dt;

    /// u_i - u_j evaluated analytically. Near the caustic the naive
    /// difference (t_1 + shift) - (t_1 - shift) cancels catastrophically;
    /// this keeps full precision.
    Complex u_diff(int i, int j) const;
};

/// Throws OnCaustic when n >= 3 and |t_2| is below the model threshold.
PointAlgebra idempotents_at(const FrobeniusModel& model, const Vec& t);

/// Metric bookkeeping at a point: eta with d eta = g(e,.), eta_i = e_i(eta)
/// = g(e_i, e_i) and eta_ij = e_i e_j (eta).
struct MetricData {
    Mat gram;
    Complex eta;
    Vec eta_i;
    Mat eta_ij;
};

MetricData metric_data_at(const FrobeniusModel& model, const PointAlgebra& pa);

}  // namespace specvar::frob
