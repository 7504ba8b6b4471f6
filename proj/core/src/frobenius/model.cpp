#include "specvar/frobenius/model.hpp"

#include <algorithm>
#include <map>

namespace specvar::frob {

Complex ipow(Complex z, int k) {
    if (k < 0) return Complex(1.0) / ipow(z, -k);
    Complex acc(1.0);
    while (k > 0) {
        if (k & 1) acc *= z;
        z *= z;
        k >>= 1;
    }
    return acc;
}

FrobeniusModel::FrobeniusModel(int n, int m, MetricKind kind) : n_(n), m_(m), kind_(kind) {
    if (n < 2) throw BadParams("I_2(n) needs n >= 2, got n = " + std::to_string(n));
    if (m < 2) throw BadParams("manifold dimension m must be >= 2, got m = " + std::to_string(m));
    gram_ = Mat::Zero(m_, m_);
    gram_(0, 1) = gram_(1, 0) = Complex(1.0);
    for (int i = 2; i < m_; ++i) gram_(i, i) = Complex(1.0);
}

bool FrobeniusModel::on_caustic(const Vec& t) const {
    return n_ >= 3 && std::abs(t(1)) < caustic_threshold();
}

Vec FrobeniusModel::unit() const {
    Vec e = Vec::Ones(m_);
    e(1) = Complex(0.0);
    return e;
}

Vec FrobeniusModel::euler(const Vec& t) const {
    return euler_with_t2_coeff(t, Complex(2.0 / n_));
}

Vec FrobeniusModel::euler_with_t2_coeff(const Vec& t, Complex coeff) const {
    Vec e = t;
    e(1) = coeff * t(1);
    return e;
}

Vec FrobeniusModel::multiply(const Vec& t, const Vec& x, const Vec& y) const {
    Vec r = Vec::Zero(m_);
    const Complex t2_pow = ipow(t(1), n_ - 2);
    r(0) = x(0) * y(0) + x(1) * y(1) * t2_pow;
    r(1) = x(0) * y(1) + x(1) * y(0);
    for (int i = 2; i < m_; ++i) r(i) = x(i) * y(i);
    return r;
}

Mat FrobeniusModel::mult_operator(const Vec& t, const Vec& x) const {
    Mat op(m_, m_);
    for (int j = 0; j < m_; ++j) op.col(j) = multiply(t, x, Vec::Unit(m_, j));
    return op;
}

std::vector<std::vector<Rational>> FrobeniusModel::gram_rational() const {
    std::vector<std::vector<Rational>> g(m_, std::vector<Rational>(m_, Rational(0)));
    g[0][1] = g[1][0] = Rational(1);
    for (int i = 2; i < m_; ++i) g[i][i] = Rational(1);
    return g;
}

Complex FrobeniusModel::g(const Vec& x, const Vec& y) const {
    // Bilinear (not sesquilinear): the metric is a holomorphic tensor.
    return (x.transpose() * gram_ * y)(0, 0);
}

QPoly FrobeniusModel::structure_t2(int i, int j, int k) const {
    if (i > j) std::swap(i, j);
    if (i == 0 && j == 0) return k == 0 ? QPoly::one() : QPoly::zero();
    if (i == 0 && j == 1) return k == 1 ? QPoly::one() : QPoly::zero();
    if (i == 1 && j == 1) return k == 0 ? QPoly::term(n_ - 2, 1) : QPoly::zero();
    if (i == j && i >= 2) return k == i ? QPoly::one() : QPoly::zero();
    return QPoly::zero();
}

QPoly FrobeniusModel::a_tensor_t2(int i, int j, int k) const {
    const auto g = gram_rational();
    QPoly a;
    for (int l = 0; l < m_; ++l) {
        const Rational& w = g[l][k];
        if (w.is_zero()) continue;
        if (!w.is_integer())
            throw DomainError("NonIntegerGram", "rational gram entry in a_tensor_t2");
        a += structure_t2(i, j, l) * w.numerator();
    }
    return a;
}

namespace {

// Monomials of the flat potential as (coefficient, exponent vector) pairs.
struct Monomial {
    Rational coeff;
    std::vector<int> exps;
};

std::vector<Monomial> potential_monomials(int n, int m) {
    std::vector<Monomial> phi;
    {
        Monomial t12t2{Rational(1, 2), std::vector<int>(m, 0)};
        t12t2.exps[0] = 2;
        t12t2.exps[1] = 1;
        phi.push_back(std::move(t12t2));
    }
    {
        Monomial t2top{Rational(1, Integer(n + 1) * n * (n - 1)), std::vector<int>(m, 0)};
        t2top.exps[1] = n + 1;
        phi.push_back(std::move(t2top));
    }
    for (int i = 2; i < m; ++i) {
        Monomial cubic{Rational(1, 6), std::vector<int>(m, 0)};
        cubic.exps[i] = 3;
        phi.push_back(std::move(cubic));
    }
    return phi;
}

std::vector<Monomial> differentiate(std::vector<Monomial> terms, int var) {
    std::vector<Monomial> out;
    for (auto& t : terms) {
        if (t.exps[var] == 0) continue;
        t.coeff *= Rational(t.exps[var]);
        t.exps[var] -= 1;
        out.push_back(std::move(t));
    }
    return out;
}

// Collapses a monomial list supported on t_2 alone into a polynomial in t_2;
// returns false if some other variable survives or a coefficient is fractional.
bool to_t2_poly(const std::vector<Monomial>& terms, QPoly& out) {
    std::map<int, Rational> by_power;
    for (const auto& t : terms) {
        for (std::size_t v = 0; v < t.exps.size(); ++v)
            if (v != 1 && t.exps[v] != 0) return false;
        by_power[t.exps[1]] += t.coeff;
    }
    out = QPoly::zero();
    for (const auto& [p, c] : by_power) {
        if (c.is_zero()) continue;
        if (!c.is_integer()) return false;
        out += QPoly::term(p, c.numerator());
    }
    return true;
}

}  // namespace

QPoly FrobeniusModel::potential_third_derivative(int i, int j, int k) const {
    auto terms = potential_monomials(n_, m_);
    terms = differentiate(std::move(terms), i);
    terms = differentiate(std::move(terms), j);
    terms = differentiate(std::move(terms), k);
    QPoly out;
    if (!to_t2_poly(terms, out))
        throw DomainError("PotentialMismatch", "third partial of Phi is not a polynomial in t_2");
    return out;
}

bool FrobeniusModel::potentiality_ok() const {
    // A(X,Y,Z) = XYZ(Phi) for coordinate fields.
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j)
            for (int k = 0; k < m_; ++k)
                if (potential_third_derivative(i, j, k) != a_tensor_t2(i, j, k)) return false;

    // nabla A fully symmetric: the only variable dependence is on t_2, so
    // d_l A_{ijk} is the t_2-derivative for l = 2 (index 1) and zero otherwise.
    auto dA = [&](int l, int i, int j, int k) {
        return l == 1 ? a_tensor_t2(i, j, k).derivative() : QPoly::zero();
    };
    for (int l = 0; l < m_; ++l)
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < m_; ++j)
                for (int k = 0; k < m_; ++k) {
                    const QPoly ref = dA(l, i, j, k);
                    if (dA(i, l, j, k) != ref) return false;
                    if (dA(j, i, l, k) != ref) return false;
                    if (dA(k, i, j, l) != ref) return false;
                }
    return true;
}

Complex PointAlgebra::u_diff(int i, int j) const {
    if (i == j) return Complex(0.0);
    if (i < 2 && j < 2) return (i == 0 ? Complex(2.0) : Complex(-2.0)) * shift;
    if (i < 2) return t(0) + (i == 0 ? shift : -shift) - t(j);
    if (j < 2) return t(i) - t(0) - (j == 0 ? shift : -shift);
    return t(i) - t(j);
}

PointAlgebra idempotents_at(const FrobeniusModel& model, const Vec& t) {
    const int n = model.n();
    const int m = model.m();
    if (model.on_caustic(t))
        throw OnCaustic("t_2 = " + std::to_string(std::abs(t(1))) + " within caustic threshold");

    PointAlgebra pa;
    pa.t = t;
    const Complex r = std::sqrt(t(1));  // principal branch, cut along (-inf, 0]
    const Complex r_pow = ipow(r, 2 - n);
    const Complex half(0.5);

    Vec e1 = Vec::Zero(m), e2 = Vec::Zero(m);
    e1(0) = half;
    e1(1) = half * r_pow;
    e2(0) = half;
    e2(1) = -half * r_pow;
    pa.idempotents.push_back(e1);
    pa.idempotents.push_back(e2);
    for (int i = 2; i < m; ++i) pa.idempotents.push_back(Vec::Unit(m, i));

    // d/dt_2 of (1/2) t_2^{(2-n)/2} is ((2-n)/4) t_2^{-n/2}.
    const Complex dcoeff = Complex((2.0 - n) / 4.0) * ipow(r, -n);
    Vec de1 = Vec::Zero(m), de2 = Vec::Zero(m);
    de1(1) = dcoeff;
    de2(1) = -dcoeff;
    pa.didempotents_dt2.push_back(de1);
    pa.didempotents_dt2.push_back(de2);
    for (int i = 2; i < m; ++i) pa.didempotents_dt2.push_back(Vec::Zero(m));

    pa.shift = Complex(2.0 / n) * ipow(r, n);
    pa.u.push_back(t(0) + pa.shift);
    pa.u.push_back(t(0) - pa.shift);
    for (int i = 2; i < m; ++i) pa.u.push_back(t(i));

    pa.du_dt = Mat::Zero(m, m);
    const Complex du2 = ipow(r, n - 2);  // d/dt_2 of (2/n) t_2^{n/2}
    pa.du_dt(0, 0) = Complex(1.0);
    pa.du_dt(0, 1) = du2;
    pa.du_dt(1, 0) = Complex(1.0);
    pa.du_dt(1, 1) = -du2;
    for (int i = 2; i < m; ++i) pa.du_dt(i, i) = Complex(1.0);
    return pa;
}

MetricData metric_data_at(const FrobeniusModel& model, const PointAlgebra& pa) {
    const int m = model.m();
    MetricData md;
    md.gram = model.gram();
    md.eta = pa.t(1);
    for (int i = 2; i < m; ++i) md.eta += pa.t(i);

    md.eta_i = Vec(m);
    for (int i = 0; i < m; ++i) md.eta_i(i) = model.g(pa.idempotents[i], pa.idempotents[i]);

    // eta_j depends on t only through t_2, so e_i(eta_j) is the chain rule
    // through d eta_j / dt_2 = 2 g(de_j/dt_2, e_j).
    Vec deta_dt2(m);
    for (int j = 0; j < m; ++j)
        deta_dt2(j) = Complex(2.0) * model.g(pa.didempotents_dt2[j], pa.idempotents[j]);
    md.eta_ij = Mat(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) md.eta_ij(i, j) = pa.idempotents[i](1) * deta_dt2(j);
    return md;
}

}  // namespace specvar::frob
