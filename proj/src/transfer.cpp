#include "ruelle/transfer.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ruelle {

Filter::Filter(LaurentPoly m0, int scale_N)
    : m0_(std::move(m0)), scale_N_(scale_N) {
    if (scale_N_ < 2) throw std::invalid_argument("Filter: scale N must be >= 2");
    if (m0_.is_zero())
        throw std::invalid_argument("Filter: mask must not be the zero polynomial");
}

LaurentPoly ruelle_apply(const Filter& m0, const LaurentPoly& m0p,
                         const LaurentPoly& f) {
    return downsample(mul(mul(conj_involution(m0.m0()), m0p), f), m0.scale_N());
}

int invariant_half_width(const Filter& m0, const LaurentPoly& m0p) {
    const LaurentPoly g = mul(conj_involution(m0.m0()), m0p);
    if (g.is_zero()) return 0;
    const int N = m0.scale_N();
    const int bound = std::max(std::abs(g.min_deg()), std::abs(g.max_deg()));
    int d = (bound + N - 2) / (N - 1);  // ceil(bound / (N - 1))

    auto invariant = [&](int w) {
        for (int k = -w; k <= w; ++k) {
            LaurentPoly img = ruelle_apply(m0, m0p, LaurentPoly::make(k, {1.0}));
            if (!img.is_zero() && (img.min_deg() < -w || img.max_deg() > w))
                return false;
        }
        return true;
    };
    while (!invariant(d)) ++d;
    return d;
}

LawtonMatrix::LawtonMatrix(const Filter& m0, const LaurentPoly& m0p)
    : d_(invariant_half_width(m0, m0p)),
      scale_N_(m0.scale_N()),
      m0_(m0.m0()),
      m0p_(m0p) {
    const Eigen::Index n = 2 * static_cast<Eigen::Index>(d_) + 1;
    entries_ = Eigen::MatrixXcd::Zero(n, n);
    for (int j = -d_; j <= d_; ++j) {
        LaurentPoly col = ruelle_apply(m0, m0p, LaurentPoly::make(j, {1.0}));
        if (!col.is_zero() && (col.min_deg() < -d_ || col.max_deg() > d_))
            throw std::runtime_error(
                "LawtonMatrix: image of window monomial escapes the window");
        for (int k = -d_; k <= d_; ++k) entries_(k + d_, j + d_) = col.coeff(k);
    }
}

LawtonMatrix lawton_matrix(const Filter& m0, const LaurentPoly& m0p) {
    return LawtonMatrix(m0, m0p);
}

std::vector<Complex> spectrum(const LawtonMatrix& M) {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(M.entries(), false);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("spectrum: dense eigensolver failed to converge");
    std::vector<Complex> out(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + M.size());
    std::sort(out.begin(), out.end(), [](const Complex& a, const Complex& b) {
        const double ma = std::abs(a), mb = std::abs(b);
        if (ma != mb) return ma > mb;
        return std::arg(a) < std::arg(b);
    });
    return out;
}

EigenspaceResult fixed_space(const LawtonMatrix& M, const Complex& eigenvalue,
                             double tol) {
    if (tol <= 0.0) throw std::invalid_argument("fixed_space: tol must be positive");
    const Eigen::Index n = M.size();
    const Eigen::MatrixXcd shifted =
        M.entries() - eigenvalue * Eigen::MatrixXcd::Identity(n, n);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(shifted, Eigen::ComputeFullV);
    const Eigen::VectorXd s = svd.singularValues();
    const double cut = tol * (s.size() > 0 ? s(0) : 0.0);

    EigenspaceResult out;
    out.eigenvalue = eigenvalue;
    out.tol = tol;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (s(i) > cut) continue;
        Eigen::VectorXcd v = svd.matrixV().col(i);
        out.residuals.push_back((M.entries() * v - eigenvalue * v).norm());
        std::vector<Complex> coeffs(v.data(), v.data() + n);
        out.basis.push_back(LaurentPoly::make(-M.half_width(), std::move(coeffs)));
    }
    return out;
}

LaurentPoly cascade_product(const LaurentPoly& m0, int N, int n) {
    if (n <= 0)
        throw std::invalid_argument("cascade_product: n must be positive");
    LaurentPoly out = m0;
    LaurentPoly factor = m0;
    for (int i = 1; i < n; ++i) {
        factor = upsample(factor, N);
        out = mul(out, factor);
    }
    return out;
}

LaurentPoly filter_cascade_product(const Filter& m0, int n) {
    return cascade_product(m0.m0(), m0.scale_N(), n);
}

Eigen::VectorXcd window_coeffs(const LaurentPoly& f, int d) {
    Eigen::VectorXcd v(2 * static_cast<Eigen::Index>(d) + 1);
    for (int k = -d; k <= d; ++k) v(k + d) = f.coeff(k);
    return v;
}

ElempropReport check_elemprop(const Filter& m0, const LaurentPoly& m0p,
                              const LaurentPoly& f, const LaurentPoly& g,
                              int n, double tol) {
    if (n <= 0) throw std::invalid_argument("check_elemprop: n must be positive");
    const int N = m0.scale_N();
    const LaurentPoly weight = mul(conj_involution(m0.m0()), m0p);
    const LaurentPoly rf = ruelle_apply(m0, m0p, f);

    ElempropReport report;
    report.tol = tol;

    report.integral_identity.residual =
        std::abs(integral(rf) - integral(mul(weight, f)));

    report.pairing_identity.residual =
        std::abs(integral(mul(g, rf)) -
                 integral(mul(upsample(g, N), mul(weight, f))));

    double pullout = max_coeff_distance(
        ruelle_apply(m0, m0p, mul(upsample(g, N), f)), mul(g, rf));
    {
        const int Nn = static_cast<int>(std::pow(N, n) + 0.5);
        LaurentPoly lhs = mul(upsample(g, Nn), f);
        LaurentPoly rn = f;
        for (int i = 0; i < n; ++i) {
            lhs = ruelle_apply(m0, m0p, lhs);
            rn = ruelle_apply(m0, m0p, rn);
        }
        pullout = std::max(pullout, max_coeff_distance(lhs, mul(g, rn)));

        const LaurentPoly mn = cascade_product(m0.m0(), N, n);
        const LaurentPoly mpn = cascade_product(m0p, N, n);
        report.iterated_integral.residual = std::abs(
            integral(rn) - integral(mul(mul(conj_involution(mn), mpn), f)));
    }
    report.pullout_identity.residual = pullout;

    report.integral_identity.holds = report.integral_identity.residual <= tol;
    report.pairing_identity.holds = report.pairing_identity.residual <= tol;
    report.pullout_identity.holds = report.pullout_identity.residual <= tol;
    report.iterated_integral.holds = report.iterated_integral.residual <= tol;
    return report;
}

}  // namespace ruelle
