#include "ruelle/biortho.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ruelle {

namespace {

constexpr double kConstantAlignmentTol = 1e-7;
constexpr double kRankGapFactor = 10.0;

const std::vector<std::string>& analytic_assumptions() {
    static const std::vector<std::string> kAssumptions = {
        "integer translates of both scaling functions form Riesz bases "
        "(assumed, not verified)",
        "Fourier transforms are continuous at zero with vanishing off-center "
        "tail sums (assumed, not verified)",
    };
    return kAssumptions;
}

struct RankDecision {
    int dimension = 0;
    bool ambiguous = false;
    double smallest_kept = 0.0;  // smallest singular value above the cut
    double cut = 0.0;
};

RankDecision eigenvalue1_rank(const LawtonMatrix& L, double tol) {
    const Eigen::Index n = L.size();
    const Eigen::MatrixXcd shifted =
        L.entries() - Eigen::MatrixXcd::Identity(n, n);
    const Eigen::VectorXd s =
        Eigen::JacobiSVD<Eigen::MatrixXcd>(shifted).singularValues();
    RankDecision out;
    out.cut = tol * s(0);
    out.smallest_kept = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (s(i) <= out.cut)
            ++out.dimension;
        else
            out.smallest_kept = s(i);  // values are sorted descending
    }
    out.ambiguous =
        out.smallest_kept > 0.0 && out.smallest_kept <= kRankGapFactor * out.cut;
    return out;
}

double angle_to_constant(const LaurentPoly& v, int d) {
    const Eigen::VectorXcd vec = window_coeffs(v, d);
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(vec.size());
    e(d) = 1.0;
    const double cosine =
        std::min(1.0, std::abs(e.dot(vec)) / std::max(vec.norm(), 1e-300));
    return std::acos(cosine);
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Orthogonal: return "Orthogonal";
        case Verdict::Biorthogonal: return "Biorthogonal";
        case Verdict::Inconclusive: return "Inconclusive";
        case Verdict::Fails: return "Fails";
    }
    return "Fails";
}

QmfResult qmf_check(const Filter& m0, const LaurentPoly& m0p, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("qmf_check: tol must be positive");
    const LaurentPoly one = LaurentPoly::make(0, {1.0});
    QmfResult out;
    out.residual = max_coeff_distance(ruelle_apply(m0, m0p, one), one);
    out.holds = out.residual <= tol;
    return out;
}

ZeroConditionResult zero_conditions(const Filter& m0, double tol) {
    if (tol <= 0.0)
        throw std::invalid_argument("zero_conditions: tol must be positive");
    const int N = m0.scale_N();
    ZeroConditionResult out;
    out.residuals.push_back(
        std::abs(eval(m0.m0(), 0.0) - std::sqrt(static_cast<double>(N))));
    for (int k = 1; k < N; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / N;
        out.residuals.push_back(std::abs(eval(m0.m0(), theta)));
    }
    out.holds = true;
    for (double r : out.residuals) out.holds = out.holds && r <= tol;
    return out;
}

namespace {

CriterionReport run_verdict(const Filter& m0, const Filter& m0p, bool diagonal,
                            double tol) {
    if (tol <= 0.0) throw std::invalid_argument("verdict: tol must be positive");
    if (m0.scale_N() != m0p.scale_N())
        throw std::invalid_argument("verdict: filters must share the scale");

    CriterionReport report;
    report.assumptions = analytic_assumptions();

    const QmfResult qmf = qmf_check(m0, m0p.m0(), tol);
    report.qmf_holds = qmf.holds;
    report.details.push_back({"qmf", qmf.residual, qmf.holds});

    const ZeroConditionResult zc0 = zero_conditions(m0, tol);
    bool zeros = zc0.holds;
    for (std::size_t k = 0; k < zc0.residuals.size(); ++k) {
        const std::string name =
            k == 0 ? "zero_condition_m0_at_0"
                   : "zero_condition_m0_at_2pi_" + std::to_string(k) + "_over_N";
        report.details.push_back({name, zc0.residuals[k], zc0.residuals[k] <= tol});
    }
    if (!diagonal) {
        const ZeroConditionResult zc1 = zero_conditions(m0p, tol);
        zeros = zeros && zc1.holds;
        for (std::size_t k = 0; k < zc1.residuals.size(); ++k) {
            const std::string name =
                k == 0 ? "zero_condition_m0p_at_0"
                       : "zero_condition_m0p_at_2pi_" + std::to_string(k) + "_over_N";
            report.details.push_back(
                {name, zc1.residuals[k], zc1.residuals[k] <= tol});
        }
    }
    report.zero_conditions_hold = zeros;

    const LawtonMatrix L = lawton_matrix(m0, m0p.m0());
    const RankDecision rank = eigenvalue1_rank(L, tol);
    report.eigenvalue1_dimension = rank.dimension;
    report.details.push_back({"eigenvalue1_dimension",
                              static_cast<double>(rank.dimension),
                              rank.dimension == 1});
    report.details.push_back(
        {"rank_gap_smallest_kept_singular_value", rank.smallest_kept,
         !rank.ambiguous});

    const EigenspaceResult fs = fixed_space(L, Complex{1.0, 0.0}, tol);
    double max_residual = 0.0;
    for (double r : fs.residuals) max_residual = std::max(max_residual, r);
    report.details.push_back(
        {"fixed_space_max_residual", max_residual, max_residual <= tol});

    bool aligned = true;
    if (!diagonal && rank.dimension == 1 && !fs.basis.empty()) {
        const double angle = angle_to_constant(fs.basis.front(), L.half_width());
        aligned = angle <= kConstantAlignmentTol;
        report.details.push_back({"constant_alignment_angle", angle, aligned});
    }

    if (!report.qmf_holds || !zeros) {
        report.verdict = Verdict::Fails;
    } else if (rank.dimension == 1 && aligned) {
        report.verdict = diagonal ? Verdict::Orthogonal : Verdict::Biorthogonal;
    } else if (rank.ambiguous) {
        report.verdict = Verdict::Inconclusive;
    } else {
        report.verdict = Verdict::Fails;
    }
    return report;
}

}  // namespace

CriterionReport orthogonality_verdict(const Filter& m0, double tol) {
    return run_verdict(m0, m0, true, tol);
}

CriterionReport biorthogonality_verdict(const Filter& m0, const Filter& m0p,
                                        double tol) {
    return run_verdict(m0, m0p, false, tol);
}

CrossBoundReport cross_bound_check(const LaurentPoly& h0, const LaurentPoly& h,
                                   const LaurentPoly& hp, int grid_size,
                                   double floor_eps) {
    if (grid_size < 16)
        throw std::invalid_argument("cross_bound_check: grid_size must be >= 16");
    if (floor_eps <= 0.0)
        throw std::invalid_argument("cross_bound_check: floor_eps must be positive");

    CrossBoundReport out;
    for (int j = 0; j < grid_size; ++j) {
        const double theta = 2.0 * std::numbers::pi * j / grid_size;
        const Complex hv = eval(h, theta);
        const Complex hpv = eval(hp, theta);
        if (std::abs(hv.imag()) > 1e-10 || std::abs(hpv.imag()) > 1e-10)
            throw std::invalid_argument(
                "cross_bound_check: h and h' must be real-valued on the grid");
        const double prod = hv.real() * hpv.real();
        const double num = std::norm(eval(h0, theta));
        if (prod >= floor_eps) {
            out.c_max = std::max(out.c_max, num / prod);
        } else if (num >= floor_eps) {
            ++out.violations;
        }
    }
    return out;
}

}  // namespace ruelle
