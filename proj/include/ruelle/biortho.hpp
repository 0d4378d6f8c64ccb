#pragma once

#include <string>
#include <vector>

#include "ruelle/laurent.hpp"
#include "ruelle/transfer.hpp"

namespace ruelle {

enum class Verdict { Orthogonal, Biorthogonal, Inconclusive, Fails };

std::string to_string(Verdict v);

struct SubCheck {
    std::string name;
    double residual = 0.0;
    bool passed = false;
};

/// Outcome of the orthogonality / biorthogonality decision procedure.
/// Orthogonal/Biorthogonal require the mask conditions to hold and the
/// eigenvalue-1 space of the window matrix to be one-dimensional. Every
/// sub-check that feeds the verdict is recorded with its residual; the
/// analytic hypotheses that the finite model cannot decide are listed in
/// `assumptions`.
struct CriterionReport {
    Verdict verdict = Verdict::Fails;
    bool qmf_holds = false;
    bool zero_conditions_hold = false;
    int eigenvalue1_dimension = 0;
    std::vector<std::string> assumptions;
    std::vector<SubCheck> details;
};

struct QmfResult {
    bool holds = false;
    double residual = 0.0;
};

/// True iff applying the transfer operator of the pair to the constant 1
/// returns 1 within tol, coefficient-wise.
QmfResult qmf_check(const Filter& m0, const LaurentPoly& m0p, double tol);

struct ZeroConditionResult {
    bool holds = false;
    /// residuals[0] = |m0(0) - sqrt(N)|, residuals[k] = |m0(2 pi k / N)|
    /// for k = 1..N-1.
    std::vector<double> residuals;
};

ZeroConditionResult zero_conditions(const Filter& m0, double tol);

/// Decides whether the integer translates of the scaling function of m0 can
/// be orthogonal: the quadrature-mirror condition, the mask zero conditions,
/// and a one-dimensional eigenvalue-1 space are all required. When the rank
/// decision sits within a factor 10 of the singular-value cut the verdict is
/// Inconclusive instead of Fails.
CriterionReport orthogonality_verdict(const Filter& m0, double tol);

/// Pair version: mask conditions on both filters and a one-dimensional
/// eigenvalue-1 space of the signed operator, spanned by the constant
/// (alignment angle <= 1e-7).
CriterionReport biorthogonality_verdict(const Filter& m0, const Filter& m0p,
                                        double tol);

struct CrossBoundReport {
    double c_max = 0.0;
    int violations = 0;
};

/// Grid check of the dominance pattern |h0|^2 <= c * h * h'. At points with
/// h h' >= floor_eps the ratio is tracked; points with h h' < floor_eps but
/// |h0|^2 >= floor_eps break the pattern and are counted as violations.
/// h and h' must be real-valued on the grid (imaginary part <= 1e-10).
CrossBoundReport cross_bound_check(const LaurentPoly& h0, const LaurentPoly& h,
                                   const LaurentPoly& hp, int grid_size,
                                   double floor_eps);

}  // namespace ruelle
