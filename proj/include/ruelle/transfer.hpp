#pragma once

#include <Eigen/Core>
#include <vector>

#include "ruelle/laurent.hpp"

namespace ruelle {

/// Low-pass mask m0 together with its integer scale N >= 2. The mask must
/// not be the zero polynomial.
class Filter {
public:
    Filter(LaurentPoly m0, int scale_N);

    const LaurentPoly& m0() const { return m0_; }
    int scale_N() const { return scale_N_; }

private:
    LaurentPoly m0_;
    int scale_N_;
};

/// Signed transfer operator applied to a Laurent polynomial:
///   (R f)(z) = (1/N) sum_{w^N = z} conj(m0(w)) m0p(w) f(w),
/// computed exactly as downsample(conj_involution(m0) * m0p * f, N).
LaurentPoly ruelle_apply(const Filter& m0, const LaurentPoly& m0p,
                         const LaurentPoly& f);

/// Smallest half-width d >= ceil(max(|lo|, hi) / (N - 1)) such that the
/// exponent window [-d, d] is invariant under the operator; the invariance
/// is then verified by applying the operator to every window monomial.
int invariant_half_width(const Filter& m0, const LaurentPoly& m0p);

/// Dense matrix of the transfer operator restricted to the invariant window
/// [-d, d]: column j holds the coefficients of R(z^(j-d)) on exponents
/// -d..d. Construction fails loudly if any coefficient above the trim
/// threshold escapes the window.
class LawtonMatrix {
public:
    LawtonMatrix(const Filter& m0, const LaurentPoly& m0p);

    int half_width() const { return d_; }
    int scale_N() const { return scale_N_; }
    const LaurentPoly& m0() const { return m0_; }
    const LaurentPoly& m0p() const { return m0p_; }
    const Eigen::MatrixXcd& entries() const { return entries_; }
    Eigen::Index size() const { return entries_.rows(); }

private:
    int d_;
    int scale_N_;
    LaurentPoly m0_;
    LaurentPoly m0p_;
    Eigen::MatrixXcd entries_;
};

LawtonMatrix lawton_matrix(const Filter& m0, const LaurentPoly& m0p);

/// All eigenvalues of the window matrix, multiplicities included, sorted by
/// descending magnitude and ascending argument on ties. Throws
/// std::runtime_error if the dense eigensolver does not converge.
std::vector<Complex> spectrum(const LawtonMatrix& M);

/// Orthonormal basis of a numerical eigenspace, with per-vector residuals
/// ||M v - lambda v||_2. Basis vectors are pairwise orthonormal in
/// coefficient l2.
struct EigenspaceResult {
    Complex eigenvalue;
    double tol = 0.0;
    std::vector<LaurentPoly> basis;
    std::vector<double> residuals;

    int dimension() const { return static_cast<int>(basis.size()); }
};

/// Numerical null space of (M - eigenvalue I). The rank cut keeps singular
/// values above tol * sigma_max; everything at or below it spans the
/// eigenspace. An absent eigenvalue yields an empty basis.
EigenspaceResult fixed_space(const LawtonMatrix& M, const Complex& eigenvalue,
                             double tol);

/// m0(z) m0(z^N) ... m0(z^(N^(n-1))). Rejects n <= 0.
LaurentPoly filter_cascade_product(const Filter& m0, int n);
LaurentPoly cascade_product(const LaurentPoly& m0, int N, int n);

/// Coefficients of f on the exponent window [-d, d] as a dense vector of
/// length 2d+1. Coefficients outside the window are ignored.
Eigen::VectorXcd window_coeffs(const LaurentPoly& f, int d);

/// Result of checking the four elementary transfer-operator identities:
///   (i)   integral(R f) == integral(conj(m0) m0p f)
///   (ii)  integral(g . R f) == integral(g(z^N) conj(m0) m0p f)
///   (iii) R(g(z^N) f) == g . R f, and the n-fold version with g(z^(N^n))
///   (iv)  integral(R^n f) == integral(conj(m0^(n)) m0p^(n) f)
struct ElempropReport {
    struct Item {
        bool holds = false;
        double residual = 0.0;
    };
    Item integral_identity;   // (i)
    Item pairing_identity;    // (ii)
    Item pullout_identity;    // (iii), one-fold and n-fold
    Item iterated_integral;   // (iv)
    double tol = 0.0;

    bool all_hold() const {
        return integral_identity.holds && pairing_identity.holds &&
               pullout_identity.holds && iterated_integral.holds;
    }
};

ElempropReport check_elemprop(const Filter& m0, const LaurentPoly& m0p,
                              const LaurentPoly& f, const LaurentPoly& g,
                              int n, double tol = 1e-11);

}  // namespace ruelle
