#pragma once

#include <complex>
#include <vector>

namespace ruelle {

using Complex = std::complex<double>;

/// Finitely supported Laurent polynomial f(z) = sum_k c_k z^k, viewed as a
/// function on the unit circle with the angle convention z = e^{-i theta}.
///
/// Coefficients are stored densely over the support interval. The canonical
/// zero polynomial has an empty coefficient list and min_deg() == 0. After
/// construction the leading and trailing stored coefficients have magnitude
/// above the trim threshold, so degree bounds are canonical. Values are
/// immutable and safe to share between threads.
class LaurentPoly {
public:
    /// Coefficients at or below this magnitude are trimmed from the ends.
    static constexpr double kTrimThreshold = 1e-14;

    /// Zero polynomial.
    LaurentPoly() = default;

    /// coeffs[j] becomes the coefficient of z^(min_deg + j); near-zero ends
    /// are trimmed. An all-zero list yields the zero polynomial.
    static LaurentPoly make(int min_deg, std::vector<Complex> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    int min_deg() const { return min_deg_; }
    int max_deg() const { return min_deg_ + static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }

    /// Coefficient of z^k; zero outside the stored support.
    Complex coeff(int k) const;

private:
    int min_deg_ = 0;
    std::vector<Complex> coeffs_;
};

/// Default tolerance for coefficient-wise comparisons.
inline constexpr double kDefaultCompareTol = 1e-12;

LaurentPoly add(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly negate(const LaurentPoly& f);
LaurentPoly sub(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly scale(const Complex& a, const LaurentPoly& f);

/// Coefficient convolution; degree bounds add.
LaurentPoly mul(const LaurentPoly& f, const LaurentPoly& g);

/// Polynomial whose value on |z| = 1 is the complex conjugate of f:
/// c_k goes to conj(c_k) at exponent -k.
LaurentPoly conj_involution(const LaurentPoly& f);

/// c_k moves to exponent N*k, i.e. f(z) -> f(z^N). Rejects N <= 0.
LaurentPoly upsample(const LaurentPoly& f, int N);

/// Keeps coefficients at exponents divisible by N, re-indexed to k/N.
/// Rejects N <= 0.
LaurentPoly downsample(const LaurentPoly& f, int N);

/// sum_k c_k e^{-i k theta} (the value at z = e^{-i theta}).
Complex eval(const LaurentPoly& f, double theta);

/// f(eta z): c_k goes to c_k * eta^k. Requires |eta| = 1 within 1e-12.
/// With eta = e^{i alpha}, eval(rotate(f, eta), theta) == eval(f, theta - alpha).
LaurentPoly rotate(const LaurentPoly& f, const Complex& eta);

/// Integral against normalized Haar measure: the coefficient of z^0.
Complex integral(const LaurentPoly& f);

/// Coefficient-wise comparison over the union support.
bool approx_equal(const LaurentPoly& f, const LaurentPoly& g,
                  double tol = kDefaultCompareTol);

/// Largest coefficient magnitude of f - g over the union support.
double max_coeff_distance(const LaurentPoly& f, const LaurentPoly& g);

/// Exact structural equality (same min_deg, identical coefficients).
bool structural_equal(const LaurentPoly& f, const LaurentPoly& g);

}  // namespace ruelle
