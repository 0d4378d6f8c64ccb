#include "ruelle/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ruelle {

LaurentPoly LaurentPoly::make(int min_deg, std::vector<Complex> coeffs) {
    std::size_t lo = 0;
    std::size_t hi = coeffs.size();
    while (lo < hi && std::abs(coeffs[lo]) <= kTrimThreshold) ++lo;
    while (hi > lo && std::abs(coeffs[hi - 1]) <= kTrimThreshold) --hi;

    LaurentPoly out;
    if (lo == hi) return out;  // zero polynomial
    out.min_deg_ = min_deg + static_cast<int>(lo);
    out.coeffs_.assign(coeffs.begin() + static_cast<std::ptrdiff_t>(lo),
                       coeffs.begin() + static_cast<std::ptrdiff_t>(hi));
    return out;
}

Complex LaurentPoly::coeff(int k) const {
    if (coeffs_.empty() || k < min_deg_ || k > max_deg()) return {0.0, 0.0};
    return coeffs_[static_cast<std::size_t>(k - min_deg_)];
}

LaurentPoly add(const LaurentPoly& f, const LaurentPoly& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    const int lo = std::min(f.min_deg(), g.min_deg());
    const int hi = std::max(f.max_deg(), g.max_deg());
    std::vector<Complex> out(static_cast<std::size_t>(hi - lo + 1));
    for (int k = lo; k <= hi; ++k)
        out[static_cast<std::size_t>(k - lo)] = f.coeff(k) + g.coeff(k);
    return LaurentPoly::make(lo, std::move(out));
}

LaurentPoly negate(const LaurentPoly& f) { return scale({-1.0, 0.0}, f); }

LaurentPoly sub(const LaurentPoly& f, const LaurentPoly& g) {
    return add(f, negate(g));
}

LaurentPoly scale(const Complex& a, const LaurentPoly& f) {
    std::vector<Complex> out = f.coeffs();
    for (auto& c : out) c *= a;
    return LaurentPoly::make(f.min_deg(), std::move(out));
}

LaurentPoly mul(const LaurentPoly& f, const LaurentPoly& g) {
    if (f.is_zero() || g.is_zero()) return {};
    const auto& a = f.coeffs();
    const auto& b = g.coeffs();
    std::vector<Complex> out(a.size() + b.size() - 1, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == Complex{0.0, 0.0}) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return LaurentPoly::make(f.min_deg() + g.min_deg(), std::move(out));
}

LaurentPoly conj_involution(const LaurentPoly& f) {
    if (f.is_zero()) return {};
    const auto& c = f.coeffs();
    std::vector<Complex> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        out[i] = std::conj(c[c.size() - 1 - i]);
    return LaurentPoly::make(-f.max_deg(), std::move(out));
}

LaurentPoly upsample(const LaurentPoly& f, int N) {
    if (N <= 0) throw std::invalid_argument("upsample: N must be positive");
    if (N == 1 || f.is_zero()) return f;
    const auto& c = f.coeffs();
    std::vector<Complex> out(static_cast<std::size_t>(N) * (c.size() - 1) + 1,
                             Complex{0.0, 0.0});
    for (std::size_t i = 0; i < c.size(); ++i)
        out[static_cast<std::size_t>(N) * i] = c[i];
    return LaurentPoly::make(N * f.min_deg(), std::move(out));
}

LaurentPoly downsample(const LaurentPoly& f, int N) {
    if (N <= 0) throw std::invalid_argument("downsample: N must be positive");
    if (N == 1 || f.is_zero()) return f;
    // smallest multiple of N that is >= min_deg
    int first = f.min_deg() % N == 0
                    ? f.min_deg()
                    : (f.min_deg() >= 0 ? (f.min_deg() / N + 1) * N
                                        : -((-f.min_deg()) / N) * N);
    if (first > f.max_deg()) return {};
    std::vector<Complex> out;
    for (int k = first; k <= f.max_deg(); k += N) out.push_back(f.coeff(k));
    return LaurentPoly::make(first / N, std::move(out));
}

Complex eval(const LaurentPoly& f, double theta) {
    Complex acc{0.0, 0.0};
    int k = f.min_deg();
    for (const Complex& c : f.coeffs()) {
        if (c != Complex{0.0, 0.0})
            acc += c * std::polar(1.0, -static_cast<double>(k) * theta);
        ++k;
    }
    return acc;
}

LaurentPoly rotate(const LaurentPoly& f, const Complex& eta) {
    if (std::abs(std::abs(eta) - 1.0) > 1e-12)
        throw std::invalid_argument("rotate: eta must lie on the unit circle");
    if (f.is_zero()) return f;
    const double alpha = std::arg(eta);
    const auto& c = f.coeffs();
    std::vector<Complex> out(c.size());
    int k = f.min_deg();
    for (std::size_t i = 0; i < c.size(); ++i, ++k)
        out[i] = c[i] * std::polar(1.0, alpha * static_cast<double>(k));
    return LaurentPoly::make(f.min_deg(), std::move(out));
}

Complex integral(const LaurentPoly& f) { return f.coeff(0); }

double max_coeff_distance(const LaurentPoly& f, const LaurentPoly& g) {
    if (f.is_zero() && g.is_zero()) return 0.0;
    const int lo = std::min(f.is_zero() ? g.min_deg() : f.min_deg(),
                            g.is_zero() ? f.min_deg() : g.min_deg());
    const int hi = std::max(f.is_zero() ? g.max_deg() : f.max_deg(),
                            g.is_zero() ? f.max_deg() : g.max_deg());
    double worst = 0.0;
    for (int k = lo; k <= hi; ++k)
        worst = std::max(worst, std::abs(f.coeff(k) - g.coeff(k)));
    return worst;
}

bool approx_equal(const LaurentPoly& f, const LaurentPoly& g, double tol) {
    return max_coeff_distance(f, g) <= tol;
}

bool structural_equal(const LaurentPoly& f, const LaurentPoly& g) {
    return f.min_deg() == g.min_deg() && f.coeffs() == g.coeffs();
}

}  // namespace ruelle
