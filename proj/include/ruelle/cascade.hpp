#pragma once

#include <functional>
#include <iosfwd>
#include <vector>

#include "ruelle/laurent.hpp"
#include "ruelle/transfer.hpp"

namespace ruelle {

/// Uniform sample grid: sample i sits at start + i * step, half-open on the
/// right (sample-at-left-edge convention).
struct GridSpec {
    double start = 0.0;
    double step = 1.0;
    std::size_t count = 0;
};

struct GridFunction {
    double domain_start = 0.0;
    double step = 1.0;
    std::vector<Complex> values;

    double sample_at(std::size_t i) const {
        return domain_start + step * static_cast<double>(i);
    }
};

/// Partial scaling-equation product prod_{i=1..n} m0(omega / N^i) / sqrt(N),
/// where the mask is evaluated at the given angle. Rejects n <= 0.
Complex phihat_partial(const Filter& m0, int n, double omega);

/// Symmetric truncation of the periodization sum_{|k| <= K} f(omega + 2 pi k).
Complex periodize(const std::function<Complex(double)>& f, int K, double omega);

/// Grid samples of sum_{|k| <= K} conj(phihat_n^{m0}) phihat_n^{m0p} at
/// (omega + 2 pi k). Both filters must share the scale N.
GridFunction h_cross_approx(const Filter& m0, const Filter& m0p, int n, int K,
                            const GridSpec& grid);

/// Iterates the refinement operator psi -> sqrt(N) sum_k a_k psi(N x - k)
/// on the initial box indicator of [0, 1), sampled on a uniform grid of the
/// given resolution (samples per unit length, a power of N so that
/// x -> N x - k lands exactly on grid points). The grid covers the union of
/// the initial box and the attractor support.
GridFunction cascade_time(const Filter& m0, int iters, int resolution);

/// CSV emission: header "omega,re,im", one row per sample, round-trip
/// double formatting.
void write_csv(std::ostream& os, const GridFunction& g);

}  // namespace ruelle
