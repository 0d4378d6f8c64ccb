#include "ruelle/cascade.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace ruelle {

Complex phihat_partial(const Filter& m0, int n, double omega) {
    if (n <= 0) throw std::invalid_argument("phihat_partial: n must be positive");
    const double N = static_cast<double>(m0.scale_N());
    const double root = std::sqrt(N);
    Complex acc{1.0, 0.0};
    double x = omega;
    for (int i = 0; i < n; ++i) {
        x /= N;
        acc *= eval(m0.m0(), x) / root;
    }
    return acc;
}

Complex periodize(const std::function<Complex(double)>& f, int K, double omega) {
    if (K < 0) throw std::invalid_argument("periodize: K must be non-negative");
    Complex acc{0.0, 0.0};
    for (int k = -K; k <= K; ++k)
        acc += f(omega + 2.0 * std::numbers::pi * static_cast<double>(k));
    return acc;
}

GridFunction h_cross_approx(const Filter& m0, const Filter& m0p, int n, int K,
                            const GridSpec& grid) {
    if (m0.scale_N() != m0p.scale_N())
        throw std::invalid_argument("h_cross_approx: filters must share the scale");
    if (n <= 0) throw std::invalid_argument("h_cross_approx: n must be positive");
    if (K < 0) throw std::invalid_argument("h_cross_approx: K must be non-negative");
    if (grid.step <= 0.0 || grid.count == 0)
        throw std::invalid_argument("h_cross_approx: invalid grid");

    GridFunction out;
    out.domain_start = grid.start;
    out.step = grid.step;
    out.values.resize(grid.count);
    for (std::size_t i = 0; i < grid.count; ++i) {
        const double omega = grid.start + grid.step * static_cast<double>(i);
        Complex acc{0.0, 0.0};
        for (int k = -K; k <= K; ++k) {
            const double x = omega + 2.0 * std::numbers::pi * static_cast<double>(k);
            acc += std::conj(phihat_partial(m0, n, x)) * phihat_partial(m0p, n, x);
        }
        out.values[i] = acc;
    }
    return out;
}

GridFunction cascade_time(const Filter& m0, int iters, int resolution) {
    if (iters < 0) throw std::invalid_argument("cascade_time: iters must be >= 0");
    const int N = m0.scale_N();
    // resolution must be an exact power of N for x -> N x - k regridding
    {
        if (resolution < 1)
            throw std::invalid_argument("cascade_time: resolution must be positive");
        int r = resolution;
        while (r % N == 0) r /= N;
        if (r != 1)
            throw std::invalid_argument(
                "cascade_time: resolution must be a power of the scale N");
    }

    const int kmin = m0.m0().min_deg();
    const int kmax = m0.m0().max_deg();
    const int lo = static_cast<int>(
        std::floor(std::min(0.0, static_cast<double>(kmin) / (N - 1))));
    const int hi = static_cast<int>(
        std::ceil(std::max(1.0, static_cast<double>(kmax) / (N - 1))));
    const long count = static_cast<long>(hi - lo) * resolution;

    GridFunction out;
    out.domain_start = lo;
    out.step = 1.0 / resolution;
    out.values.assign(static_cast<std::size_t>(count), Complex{0.0, 0.0});
    for (long i = static_cast<long>(-lo) * resolution;
         i < static_cast<long>(1 - lo) * resolution; ++i)
        out.values[static_cast<std::size_t>(i)] = 1.0;

    const double root = std::sqrt(static_cast<double>(N));
    const auto& taps = m0.m0().coeffs();
    std::vector<Complex> next(out.values.size());
    for (int it = 0; it < iters; ++it) {
        for (long i = 0; i < count; ++i) {
            Complex acc{0.0, 0.0};
            for (std::size_t t = 0; t < taps.size(); ++t) {
                if (taps[t] == Complex{0.0, 0.0}) continue;
                const int k = kmin + static_cast<int>(t);
                // index of N x_i - k on the same grid
                const long j = static_cast<long>(N - 1) * lo * resolution +
                               static_cast<long>(N) * i -
                               static_cast<long>(k) * resolution;
                if (j >= 0 && j < count)
                    acc += taps[t] * out.values[static_cast<std::size_t>(j)];
            }
            next[static_cast<std::size_t>(i)] = root * acc;
        }
        out.values.swap(next);
    }
    return out;
}

void write_csv(std::ostream& os, const GridFunction& g) {
    os << "omega,re,im\n";
    char buf[128];
    for (std::size_t i = 0; i < g.values.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", g.sample_at(i),
                      g.values[i].real(), g.values[i].imag());
        os << buf;
    }
}

}  // namespace ruelle
