#include "ruelle/stretched_haar.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace ruelle {

namespace {

void require_odd_positive(int p, const char* who) {
    if (p < 1 || p % 2 == 0)
        throw std::invalid_argument(std::string(who) + ": p must be odd and positive");
}

}  // namespace

Filter stretched_haar_filter(int p) {
    require_odd_positive(p, "stretched_haar_filter");
    const double a = 1.0 / std::sqrt(2.0);
    std::vector<Complex> coeffs(static_cast<std::size_t>(p) + 1, Complex{0.0, 0.0});
    coeffs.front() = a;
    coeffs.back() = a;
    return Filter(LaurentPoly::make(0, std::move(coeffs)), 2);
}

LaurentPoly fejer_h(int p) {
    require_odd_positive(p, "fejer_h");
    const double p2 = static_cast<double>(p) * p;
    std::vector<Complex> coeffs(static_cast<std::size_t>(2 * p - 1));
    for (int k = -(p - 1); k <= p - 1; ++k)
        coeffs[static_cast<std::size_t>(k + p - 1)] = (p - std::abs(k)) / p2;
    return LaurentPoly::make(-(p - 1), std::move(coeffs));
}

CycleDecomposition doubling_cycles(int p) {
    require_odd_positive(p, "doubling_cycles");
    CycleDecomposition out;
    out.p = p;
    std::vector<bool> seen(static_cast<std::size_t>(p), false);
    for (int k = 0; k < p; ++k) {
        if (seen[static_cast<std::size_t>(k)]) continue;
        std::vector<int> orbit;
        int x = k;
        while (!seen[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = true;
            orbit.push_back(x);
            x = (2 * x) % p;
        }
        std::sort(orbit.begin(), orbit.end());
        out.cycles.push_back(std::move(orbit));
    }
    return out;
}

LaurentPoly cycle_eigenfunction(int p, const std::vector<int>& cycle) {
    require_odd_positive(p, "cycle_eigenfunction");
    if (cycle.empty())
        throw std::invalid_argument("cycle_eigenfunction: empty cycle");
    std::set<int> members(cycle.begin(), cycle.end());
    for (int l : cycle) {
        if (l < 0 || l >= p)
            throw std::invalid_argument("cycle_eigenfunction: residue out of range");
        if (!members.count((2 * l) % p))
            throw std::invalid_argument(
                "cycle_eigenfunction: set is not closed under doubling mod p");
    }
    const LaurentPoly h = fejer_h(p);
    LaurentPoly out;
    for (int l : members) {
        const Complex rho_l =
            std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(l) / p);
        out = add(out, rotate(h, rho_l));
    }
    return out;
}

std::vector<LaurentPoly> continuous_eigenbasis(int p) {
    const CycleDecomposition cd = doubling_cycles(p);
    std::vector<LaurentPoly> out;
    out.reserve(cd.cycles.size());
    for (const auto& orbit : cd.cycles) out.push_back(cycle_eigenfunction(p, orbit));
    return out;
}

}  // namespace ruelle
