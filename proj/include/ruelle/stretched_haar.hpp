#pragma once

#include <vector>

#include "ruelle/laurent.hpp"
#include "ruelle/transfer.hpp"

namespace ruelle {

/// Orbits of k -> 2k (mod p) on {0, ..., p-1}. Orbits are sorted by their
/// smallest element and ascending within each orbit; together they
/// partition {0, ..., p-1}.
struct CycleDecomposition {
    int p = 1;
    std::vector<std::vector<int>> cycles;

    int count() const { return static_cast<int>(cycles.size()); }
};

/// The two-tap mask (1 + z^p) / sqrt(2) at scale N = 2. Rejects even or
/// non-positive p.
Filter stretched_haar_filter(int p);

/// sum_{|k| < p} ((p - |k|) / p^2) z^k; as a function of the angle this is
/// (1/p^2) sin^2(p t / 2) / sin^2(t / 2), the normalized Fejer kernel.
LaurentPoly fejer_h(int p);

CycleDecomposition doubling_cycles(int p);

/// sum_{l in cycle} rotate(fejer_h(p), rho^l) with rho = e^{i 2 pi / p}.
/// The set must be closed under k -> 2k (mod p).
LaurentPoly cycle_eigenfunction(int p, const std::vector<int>& cycle);

/// One eigenfunction per orbit of the doubling map; each is fixed by the
/// transfer operator of the stretched filter.
std::vector<LaurentPoly> continuous_eigenbasis(int p);

}  // namespace ruelle
