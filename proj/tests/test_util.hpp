#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "qsearch/statevector.hpp"

namespace testutil {

inline double max_abs_diff(const std::vector<std::complex<double>>& a,
                           const std::vector<std::complex<double>>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

inline double max_abs_diff(const qsearch::StateVector& a, const qsearch::StateVector& b) {
    return max_abs_diff(a.amplitudes(), b.amplitudes());
}

}  // namespace testutil
