#pragma once

#include "annulus/polynomial.hpp"

#include <cmath>
#include <vector>

namespace annulus::test_support {

inline bool near(const BigComplex& a, const BigComplex& b, double tol) {
    return abs(a - b).to_double() <= tol;
}

inline bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

/// Greedy one-to-one matching: every element of `want` has a distinct
/// element of `got` within tol (absolute, or relative to |want| when
/// `relative`). Adequate for the separations used in tests.
inline bool multiset_match(const std::vector<BigComplex>& want,
                           const std::vector<BigComplex>& got, double tol,
                           bool relative = false) {
    if (want.size() != got.size()) return false;
    std::vector<bool> used(got.size(), false);
    for (const BigComplex& w : want) {
        double best = -1.0;
        size_t best_i = got.size();
        for (size_t i = 0; i < got.size(); ++i) {
            if (used[i]) continue;
            double d = abs(got[i] - w).to_double();
            if (best < 0.0 || d < best) {
                best = d;
                best_i = i;
            }
        }
        double limit = relative ? tol * std::max(1.0, abs(w).to_double()) : tol;
        if (best_i == got.size() || best > limit) return false;
        used[best_i] = true;
    }
    return true;
}

} // namespace annulus::test_support
