#include "annulus/bigcomplex.hpp"

namespace annulus {

BigComplex polar(const BigFloat& r, const BigFloat& t) {
    auto [s, c] = sin_cos(t);
    return {r * c, r * s};
}

} // namespace annulus
