#pragma once

#include <stdexcept>
#include <string>

namespace annulus {

/// Thrown when an operation runs out of exponent range or produces
/// non-finite intermediates at the requested working precision.
class precision_exhausted : public std::runtime_error {
public:
    explicit precision_exhausted(const std::string& what)
        : std::runtime_error(what) {}
};

/// Working precision for coefficient arithmetic. All operations taking a
/// context round their inputs to `mantissa_bits` and produce results whose
/// error accounting assumes rounding at that precision.
struct PrecisionContext {
    long mantissa_bits = 256;

    void validate() const {
        if (mantissa_bits < 64)
            throw std::invalid_argument("PrecisionContext: mantissa_bits must be >= 64");
    }
};

} // namespace annulus
