#pragma once

#include <mpfr.h>

#include <cstdint>
#include <string>
#include <utility>

namespace annulus {

/// Arbitrary-precision real number. Thin RAII wrapper over an mpfr_t that
/// carries its precision explicitly; binary operations round to the larger
/// precision of the two operands, so precision never silently degrades.
/// All rounding is to nearest.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 64);
    BigFloat(double value, mpfr_prec_t prec);
    BigFloat(long value, mpfr_prec_t prec);
    BigFloat(const std::string& decimal, mpfr_prec_t prec);

    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    /// Raw handle for interop with mpfr_* calls.
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_negative() const { return mpfr_sgn(v_) < 0; }
    int sign() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Scientific-notation decimal string with `digits` significant digits
    /// (0 selects enough digits to round-trip the mantissa).
    std::string to_string(size_t digits = 0) const;

    BigFloat& operator+=(const BigFloat& rhs);
    BigFloat& operator-=(const BigFloat& rhs);
    BigFloat& operator*=(const BigFloat& rhs);
    BigFloat& operator/=(const BigFloat& rhs);

    BigFloat operator-() const;

    friend BigFloat operator+(BigFloat lhs, const BigFloat& rhs);
    friend BigFloat operator-(BigFloat lhs, const BigFloat& rhs);
    friend BigFloat operator*(const BigFloat& lhs, const BigFloat& rhs);
    friend BigFloat operator/(const BigFloat& lhs, const BigFloat& rhs);

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const BigFloat& a, const BigFloat& b) { return !(a == b); }

private:
    mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat hypot(const BigFloat& x, const BigFloat& y);
/// Base-2 logarithm; requires x > 0.
BigFloat log2(const BigFloat& x);
BigFloat exp2(const BigFloat& x);
BigFloat min(const BigFloat& a, const BigFloat& b);
BigFloat max(const BigFloat& a, const BigFloat& b);
/// Copy rounded to the given precision.
BigFloat round_to(const BigFloat& x, mpfr_prec_t prec);
/// Exact scaling by a power of two.
BigFloat mul_2si(const BigFloat& x, long e);
BigFloat div_2ui(const BigFloat& x, unsigned long e);
/// (sin t, cos t) at the precision of t.
std::pair<BigFloat, BigFloat> sin_cos(const BigFloat& t);

} // namespace annulus
