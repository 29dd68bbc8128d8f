#include "annulus/bigfloat.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace annulus {

namespace {

mpfr_prec_t join_prec(const BigFloat& a, const BigFloat& b) {
    return std::max(a.prec(), b.prec());
}

// Repeated root-squaring drives coefficient exponents far past the default
// range; open it up to the library maximum once, before any value exists.
struct ExponentRangeInit {
    ExponentRangeInit() {
        mpfr_set_emin(mpfr_get_emin_min());
        mpfr_set_emax(mpfr_get_emax_max());
    }
};
const ExponentRangeInit exponent_range_init{};

} // namespace

BigFloat::BigFloat(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(double value, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(long value, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const std::string& decimal, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
        mpfr_clear(v_);
        throw std::invalid_argument("BigFloat: unparsable decimal literal '" + decimal + "'");
    }
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(v_, other.prec());
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(v_, 2);
    mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(v_, other.prec());
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    if (this != &other) mpfr_swap(v_, other.v_);
    return *this;
}

BigFloat::~BigFloat() {
    mpfr_clear(v_);
}

std::string BigFloat::to_string(size_t digits) const {
    if (digits == 0) {
        // Enough decimal digits to round-trip the binary mantissa.
        digits = static_cast<size_t>(static_cast<double>(prec()) * 0.30103) + 3;
    }
    std::vector<char> buf(digits + 32);
    int written = mpfr_snprintf(buf.data(), buf.size(), "%.*Re",
                                static_cast<int>(digits - 1), v_);
    if (written < 0) throw std::runtime_error("BigFloat: formatting failed");
    if (static_cast<size_t>(written) >= buf.size()) {
        buf.resize(static_cast<size_t>(written) + 1);
        mpfr_snprintf(buf.data(), buf.size(), "%.*Re", static_cast<int>(digits - 1), v_);
    }
    return std::string(buf.data());
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
    if (prec() < rhs.prec()) {
        BigFloat out(rhs.prec());
        mpfr_add(out.v_, v_, rhs.v_, MPFR_RNDN);
        *this = std::move(out);
    } else {
        mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
    if (prec() < rhs.prec()) {
        BigFloat out(rhs.prec());
        mpfr_sub(out.v_, v_, rhs.v_, MPFR_RNDN);
        *this = std::move(out);
    } else {
        mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
    if (prec() < rhs.prec()) {
        BigFloat out(rhs.prec());
        mpfr_mul(out.v_, v_, rhs.v_, MPFR_RNDN);
        *this = std::move(out);
    } else {
        mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
    if (prec() < rhs.prec()) {
        BigFloat out(rhs.prec());
        mpfr_div(out.v_, v_, rhs.v_, MPFR_RNDN);
        *this = std::move(out);
    } else {
        mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat BigFloat::operator-() const {
    BigFloat out(prec());
    mpfr_neg(out.v_, v_, MPFR_RNDN);
    return out;
}

BigFloat operator+(BigFloat lhs, const BigFloat& rhs) {
    lhs += rhs;
    return lhs;
}

BigFloat operator-(BigFloat lhs, const BigFloat& rhs) {
    lhs -= rhs;
    return lhs;
}

BigFloat operator*(const BigFloat& lhs, const BigFloat& rhs) {
    BigFloat out(join_prec(lhs, rhs));
    mpfr_mul(out.v_, lhs.v_, rhs.v_, MPFR_RNDN);
    return out;
}

BigFloat operator/(const BigFloat& lhs, const BigFloat& rhs) {
    BigFloat out(join_prec(lhs, rhs));
    mpfr_div(out.v_, lhs.v_, rhs.v_, MPFR_RNDN);
    return out;
}

BigFloat abs(const BigFloat& x) {
    BigFloat out(x.prec());
    mpfr_abs(out.raw(), x.raw(), MPFR_RNDN);
    return out;
}

BigFloat sqrt(const BigFloat& x) {
    BigFloat out(x.prec());
    mpfr_sqrt(out.raw(), x.raw(), MPFR_RNDN);
    return out;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y) {
    BigFloat out(std::max(x.prec(), y.prec()));
    mpfr_hypot(out.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return out;
}

BigFloat log2(const BigFloat& x) {
    if (x.sign() <= 0) throw std::invalid_argument("log2: argument must be positive");
    BigFloat out(x.prec());
    mpfr_log2(out.raw(), x.raw(), MPFR_RNDN);
    return out;
}

BigFloat exp2(const BigFloat& x) {
    BigFloat out(x.prec());
    mpfr_exp2(out.raw(), x.raw(), MPFR_RNDN);
    return out;
}

BigFloat min(const BigFloat& a, const BigFloat& b) {
    return (b < a) ? b : a;
}

BigFloat max(const BigFloat& a, const BigFloat& b) {
    return (a < b) ? b : a;
}

BigFloat round_to(const BigFloat& x, mpfr_prec_t prec) {
    BigFloat out(prec);
    mpfr_set(out.raw(), x.raw(), MPFR_RNDN);
    return out;
}

BigFloat mul_2si(const BigFloat& x, long e) {
    BigFloat out(x.prec());
    mpfr_mul_2si(out.raw(), x.raw(), e, MPFR_RNDN);
    return out;
}

BigFloat div_2ui(const BigFloat& x, unsigned long e) {
    BigFloat out(x.prec());
    mpfr_div_2ui(out.raw(), x.raw(), e, MPFR_RNDN);
    return out;
}

std::pair<BigFloat, BigFloat> sin_cos(const BigFloat& t) {
    BigFloat s(t.prec()), c(t.prec());
    mpfr_sin_cos(s.raw(), c.raw(), t.raw(), MPFR_RNDN);
    return {std::move(s), std::move(c)};
}

} // namespace annulus
