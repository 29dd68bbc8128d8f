#pragma once

#include "annulus/bigcomplex.hpp"
#include "annulus/precision.hpp"

#include <vector>

namespace annulus {

/// Univariate polynomial with complex coefficients, stored in ascending
/// degree order. Invariant: at least two coefficients (degree >= 1) and a
/// leading coefficient that is not exactly zero.
class Polynomial {
public:
    explicit Polynomial(std::vector<BigComplex> coeffs);

    /// Convenience constructor from doubles (re, im pairs), ascending degree.
    static Polynomial from_doubles(const std::vector<std::pair<double, double>>& coeffs,
                                   const PrecisionContext& ctx);
    /// Real coefficients from doubles, ascending degree.
    static Polynomial from_reals(const std::vector<double>& coeffs,
                                 const PrecisionContext& ctx);

    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const BigComplex& coeff(size_t i) const { return coeffs_[i]; }
    const std::vector<BigComplex>& coeffs() const { return coeffs_; }
    const BigComplex& leading() const { return coeffs_.back(); }

    /// Copy with every coefficient rounded to the context precision.
    Polynomial at_precision(const PrecisionContext& ctx) const;

    /// True when every coefficient has an exactly zero imaginary part.
    bool is_real() const;

private:
    std::vector<BigComplex> coeffs_;
};

/// Horner evaluation of p at z using context-precision arithmetic.
/// Throws precision_exhausted if the exponent range overflows.
BigComplex evaluate(const Polynomial& p, const BigComplex& z, const PrecisionContext& ctx);

/// Coefficients of q(x) = p(x + z), computed by the O(n^2) in-place
/// synthetic-division scheme at context precision.
Polynomial taylor_shift(const Polynomial& p, const BigComplex& z, const PrecisionContext& ctx);

/// One root-squaring step: returns the monic polynomial whose roots are
/// exactly the squares of q's roots, via the even/odd split
///   q(x) = E(x^2) + x O(x^2),   out(x) = (-1)^n (E(x)^2 - x O(x)^2)
/// after dividing q by its leading coefficient. Plain O(n^2) convolution.
Polynomial graeffe_step(const Polynomial& q, const PrecisionContext& ctx);

/// Divides all coefficients by max_i |p_i|, making the largest coefficient
/// modulus 1. The root multiset is unchanged.
Polynomial normalize(const Polynomial& p);

/// lg(H + 1/H) where H = max_i |p_i|: a coefficient-height measure used to
/// size default working precision.
double log_height(const Polynomial& p);

/// Upper bound 2 * max_{i=1..n} |p_{n-i}/p_n|^{1/i} on the largest root
/// modulus; the largest root modulus also satisfies bound/(2n) <= max|x_j|.
/// Returns exact zero iff all non-leading coefficients vanish.
BigFloat cauchy_root_bound(const Polynomial& p);

/// Coefficients of p(s * x) for a real scale factor s > 0; roots divide by s.
Polynomial scale_variable(const Polynomial& p, const BigFloat& s, const PrecisionContext& ctx);

/// Default working precision: max(256, 4n + 2 * ceil(log_height)).
PrecisionContext default_context(const Polynomial& p);

} // namespace annulus
