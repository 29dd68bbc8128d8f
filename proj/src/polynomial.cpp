#include "annulus/polynomial.hpp"

#include <cmath>
#include <stdexcept>

namespace annulus {

namespace {

BigComplex rounded(const BigComplex& z, mpfr_prec_t prec) {
    BigComplex out(prec);
    mpfr_set(out.re.raw(), z.re.raw(), MPFR_RNDN);
    mpfr_set(out.im.raw(), z.im.raw(), MPFR_RNDN);
    return out;
}

void require_finite(const BigComplex& z, const char* where) {
    if (!z.is_finite())
        throw precision_exhausted(std::string(where) + ": exponent range exhausted");
}

} // namespace

Polynomial::Polynomial(std::vector<BigComplex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 2)
        throw std::invalid_argument("Polynomial: degree must be at least 1");
    if (coeffs_.back().is_zero())
        throw std::invalid_argument("Polynomial: leading coefficient is zero");
    for (const auto& c : coeffs_)
        if (!c.is_finite())
            throw std::invalid_argument("Polynomial: non-finite coefficient");
}

Polynomial Polynomial::from_doubles(const std::vector<std::pair<double, double>>& coeffs,
                                    const PrecisionContext& ctx) {
    std::vector<BigComplex> v;
    v.reserve(coeffs.size());
    for (const auto& [r, i] : coeffs) v.emplace_back(r, i, ctx.mantissa_bits);
    return Polynomial(std::move(v));
}

Polynomial Polynomial::from_reals(const std::vector<double>& coeffs,
                                  const PrecisionContext& ctx) {
    std::vector<BigComplex> v;
    v.reserve(coeffs.size());
    for (double r : coeffs) v.emplace_back(r, 0.0, ctx.mantissa_bits);
    return Polynomial(std::move(v));
}

Polynomial Polynomial::at_precision(const PrecisionContext& ctx) const {
    std::vector<BigComplex> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(rounded(c, ctx.mantissa_bits));
    return Polynomial(std::move(v));
}

bool Polynomial::is_real() const {
    for (const auto& c : coeffs_)
        if (!c.im.is_zero()) return false;
    return true;
}

BigComplex evaluate(const Polynomial& p, const BigComplex& z, const PrecisionContext& ctx) {
    ctx.validate();
    const mpfr_prec_t prec = ctx.mantissa_bits;
    BigComplex zz = rounded(z, prec);
    BigComplex acc = rounded(p.leading(), prec);
    for (long i = p.degree() - 1; i >= 0; --i) {
        acc = acc * zz + rounded(p.coeff(static_cast<size_t>(i)), prec);
    }
    require_finite(acc, "evaluate");
    return acc;
}

Polynomial taylor_shift(const Polynomial& p, const BigComplex& z, const PrecisionContext& ctx) {
    ctx.validate();
    const mpfr_prec_t prec = ctx.mantissa_bits;
    const size_t n = static_cast<size_t>(p.degree());
    BigComplex zz = rounded(z, prec);
    std::vector<BigComplex> c;
    c.reserve(n + 1);
    for (const auto& a : p.coeffs()) c.push_back(rounded(a, prec));
    for (size_t pass = 0; pass < n; ++pass) {
        for (long j = static_cast<long>(n) - 1; j >= static_cast<long>(pass); --j) {
            c[static_cast<size_t>(j)] += zz * c[static_cast<size_t>(j) + 1];
        }
    }
    for (const auto& a : c) require_finite(a, "taylor_shift");
    return Polynomial(std::move(c));
}

Polynomial graeffe_step(const Polynomial& q, const PrecisionContext& ctx) {
    ctx.validate();
    const mpfr_prec_t prec = ctx.mantissa_bits;
    const size_t n = static_cast<size_t>(q.degree());

    // Monic form first: controls the doubly exponential growth of the
    // leading coefficient under repeated squaring.
    std::vector<BigComplex> a;
    a.reserve(n + 1);
    {
        BigComplex lead = rounded(q.leading(), prec);
        for (size_t i = 0; i <= n; ++i)
            a.push_back(rounded(q.coeff(i), prec) / lead);
    }

    std::vector<BigComplex> even, odd;
    even.reserve(n / 2 + 1);
    odd.reserve(n / 2 + 1);
    for (size_t i = 0; i <= n; ++i) {
        if (i % 2 == 0)
            even.push_back(a[i]);
        else
            odd.push_back(a[i]);
    }

    auto square = [prec](const std::vector<BigComplex>& f) {
        if (f.empty()) return std::vector<BigComplex>{};
        std::vector<BigComplex> out(2 * f.size() - 1, BigComplex(prec));
        for (size_t i = 0; i < f.size(); ++i)
            for (size_t j = 0; j < f.size(); ++j)
                out[i + j] += f[i] * f[j];
        return out;
    };

    std::vector<BigComplex> e2 = square(even);
    std::vector<BigComplex> o2 = square(odd);

    std::vector<BigComplex> out(n + 1, BigComplex(prec));
    for (size_t i = 0; i < e2.size() && i <= n; ++i) out[i] += e2[i];
    for (size_t i = 0; i < o2.size() && i + 1 <= n; ++i) out[i + 1] -= o2[i];
    if (n % 2 == 1)
        for (auto& c : out) c = -c;

    for (const auto& c : out) require_finite(c, "graeffe_step");
    return Polynomial(std::move(out));
}

Polynomial normalize(const Polynomial& p) {
    BigFloat m = abs(p.coeff(0));
    for (size_t i = 1; i <= static_cast<size_t>(p.degree()); ++i)
        m = max(m, abs(p.coeff(i)));
    std::vector<BigComplex> c;
    c.reserve(static_cast<size_t>(p.degree()) + 1);
    for (const auto& a : p.coeffs()) c.push_back(a / m);
    return Polynomial(std::move(c));
}

double log_height(const Polynomial& p) {
    BigFloat m = abs(p.coeff(0));
    for (size_t i = 1; i <= static_cast<size_t>(p.degree()); ++i)
        m = max(m, abs(p.coeff(i)));
    BigFloat one(1.0, m.prec());
    return log2(m + one / m).to_double();
}

BigFloat cauchy_root_bound(const Polynomial& p) {
    const long n = p.degree();
    const mpfr_prec_t prec = std::max<mpfr_prec_t>(p.leading().prec(), 64);
    BigFloat lg_lead = log2(abs(p.leading()));
    bool any = false;
    BigFloat best(prec);
    for (long i = 1; i <= n; ++i) {
        const BigComplex& c = p.coeff(static_cast<size_t>(n - i));
        if (c.is_zero()) continue;
        BigFloat lg = (log2(abs(c)) - lg_lead) / BigFloat(i, prec);
        if (!any || best < lg) {
            best = lg;
            any = true;
        }
    }
    if (!any) return BigFloat(prec); // p = c x^n: all roots at the origin
    return mul_2si(exp2(best), 1);
}

Polynomial scale_variable(const Polynomial& p, const BigFloat& s, const PrecisionContext& ctx) {
    ctx.validate();
    if (s.sign() <= 0) throw std::invalid_argument("scale_variable: scale must be positive");
    const mpfr_prec_t prec = ctx.mantissa_bits;
    BigFloat pw(1.0, prec);
    BigFloat ss(prec);
    mpfr_set(ss.raw(), s.raw(), MPFR_RNDN);
    std::vector<BigComplex> c;
    c.reserve(static_cast<size_t>(p.degree()) + 1);
    for (size_t i = 0; i <= static_cast<size_t>(p.degree()); ++i) {
        c.push_back(rounded(p.coeff(i), prec) * pw);
        pw *= ss;
    }
    for (const auto& a : c) require_finite(a, "scale_variable");
    return Polynomial(std::move(c));
}

PrecisionContext default_context(const Polynomial& p) {
    double tau = std::max(0.0, log_height(p));
    long bits = std::max<long>(256, 4 * p.degree() + 2 * static_cast<long>(std::ceil(tau)));
    return PrecisionContext{bits};
}

} // namespace annulus
