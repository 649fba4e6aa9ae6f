#pragma once

#include <map>
#include <string>
#include <string_view>

#include "mop/bigfloat.hpp"
#include "mop/rational.hpp"

namespace mop {

/// A rational number times a canonical product/quotient of Gamma factors at
/// rational arguments. Canonical form: integer-argument factors are folded to
/// factorials, and no numerator argument differs from a denominator argument
/// by an integer (such pairs are reduced to Pochhammer factors folded into the
/// rational part). Arguments that differ by an integer on the same side of the
/// fraction bar stay as they are. Immutable after construction.
class GammaScaled {
public:
    GammaScaled() = default; // zero
    GammaScaled(Rational r) : rational_(std::move(r)) {} // NOLINT(google-explicit-constructor)
    GammaScaled(long n) : rational_(n) {}                // NOLINT(google-explicit-constructor)

    /// Gamma(arg); PoleError at non-positive integers.
    static GammaScaled gamma(const Rational& arg);

    /// Parses the canonical textual form, e.g. "2/Γ(3/2)" or "-5*Γ(1/3)*Γ(1/3)/Γ(2)".
    static GammaScaled parse(std::string_view text);

    const Rational& rational_part() const { return rational_; }
    const std::map<Rational, int>& gamma_part() const { return gammas_; }

    bool is_zero() const { return rational_.is_zero(); }
    bool is_rational() const { return gammas_.empty(); }

    /// Exact rational value; IncompatibleGammaError if Gamma residuals remain.
    const Rational& rational_value() const;

    GammaScaled inverse() const;
    GammaScaled operator-() const;

    friend GammaScaled operator*(const GammaScaled& u, const GammaScaled& v);
    friend GammaScaled operator/(const GammaScaled& u, const GammaScaled& v) { return u * v.inverse(); }

    /// Exact sum. Operands must be zero or carry identical Gamma residuals;
    /// a mismatch throws IncompatibleGammaError.
    friend GammaScaled operator+(const GammaScaled& u, const GammaScaled& v);
    friend GammaScaled operator-(const GammaScaled& u, const GammaScaled& v) { return u + (-v); }

    /// Structural identity of canonical forms.
    bool identical(const GammaScaled& o) const { return rational_ == o.rational_ && gammas_ == o.gammas_; }

    /// Exact value equality, decided by reducing the ratio u/v to a rational.
    friend bool value_equal(const GammaScaled& u, const GammaScaled& v);

    /// Numerical value at the given precision (>= 53 bits), evaluated through
    /// log-Gamma with sign tracking to avoid intermediate overflow.
    BigFloat to_float(mpfr_prec_t precision_bits) const;

    /// Canonical sorted textual form "r*Γ(a1)...*Γ(ak)/Γ(b1).../Γ(bm)".
    std::string str() const;

private:
    GammaScaled(Rational r, std::map<Rational, int> g);
    void canonicalize();

    Rational rational_{0};
    std::map<Rational, int> gammas_; // argument -> exponent (numerator > 0)
};

/// Gamma(a)/Gamma(b); a pure rational whenever a - b is an integer.
GammaScaled gamma_ratio(const Rational& a, const Rational& b);

} // namespace mop
