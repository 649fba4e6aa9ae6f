#pragma once

// Test-only reference implementations, written independently of the library's
// evaluation paths: term-by-term series summation with from-scratch
// Pochhammers, and the p=2 closed forms in their hatted-parameter shape.

#include <cstddef>
#include <vector>

#include "mop/hypergeom.hpp"
#include "mop/rational.hpp"
#include "mop/type1.hpp"

namespace mop::testsupport {

// literal sum_{l=0}^{L} prod (a)_l / (prod (d)_l l!) x^l, each Pochhammer
// recomputed from its definition
inline Rational direct_pfq(const std::vector<Rational>& num, const std::vector<Rational>& den,
                           const Rational& x) {
    const HypergeomSpec spec{num, den, x};
    const unsigned long L = termination_index(spec);
    Rational sum(0);
    for (unsigned long l = 0; l <= L; ++l) {
        Rational t(1);
        for (const Rational& a : num) t *= pochhammer(a, l);
        for (const Rational& d : den) t /= pochhammer(d, l);
        t /= factorial(l);
        t *= pow_int(x, static_cast<long>(l));
        sum += t;
    }
    return sum;
}

inline Rational direct_pfq(const HypergeomSpec& spec) {
    return direct_pfq(spec.numerator, spec.denominator, spec.argument);
}

// p=2 type I Jacobi-Pineiro display: hat_a_i and hat_n_i swap in the other
// component's data; series is a 3F2
inline PolyComponent p2_display_jp(const Rational& a1, const Rational& a2, const Rational& b,
                                   unsigned n1, unsigned n2, std::size_t i) {
    const Rational ai = i == 0 ? a1 : a2;
    const Rational ahat = i == 0 ? a2 : a1;
    const unsigned ni = i == 0 ? n1 : n2;
    const unsigned nhat = i == 0 ? n2 : n1;
    const unsigned N = n1 + n2;
    const Rational NN(static_cast<long>(N));

    Rational rat(N % 2 == 0 ? -1 : 1);
    rat *= pochhammer(a1 + b + NN, n1) * pochhammer(a2 + b + NN, n2);
    rat /= factorial(ni - 1) * pochhammer(ahat - ai, nhat);
    const GammaScaled pref = GammaScaled(rat) * GammaScaled::gamma(ai + b + NN) /
                             GammaScaled::gamma(b + NN) / GammaScaled::gamma(ai + Rational(1));

    std::vector<Rational> coeffs;
    const std::vector<Rational> num{Rational(1) - Rational(ni), ai + b + NN,
                                    ai - ahat - Rational(nhat) + Rational(1)};
    const std::vector<Rational> den{ai + Rational(1), ai - ahat + Rational(1)};
    for (unsigned l = 0; l < ni; ++l) {
        Rational t(1);
        for (const Rational& a : num) t *= pochhammer(a, l);
        for (const Rational& d : den) t /= pochhammer(d, l);
        t /= factorial(l);
        coeffs.push_back(t);
    }
    return PolyComponent{pref, coeffs};
}

// p=2 type I Laguerre (first kind) display; series is a 2F2
inline PolyComponent p2_display_lag(const Rational& a1, const Rational& a2, unsigned n1,
                                    unsigned n2, std::size_t i) {
    const Rational ai = i == 0 ? a1 : a2;
    const Rational ahat = i == 0 ? a2 : a1;
    const unsigned ni = i == 0 ? n1 : n2;
    const unsigned nhat = i == 0 ? n2 : n1;
    const unsigned N = n1 + n2;

    Rational rat(N % 2 == 0 ? -1 : 1);
    rat /= factorial(ni - 1) * pochhammer(ahat - ai, nhat);
    const GammaScaled pref = GammaScaled(rat) / GammaScaled::gamma(ai + Rational(1));

    std::vector<Rational> coeffs;
    const std::vector<Rational> num{Rational(1) - Rational(ni),
                                    ai - ahat - Rational(nhat) + Rational(1)};
    const std::vector<Rational> den{ai + Rational(1), ai - ahat + Rational(1)};
    for (unsigned l = 0; l < ni; ++l) {
        Rational t(1);
        for (const Rational& a : num) t *= pochhammer(a, l);
        for (const Rational& d : den) t /= pochhammer(d, l);
        t /= factorial(l);
        coeffs.push_back(t);
    }
    return PolyComponent{pref, coeffs};
}

inline bool components_equal(const PolyComponent& a, const PolyComponent& b) {
    const long deg = std::max(a.degree(), b.degree());
    for (long l = 0; l <= deg; ++l) {
        const std::size_t lu = static_cast<std::size_t>(l);
        if (!value_equal(a.monomial_coeff(lu), b.monomial_coeff(lu))) return false;
    }
    return true;
}

} // namespace mop::testsupport
