#include "mop/jacobi_pineiro.hpp"

#include <stdexcept>

namespace mop {

namespace {

// series part of the closed form: coefficients of
//   F(-n_i+1, a_i+b+|n|, (a_i+1)e - a^(i) - n^(i); a_i+1, (a_i+1)e - a^(i); x)
// up to degree n_i - 1, by incremental term ratios
std::vector<Rational> jp_series_coeffs(const JPWeightSystem& ws, const MultiIndex& n,
                                       std::size_t i) {
    const Rational ai = ws.alpha(i);
    const Rational abn = ai + ws.beta() + Rational(static_cast<long>(n.total()));
    const unsigned ni = n[i];
    std::vector<Rational> c;
    c.reserve(ni);
    Rational term(1);
    c.push_back(term);
    for (unsigned l = 0; l + 1 < ni; ++l) {
        const Rational ll(static_cast<long>(l));
        Rational ratio = (Rational(1) - Rational(static_cast<long>(ni)) + ll) * (abn + ll);
        ratio /= (ai + Rational(1) + ll) * (ll + Rational(1));
        for (std::size_t k = 0; k < ws.p(); ++k) {
            if (k == i) continue;
            const Rational base = ai + Rational(1) - ws.alpha(k);
            ratio *= base - Rational(static_cast<long>(n[k])) + ll;
            ratio /= base + ll;
        }
        term *= ratio;
        c.push_back(term);
    }
    return c;
}

} // namespace

PolyComponent jp_type1(const JPWeightSystem& ws, const MultiIndex& n, std::size_t i) {
    if (n.p() != ws.p()) throw std::invalid_argument("multi-index length must equal p");
    if (i >= ws.p()) throw std::out_of_range("component index");
    if (n[i] == 0) return PolyComponent::zero();

    const unsigned N = n.total();
    const Rational ai = ws.alpha(i);
    const Rational abn = ai + ws.beta() + Rational(static_cast<long>(N));

    Rational rat(N % 2 == 0 ? -1 : 1); // (-1)^{|n|-1}
    for (std::size_t k = 0; k < ws.p(); ++k) {
        if (k == i) continue;
        rat *= pochhammer(ws.alpha(k) + ws.beta() + Rational(static_cast<long>(N)), n[k]);
        rat /= pochhammer(ws.alpha(k) - ai, n[k]); // nonzero under admissibility
    }
    rat /= factorial(n[i] - 1);

    // (a_i+b+|n|)_{n_i} Gamma(a_i+b+|n|) folded to Gamma(a_i+b+|n|+n_i); the
    // unfolded product has a removable singularity at a_i+b+|n| = 0
    GammaScaled pref = GammaScaled(rat) *
                       GammaScaled::gamma(abn + Rational(static_cast<long>(n[i]))) *
                       GammaScaled::gamma(ws.beta() + Rational(static_cast<long>(N))).inverse() *
                       GammaScaled::gamma(ai + Rational(1)).inverse();

    return PolyComponent{pref, jp_series_coeffs(ws, n, i)};
}

TypeIVector jp_type1_vector(const JPWeightSystem& ws, const MultiIndex& n) {
    std::vector<PolyComponent> comps;
    comps.reserve(ws.p());
    for (std::size_t i = 0; i < ws.p(); ++i) comps.push_back(jp_type1(ws, n, i));
    return TypeIVector(WeightSystem(ws), n, std::move(comps));
}

GammaScaled jp_moment(const JPWeightSystem& ws, std::size_t i, unsigned long k) {
    return ws.moment(i, k);
}

Rational jp_pairing(const TypeIVector& v, unsigned long j) { return type1_pairing(v, j); }

} // namespace mop
