#include "mop/laguerre.hpp"

#include <stdexcept>

#include "mop/jacobi_pineiro.hpp"

namespace mop {

namespace {

// coefficients of F(-n_i+1, (a_i+1)e - a^(i) - n^(i); a_i+1, (a_i+1)e - a^(i); x)
std::vector<Rational> lag_series_coeffs(const LaguerreWeightSystem& ws, const MultiIndex& n,
                                        std::size_t i) {
    const Rational ai = ws.alpha(i);
    const unsigned ni = n[i];
    std::vector<Rational> c;
    c.reserve(ni);
    Rational term(1);
    c.push_back(term);
    for (unsigned l = 0; l + 1 < ni; ++l) {
        const Rational ll(static_cast<long>(l));
        Rational ratio = Rational(1) - Rational(static_cast<long>(ni)) + ll;
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

PolyComponent lag_type1(const LaguerreWeightSystem& ws, const MultiIndex& n, std::size_t i) {
    if (n.p() != ws.p()) throw std::invalid_argument("multi-index length must equal p");
    if (i >= ws.p()) throw std::out_of_range("component index");
    if (n[i] == 0) return PolyComponent::zero();

    Rational rat(n.total() % 2 == 0 ? -1 : 1); // (-1)^{|n|-1}
    rat /= factorial(n[i] - 1);
    for (std::size_t k = 0; k < ws.p(); ++k) {
        if (k == i) continue;
        rat /= pochhammer(ws.alpha(k) - ws.alpha(i), n[k]);
    }
    const GammaScaled pref =
        GammaScaled(rat) * GammaScaled::gamma(ws.alpha(i) + Rational(1)).inverse();
    return PolyComponent{pref, lag_series_coeffs(ws, n, i)};
}

TypeIVector lag_type1_vector(const LaguerreWeightSystem& ws, const MultiIndex& n) {
    std::vector<PolyComponent> comps;
    comps.reserve(ws.p());
    for (std::size_t i = 0; i < ws.p(); ++i) comps.push_back(lag_type1(ws, n, i));
    return TypeIVector(WeightSystem(ws), n, std::move(comps));
}

GammaScaled lag_moment(const LaguerreWeightSystem& ws, std::size_t i, unsigned long k) {
    return ws.moment(i, k);
}

Rational lag_pairing(const TypeIVector& v, unsigned long j) { return type1_pairing(v, j); }

GammaScaled jp_to_laguerre_scaling(const JPWeightSystem& ws, const MultiIndex& n, std::size_t i) {
    const unsigned N = n.total();
    const Rational NN(static_cast<long>(N));
    Rational rat(1);
    for (std::size_t k = 0; k < ws.p(); ++k) {
        if (k == i) continue;
        rat /= pochhammer(ws.alpha(k) + ws.beta() + NN, n[k]);
    }
    // (a_i+b+|n|)_{n_i} Gamma(a_i+b+|n|) folded to Gamma(a_i+b+|n|+n_i), as in jp_type1
    return GammaScaled(rat) * GammaScaled::gamma(ws.beta() + NN) *
           GammaScaled::gamma(ws.alpha(i) + ws.beta() + NN + Rational(static_cast<long>(n[i])))
               .inverse();
}

CoefficientLimitReport lag_limit_coefficientwise(const LaguerreWeightSystem& ws,
                                                 const MultiIndex& n, std::size_t i) {
    CoefficientLimitReport rep;
    const PolyComponent lag = lag_type1(ws, n, i);
    if (lag.is_zero()) return rep;

    for (std::size_t l = 0; l < lag.coeffs.size(); ++l) {
        const GammaScaled target = lag.monomial_coeff(l);
        // The x^l coefficient of scaling(beta) * P(x/beta) is
        // scaling * jpcoeff_l / beta^l, so the ratio (scaling * jpcoeff_l) /
        // target must interpolate a monic degree-l polynomial in beta: then
        // the coefficient tends to the Laguerre one at the 1/beta rate. One
        // extra sample confirms the degree bound.
        std::vector<std::pair<Rational, Rational>> pts;
        for (std::size_t s = 0; s <= l + 1; ++s) {
            const Rational beta(static_cast<long>(s + 1));
            const JPWeightSystem jws(ws.alphas(), beta);
            const PolyComponent jp = jp_type1(jws, n, i);
            const GammaScaled scaled = jp_to_laguerre_scaling(jws, n, i) * jp.monomial_coeff(l);
            pts.emplace_back(beta, (scaled / target).rational_value());
        }
        const std::vector<std::pair<Rational, Rational>> head(pts.begin(), pts.end() - 1);
        const Polynomial poly = interpolate(head);
        const bool ok = poly.degree() == static_cast<long>(l) &&
                        poly.leading() == Rational(1) && poly(pts.back().first) == pts.back().second;
        if (!ok) {
            rep.pass = false;
            rep.detail = "component " + std::to_string(i + 1) + " coefficient " + std::to_string(l) +
                         ": beta-polynomial " + poly.str();
            return rep;
        }
    }
    return rep;
}

std::vector<double> lag_limit_check(const LaguerreWeightSystem& ws, const MultiIndex& n,
                                    std::size_t i, const Rational& x,
                                    const std::vector<Rational>& betas,
                                    mpfr_prec_t precision_bits) {
    if (x.sign() < 0) throw std::invalid_argument("sample point must be nonnegative");
    const PolyComponent lag = lag_type1(ws, n, i);
    const BigFloat lag_value = lag.eval(x, precision_bits);

    std::vector<double> deviations;
    deviations.reserve(betas.size());
    for (const Rational& beta : betas) {
        if (beta <= Rational(-1) || beta.is_zero())
            throw std::invalid_argument("beta must exceed -1 and be nonzero");
        const JPWeightSystem jws(ws.alphas(), beta);
        const PolyComponent jp = jp_type1(jws, n, i);
        PolyComponent scaled{jp_to_laguerre_scaling(jws, n, i) * jp.prefactor, jp.coeffs};
        const BigFloat scaled_value = scaled.eval(x / beta, precision_bits);
        deviations.push_back(abs(scaled_value - lag_value).to_double());
    }
    return deviations;
}

} // namespace mop
