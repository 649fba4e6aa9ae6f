#include "mop/type1.hpp"

#include <stdexcept>

namespace mop {

GammaScaled PolyComponent::monomial_coeff(std::size_t l) const {
    if (is_zero() || l >= coeffs.size()) return GammaScaled{};
    return prefactor * GammaScaled(coeffs[l]);
}

GammaScaled PolyComponent::operator()(const Rational& x) const {
    if (is_zero()) return GammaScaled{};
    Rational acc(0);
    for (std::size_t l = coeffs.size(); l-- > 0;) acc = acc * x + coeffs[l];
    return prefactor * GammaScaled(acc);
}

BigFloat PolyComponent::eval(const Rational& x, mpfr_prec_t precision_bits) const {
    if (is_zero()) return BigFloat(Rational(0), precision_bits);
    BigFloat acc(precision_bits);
    const BigFloat xf(x, precision_bits);
    for (std::size_t l = coeffs.size(); l-- > 0;) acc = acc * xf + BigFloat(coeffs[l], precision_bits);
    return prefactor.to_float(precision_bits) * acc;
}

std::size_t PolyComponent::max_coeff_bits() const {
    std::size_t bits = prefactor.rational_part().bit_length();
    for (const Rational& c : coeffs) bits = std::max(bits, c.bit_length());
    return bits;
}

TypeIVector::TypeIVector(WeightSystem ws, MultiIndex n, std::vector<PolyComponent> comps)
    : ws_(std::move(ws)), n_(std::move(n)), comps_(std::move(comps)) {
    if (comps_.size() != weight_count(ws_) || n_.p() != comps_.size())
        throw std::invalid_argument("component count must match the weight system");
}

TypeIVector TypeIVector::with_component(std::size_t i, PolyComponent c) const {
    TypeIVector out(*this);
    out.comps_.at(i) = std::move(c);
    return out;
}

Rational type1_pairing(const TypeIVector& v, unsigned long j) {
    Rational acc(0);
    for (std::size_t i = 0; i < v.p(); ++i) {
        const PolyComponent& comp = v.component(i);
        if (comp.is_zero()) continue;
        for (std::size_t l = 0; l < comp.coeffs.size(); ++l) {
            if (comp.coeffs[l].is_zero()) continue;
            const GammaScaled term =
                comp.prefactor * GammaScaled(comp.coeffs[l]) * moment(v.ws(), i, j + l);
            acc += term.rational_value();
        }
    }
    return acc;
}

Rational type1_pairing(const TypeIVector& v, const Polynomial& q) {
    Rational acc(0);
    for (std::size_t s = 0; s < q.coeffs().size(); ++s) {
        if (q.coeffs()[s].is_zero()) continue;
        acc += q.coeffs()[s] * type1_pairing(v, s);
    }
    return acc;
}

bool type1_equal(const TypeIVector& a, const TypeIVector& b) {
    if (a.p() != b.p()) return false;
    for (std::size_t i = 0; i < a.p(); ++i) {
        const long deg = std::max(a.component(i).degree(), b.component(i).degree());
        for (long l = 0; l <= deg; ++l) {
            const std::size_t lu = static_cast<std::size_t>(l);
            if (!value_equal(a.component(i).monomial_coeff(lu), b.component(i).monomial_coeff(lu)))
                return false;
        }
    }
    return true;
}

} // namespace mop
