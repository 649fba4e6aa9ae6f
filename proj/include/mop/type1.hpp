#pragma once

#include <cstddef>
#include <vector>

#include "mop/gamma.hpp"
#include "mop/multi_index.hpp"
#include "mop/polynomial.hpp"
#include "mop/weights.hpp"

namespace mop {

/// One polynomial of a type I vector: prefactor * sum_l coeffs[l] x^l.
/// The zero polynomial is a zero prefactor with no coefficients.
struct PolyComponent {
    GammaScaled prefactor;
    std::vector<Rational> coeffs;

    static PolyComponent zero() { return {}; }

    bool is_zero() const { return prefactor.is_zero(); }
    long degree() const { return is_zero() ? -1 : static_cast<long>(coeffs.size()) - 1; }

    GammaScaled monomial_coeff(std::size_t l) const;
    GammaScaled operator()(const Rational& x) const;
    BigFloat eval(const Rational& x, mpfr_prec_t precision_bits) const;
    std::size_t max_coeff_bits() const;
};

/// The p polynomials A^(1), ..., A^(p) attached to one multi-index.
class TypeIVector {
public:
    TypeIVector(WeightSystem ws, MultiIndex n, std::vector<PolyComponent> comps);

    const WeightSystem& ws() const { return ws_; }
    const MultiIndex& index() const { return n_; }
    std::size_t p() const { return comps_.size(); }
    const PolyComponent& component(std::size_t i) const { return comps_[i]; }
    const std::vector<PolyComponent>& components() const { return comps_; }

    /// Replace one component (fault-injection hook for verification tests).
    TypeIVector with_component(std::size_t i, PolyComponent c) const;

private:
    WeightSystem ws_;
    MultiIndex n_;
    std::vector<PolyComponent> comps_;
};

/// sum_i integral of x^j A^(i) w_i dmu, exact. Every term must reduce to a
/// pure rational; a residual Gamma factor throws IncompatibleGammaError.
Rational type1_pairing(const TypeIVector& v, unsigned long j);

/// sum_i integral of q A^(i) w_i dmu for a rational polynomial q.
Rational type1_pairing(const TypeIVector& v, const Polynomial& q);

/// Componentwise value equality of monomial coefficients, prefactors included.
bool type1_equal(const TypeIVector& a, const TypeIVector& b);

} // namespace mop
