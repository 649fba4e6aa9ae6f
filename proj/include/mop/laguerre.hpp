#pragma once

#include <string>
#include <vector>

#include "mop/type1.hpp"

namespace mop {

/// Closed-form type I Laguerre (first kind) component i (0-based).
PolyComponent lag_type1(const LaguerreWeightSystem& ws, const MultiIndex& n, std::size_t i);

TypeIVector lag_type1_vector(const LaguerreWeightSystem& ws, const MultiIndex& n);

GammaScaled lag_moment(const LaguerreWeightSystem& ws, std::size_t i, unsigned long k);

Rational lag_pairing(const TypeIVector& v, unsigned long j);

/// The factor Gamma(beta+|n|) / (prod_k (alpha_k+beta+|n|)_{n_k} Gamma(alpha_i+beta+|n|))
/// that rescales a type I Jacobi-Pineiro component onto its Laguerre limit.
GammaScaled jp_to_laguerre_scaling(const JPWeightSystem& ws, const MultiIndex& n, std::size_t i);

struct CoefficientLimitReport {
    bool pass = true;
    std::string detail; // first failing coefficient, if any
};

/// Exact form of the beta -> infinity limit: each monomial coefficient of the
/// scaled Jacobi-Pineiro component, as a rational function of beta recovered
/// by interpolation at rational beta samples, must be a degree-l polynomial
/// over beta^l with leading coefficient exactly the Laguerre coefficient.
CoefficientLimitReport lag_limit_coefficientwise(const LaguerreWeightSystem& ws,
                                                 const MultiIndex& n, std::size_t i);

/// Floating sweep of the same limit: |scaled JP(x/beta) - L(x)| per beta,
/// evaluated through log-Gamma at the given precision.
std::vector<double> lag_limit_check(const LaguerreWeightSystem& ws, const MultiIndex& n,
                                    std::size_t i, const Rational& x,
                                    const std::vector<Rational>& betas,
                                    mpfr_prec_t precision_bits = 128);

} // namespace mop
