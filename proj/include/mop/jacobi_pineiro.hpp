#pragma once

#include "mop/type1.hpp"

namespace mop {

/// Closed-form type I Jacobi-Pineiro component i (0-based), expanded into
/// monomial coefficients. The zero polynomial when n_i = 0.
PolyComponent jp_type1(const JPWeightSystem& ws, const MultiIndex& n, std::size_t i);

TypeIVector jp_type1_vector(const JPWeightSystem& ws, const MultiIndex& n);

GammaScaled jp_moment(const JPWeightSystem& ws, std::size_t i, unsigned long k);

/// Exact: 0 for j <= |n|-2, 1 for j = |n|-1.
Rational jp_pairing(const TypeIVector& v, unsigned long j);

} // namespace mop
