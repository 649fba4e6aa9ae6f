#pragma once

#include <cstdint>
#include <random>

#include "mop/hypergeom.hpp"
#include "mop/multi_index.hpp"
#include "mop/polynomial.hpp"
#include "mop/weights.hpp"

namespace mop {

using Rng = std::mt19937_64;

/// Deterministic per-item seed derivation (splitmix-style).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

/// Random rational in (lo, hi] with denominator at most max_den.
Rational random_rational(Rng& rng, unsigned max_den, const Rational& lo, const Rational& hi);

/// Distinct alphas in (-1, 3], denominators <= max_den, pairwise non-integer
/// differences.
std::vector<Rational> random_admissible_alphas(Rng& rng, std::size_t p, unsigned max_den = 6);

JPWeightSystem random_jp_system(Rng& rng, std::size_t p);
LaguerreWeightSystem random_laguerre_system(Rng& rng, std::size_t p);

/// Random composition of `total` into p nonnegative parts.
MultiIndex random_index(Rng& rng, std::size_t p, unsigned total);

/// Random valid instance of the two-sided summation identity
/// (r <= 2, l <= 3, entries of k and m <= 3, |a| <= 4, denominators <= 7).
KPInstance random_kp_instance(Rng& rng);

/// Random terminating series at unit argument suitable for reversal.
HypergeomSpec random_terminating_unit_series(Rng& rng);

/// Random polynomial of the exact degree given (leading coefficient nonzero).
Polynomial random_polynomial(Rng& rng, std::size_t degree, unsigned max_den = 6);

} // namespace mop
