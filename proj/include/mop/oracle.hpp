#pragma once

#include <map>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "mop/polynomial.hpp"
#include "mop/type1.hpp"

namespace mop {

/// Cache of exact moments of one weight system. Concurrent readers are safe;
/// insertions are one-time and guarded.
class MomentTable {
public:
    explicit MomentTable(WeightSystem ws) : ws_(std::move(ws)) {}

    GammaScaled value(std::size_t i, unsigned long k) const;
    /// value(i,k)/value(i,0), reduced to a pure rational.
    Rational ratio(std::size_t i, unsigned long k) const;
    const WeightSystem& ws() const { return ws_; }

private:
    WeightSystem ws_;
    mutable std::shared_mutex mutex_;
    mutable std::map<std::pair<std::size_t, unsigned long>, GammaScaled> values_;
    mutable std::map<std::pair<std::size_t, unsigned long>, Rational> ratios_;
};

/// Dense square exact linear system.
struct LinearSystem {
    std::vector<std::vector<Rational>> matrix;
    std::vector<Rational> rhs;

    /// Fraction-free (Bareiss) elimination over the integers after clearing
    /// row denominators; exact. SingularSystemError when the determinant is 0.
    std::vector<Rational> solve() const;
};

/// Brute-force type I vector: the |n| orthogonality conditions solved
/// literally as a linear system in the scaled monomial coefficients.
TypeIVector oracle_type1_solve(const WeightSystem& ws, const MultiIndex& n);

/// Brute-force type II polynomial: monic of degree |n| with
/// integral of x^j B w_i dmu = 0 for j < n_i, each i.
Polynomial oracle_type2_solve(const WeightSystem& ws, const MultiIndex& n);

/// sum_i integral of B A^(i) w_i dmu, exact. 0 when deg B <= |n|-2 and 1 when
/// B is monic of degree |n|-1.
Rational biorthogonal_check(const Polynomial& B, const TypeIVector& v);

} // namespace mop
