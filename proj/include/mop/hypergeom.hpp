#pragma once

#include <string>
#include <vector>

#include "mop/gamma.hpp"
#include "mop/rational.hpp"

namespace mop {

/// Parameters of a generalized hypergeometric series pFq(numerator; denominator; argument).
struct HypergeomSpec {
    std::vector<Rational> numerator;
    std::vector<Rational> denominator;
    Rational argument;
};

/// Smallest L >= 0 such that some numerator parameter equals -L.
/// NonTerminatingError when no numerator parameter is a non-positive integer.
unsigned long termination_index(const HypergeomSpec& spec);

/// Exact finite sum of a terminating series, by incremental term ratios.
/// DenominatorPoleError if a denominator parameter hits a non-positive
/// integer within the summed range.
GammaScaled pfq_terminating(const HypergeomSpec& spec);

/// Data of one instance of the two-sided hypergeometric summation identity
/// (Karp-Prilepkina): a terminating (r+l+1)F(r+l) at unit argument against
/// its expansion into l shifted series.
struct KPInstance {
    Rational a;
    std::vector<Rational> f;   // length r
    std::vector<unsigned> m;   // length r, entries >= 1
    std::vector<Rational> b;   // length l
    std::vector<unsigned> k;   // length l, entries >= 1

    std::string str() const;
};

/// Structural hypotheses and pole exclusions. Returns false (with a reason in
/// *why, if given) for instances the evaluators reject.
bool kp_instance_valid(const KPInstance& inst, std::string* why = nullptr);

/// Left side: (r+l+1)F(r+l)(a, f+m, b; f, b+k; 1), evaluated exactly.
GammaScaled kp_lhs(const KPInstance& inst);

/// Right side: Gamma(1-a) (b_1)_{k_1}...(b_l)_{k_l} / ((f_1)_{m_1}...(f_r)_{m_r})
/// times the q-sum of prefactored shifted series. Reduces to a pure rational.
GammaScaled kp_rhs(const KPInstance& inst);

/// Result of reversing the summation order of a terminating series at unit
/// argument: value(original) = prefactor * value(reversed). The reversed
/// parameters are {-n, -b_j-n+1} over {-a_i-n+1} with prefactor
/// (-1)^n prod (a_i)_n / prod (b_j)_n; the reversed argument is (-1)^{p+q},
/// which is 1 for the balanced (p+1)Fp shape.
struct ReversedSeries {
    HypergeomSpec spec;
    GammaScaled prefactor;
};

ReversedSeries reversal(const HypergeomSpec& spec);

} // namespace mop
