#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "mop/gamma.hpp"
#include "mop/rational.hpp"

namespace mop {

/// Weights x^{alpha_i}(1-x)^beta on [0,1]. Admissibility (every exponent
/// above -1, pairwise non-integer alpha differences) is enforced here, once.
class JPWeightSystem {
public:
    JPWeightSystem(std::vector<Rational> alphas, Rational beta);

    std::size_t p() const { return alphas_.size(); }
    const Rational& alpha(std::size_t i) const { return alphas_[i]; }
    const std::vector<Rational>& alphas() const { return alphas_; }
    const Rational& beta() const { return beta_; }

    /// k-th moment of weight i: Gamma(beta+1)Gamma(alpha_i+k+1)/Gamma(alpha_i+beta+k+2).
    GammaScaled moment(std::size_t i, unsigned long k) const;
    /// moment(i,k)/moment(i,0) = (alpha_i+1)_k / (alpha_i+beta+2)_k, pure rational.
    Rational moment_ratio(std::size_t i, unsigned long k) const;

private:
    std::vector<Rational> alphas_;
    Rational beta_;
};

/// Weights e^{-x} x^{alpha_i} on [0, infinity).
class LaguerreWeightSystem {
public:
    explicit LaguerreWeightSystem(std::vector<Rational> alphas);

    std::size_t p() const { return alphas_.size(); }
    const Rational& alpha(std::size_t i) const { return alphas_[i]; }
    const std::vector<Rational>& alphas() const { return alphas_; }

    /// k-th moment of weight i: Gamma(alpha_i+k+1).
    GammaScaled moment(std::size_t i, unsigned long k) const;
    /// (alpha_i+1)_k
    Rational moment_ratio(std::size_t i, unsigned long k) const;

private:
    std::vector<Rational> alphas_;
};

using WeightSystem = std::variant<JPWeightSystem, LaguerreWeightSystem>;

std::size_t weight_count(const WeightSystem& ws);
const std::vector<Rational>& weight_alphas(const WeightSystem& ws);
GammaScaled moment(const WeightSystem& ws, std::size_t i, unsigned long k);
Rational moment_ratio(const WeightSystem& ws, std::size_t i, unsigned long k);
std::string family_name(const WeightSystem& ws); // "jacobi-pineiro" | "laguerre1"
std::string params_string(const WeightSystem& ws);

} // namespace mop
