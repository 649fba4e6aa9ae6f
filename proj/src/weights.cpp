#include "mop/weights.hpp"

namespace mop {

namespace {

void validate_alphas(const std::vector<Rational>& alphas) {
    if (alphas.empty()) throw ATSystemError("at least one weight required");
    const Rational minus_one(-1);
    for (const Rational& a : alphas)
        if (a <= minus_one) throw ATSystemError("alpha must exceed -1, got " + a.str());
    for (std::size_t i = 0; i < alphas.size(); ++i)
        for (std::size_t j = i + 1; j < alphas.size(); ++j)
            if ((alphas[i] - alphas[j]).is_integer())
                throw ATSystemError("alpha differences must be non-integer: alpha_" +
                                    std::to_string(i + 1) + "=" + alphas[i].str() + ", alpha_" +
                                    std::to_string(j + 1) + "=" + alphas[j].str());
}

std::string alphas_string(const std::vector<Rational>& alphas) {
    std::string s;
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (i) s += ",";
        s += alphas[i].str();
    }
    return s;
}

} // namespace

JPWeightSystem::JPWeightSystem(std::vector<Rational> alphas, Rational beta)
    : alphas_(std::move(alphas)), beta_(std::move(beta)) {
    validate_alphas(alphas_);
    if (beta_ <= Rational(-1)) throw ATSystemError("beta must exceed -1, got " + beta_.str());
}

GammaScaled JPWeightSystem::moment(std::size_t i, unsigned long k) const {
    const Rational kk(static_cast<long>(k));
    return GammaScaled::gamma(beta_ + Rational(1)) *
           GammaScaled::gamma(alphas_[i] + kk + Rational(1)) *
           GammaScaled::gamma(alphas_[i] + beta_ + kk + Rational(2)).inverse();
}

Rational JPWeightSystem::moment_ratio(std::size_t i, unsigned long k) const {
    return pochhammer(alphas_[i] + Rational(1), k) /
           pochhammer(alphas_[i] + beta_ + Rational(2), k);
}

LaguerreWeightSystem::LaguerreWeightSystem(std::vector<Rational> alphas)
    : alphas_(std::move(alphas)) {
    validate_alphas(alphas_);
}

GammaScaled LaguerreWeightSystem::moment(std::size_t i, unsigned long k) const {
    return GammaScaled::gamma(alphas_[i] + Rational(static_cast<long>(k)) + Rational(1));
}

Rational LaguerreWeightSystem::moment_ratio(std::size_t i, unsigned long k) const {
    return pochhammer(alphas_[i] + Rational(1), k);
}

std::size_t weight_count(const WeightSystem& ws) {
    return std::visit([](const auto& w) { return w.p(); }, ws);
}

const std::vector<Rational>& weight_alphas(const WeightSystem& ws) {
    return std::visit([](const auto& w) -> const std::vector<Rational>& { return w.alphas(); }, ws);
}

GammaScaled moment(const WeightSystem& ws, std::size_t i, unsigned long k) {
    return std::visit([&](const auto& w) { return w.moment(i, k); }, ws);
}

Rational moment_ratio(const WeightSystem& ws, std::size_t i, unsigned long k) {
    return std::visit([&](const auto& w) { return w.moment_ratio(i, k); }, ws);
}

std::string family_name(const WeightSystem& ws) {
    return std::holds_alternative<JPWeightSystem>(ws) ? "jacobi-pineiro" : "laguerre1";
}

std::string params_string(const WeightSystem& ws) {
    std::string s = "family=" + family_name(ws) + " alphas=" + alphas_string(weight_alphas(ws));
    if (const auto* jp = std::get_if<JPWeightSystem>(&ws)) s += " beta=" + jp->beta().str();
    return s;
}

} // namespace mop
