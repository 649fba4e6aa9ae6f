#include "mop/param_gen.hpp"

#include <stdexcept>

namespace mop {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Rational random_rational(Rng& rng, unsigned max_den, const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) throw std::invalid_argument("empty range");
    for (int attempt = 0; attempt < 256; ++attempt) {
        const unsigned den = std::uniform_int_distribution<unsigned>(1, max_den)(rng);
        const Rational d(static_cast<long>(den));
        // integers num with lo*den < num <= hi*den
        const long num_lo = Rational((lo * d).floor()).to_long() + 1;
        const long num_hi = Rational((hi * d).floor()).to_long();
        if (num_lo > num_hi) continue;
        const long num = std::uniform_int_distribution<long>(num_lo, num_hi)(rng);
        return Rational(num, static_cast<long>(den));
    }
    throw std::logic_error("random_rational failed to draw from range");
}

std::vector<Rational> random_admissible_alphas(Rng& rng, std::size_t p, unsigned max_den) {
    const Rational lo(-1), hi(3);
    for (int attempt = 0; attempt < 4096; ++attempt) {
        std::vector<Rational> alphas;
        alphas.reserve(p);
        for (std::size_t i = 0; i < p; ++i) alphas.push_back(random_rational(rng, max_den, lo, hi));
        bool ok = true;
        for (std::size_t i = 0; ok && i < p; ++i)
            for (std::size_t j = i + 1; ok && j < p; ++j)
                if ((alphas[i] - alphas[j]).is_integer()) ok = false;
        if (ok) return alphas;
    }
    throw std::logic_error("failed to draw admissible alphas");
}

JPWeightSystem random_jp_system(Rng& rng, std::size_t p) {
    std::vector<Rational> alphas = random_admissible_alphas(rng, p);
    const Rational beta = random_rational(rng, 6, Rational(-1), Rational(3));
    return JPWeightSystem(std::move(alphas), beta);
}

LaguerreWeightSystem random_laguerre_system(Rng& rng, std::size_t p) {
    return LaguerreWeightSystem(random_admissible_alphas(rng, p));
}

MultiIndex random_index(Rng& rng, std::size_t p, unsigned total) {
    std::vector<unsigned> n(p, 0);
    std::uniform_int_distribution<std::size_t> box(0, p - 1);
    for (unsigned t = 0; t < total; ++t) ++n[box(rng)];
    return MultiIndex(std::move(n));
}

KPInstance random_kp_instance(Rng& rng) {
    const Rational lo(-3), hi(4);
    for (int attempt = 0; attempt < 4096; ++attempt) {
        KPInstance inst;
        inst.a = Rational(-std::uniform_int_distribution<long>(0, 4)(rng));
        const std::size_t r = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
        const std::size_t l = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
        auto non_integer = [&] {
            for (;;) {
                const Rational v = random_rational(rng, 7, lo, hi);
                if (!v.is_integer()) return v;
            }
        };
        for (std::size_t j = 0; j < r; ++j) {
            inst.f.push_back(non_integer());
            inst.m.push_back(std::uniform_int_distribution<unsigned>(1, 3)(rng));
        }
        for (std::size_t q = 0; q < l; ++q) {
            inst.b.push_back(non_integer());
            inst.k.push_back(std::uniform_int_distribution<unsigned>(1, 3)(rng));
        }
        // keep all b-differences and f-b differences non-integer so that no
        // shifted parameter in either side can reach a pole
        bool ok = true;
        for (std::size_t q = 0; ok && q < l; ++q) {
            for (std::size_t j = q + 1; j < l; ++j)
                if ((inst.b[q] - inst.b[j]).is_integer()) { ok = false; break; }
            for (std::size_t j = 0; ok && j < r; ++j)
                if ((inst.f[j] - inst.b[q]).is_integer()) { ok = false; break; }
        }
        if (ok && kp_instance_valid(inst)) return inst;
    }
    throw std::logic_error("failed to draw a valid summation-identity instance");
}

HypergeomSpec random_terminating_unit_series(Rng& rng) {
    const Rational lo(-3), hi(4);
    HypergeomSpec spec;
    const long n = std::uniform_int_distribution<long>(0, 4)(rng);
    spec.numerator.push_back(Rational(-n));
    const std::size_t extra_num = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
    const std::size_t extra_den = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
    auto non_integer = [&] {
        for (;;) {
            const Rational v = random_rational(rng, 7, lo, hi);
            if (!v.is_integer()) return v;
        }
    };
    for (std::size_t t = 0; t < extra_num; ++t) spec.numerator.push_back(non_integer());
    for (std::size_t t = 0; t < extra_den; ++t) spec.denominator.push_back(non_integer());
    spec.argument = Rational(1);
    return spec;
}

Polynomial random_polynomial(Rng& rng, std::size_t degree, unsigned max_den) {
    const Rational lo(-3), hi(3);
    std::vector<Rational> c(degree + 1);
    for (auto& v : c) v = random_rational(rng, max_den, lo, hi);
    while (c.back().is_zero()) c.back() = random_rational(rng, max_den, lo, hi);
    return Polynomial(std::move(c));
}

} // namespace mop
