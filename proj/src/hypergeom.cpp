#include "mop/hypergeom.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace mop {

unsigned long termination_index(const HypergeomSpec& spec) {
    bool found = false;
    unsigned long best = std::numeric_limits<unsigned long>::max();
    for (const Rational& a : spec.numerator) {
        if (a.is_nonpositive_integer()) {
            const unsigned long idx = static_cast<unsigned long>((-a).to_long());
            best = std::min(best, idx);
            found = true;
        }
    }
    if (!found) throw NonTerminatingError("no non-positive integer numerator parameter");
    return best;
}

GammaScaled pfq_terminating(const HypergeomSpec& spec) {
    const unsigned long L = termination_index(spec);
    for (const Rational& d : spec.denominator) {
        // (d)_t vanishes first at t = -d + 1
        if (d.is_nonpositive_integer() && static_cast<unsigned long>((-d).to_long()) + 1 <= L)
            throw DenominatorPoleError("denominator parameter " + d.str() +
                                       " poles before termination at " + std::to_string(L));
    }
    Rational term(1);
    Rational sum(1);
    for (unsigned long l = 0; l < L; ++l) {
        const Rational shift(static_cast<long>(l));
        Rational ratio = spec.argument;
        for (const Rational& a : spec.numerator) ratio *= a + shift;
        for (const Rational& d : spec.denominator) ratio /= d + shift;
        ratio /= Rational(static_cast<long>(l + 1));
        term *= ratio;
        sum += term;
    }
    return GammaScaled(sum);
}

std::string KPInstance::str() const {
    auto list = [](const auto& v, auto f) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += f(v[i]);
        }
        return s + ")";
    };
    auto rs = [](const Rational& r) { return r.str(); };
    auto us = [](unsigned u) { return std::to_string(u); };
    return "a=" + a.str() + " f=" + list(f, rs) + " m=" + list(m, us) + " b=" + list(b, rs) +
           " k=" + list(k, us);
}

bool kp_instance_valid(const KPInstance& inst, std::string* why) {
    auto reject = [&](const std::string& reason) {
        if (why) *why = reason;
        return false;
    };
    if (inst.f.size() != inst.m.size()) return reject("f and m length mismatch");
    if (inst.b.size() != inst.k.size()) return reject("b and k length mismatch");
    if (inst.b.empty()) return reject("at least one (b, k) block required");
    for (unsigned v : inst.m)
        if (v == 0) return reject("m entries must be positive");
    for (unsigned v : inst.k)
        if (v == 0) return reject("k entries must be positive");
    if (!inst.a.is_nonpositive_integer()) return reject("a must be a non-positive integer");

    // positivity: sum(k) - a - sum(m) > 0
    Rational margin = -inst.a;
    for (unsigned v : inst.k) margin += Rational(static_cast<long>(v));
    for (unsigned v : inst.m) margin -= Rational(static_cast<long>(v));
    if (margin.sign() <= 0) return reject("k_1+...+k_l - a - m_1-...-m_r must be positive");

    // expanded vector (b_q, b_q+1, ..., b_q+k_q-1) over all q: pairwise distinct
    std::set<Rational> expanded;
    for (std::size_t q = 0; q < inst.b.size(); ++q)
        for (unsigned t = 0; t < inst.k[q]; ++t)
            if (!expanded.insert(inst.b[q] + Rational(static_cast<long>(t))).second)
                return reject("expanded b-components are not pairwise distinct");

    const unsigned long L = static_cast<unsigned long>((-inst.a).to_long());
    for (std::size_t j = 0; j < inst.f.size(); ++j) {
        if (pochhammer(inst.f[j], inst.m[j]).is_zero()) return reject("(f_j)_{m_j} vanishes");
        // f_j sits in the left-side denominator
        if (inst.f[j].is_nonpositive_integer() &&
            static_cast<unsigned long>((-inst.f[j]).to_long()) + 1 <= L)
            return reject("f_j poles before the left side terminates");
    }
    for (std::size_t q = 0; q < inst.b.size(); ++q) {
        const Rational kq(static_cast<long>(inst.k[q]));
        if ((inst.b[q] + kq - Rational(1)).is_nonpositive_integer())
            return reject("Gamma(b_q+k_q-1) pole");
        if ((inst.b[q] + kq - inst.a).is_nonpositive_integer())
            return reject("Gamma(b_q+k_q-a) pole");
        if ((inst.b[q] + kq).is_nonpositive_integer() &&
            static_cast<unsigned long>((-(inst.b[q] + kq)).to_long()) + 1 <= L)
            return reject("b_q+k_q poles before the left side terminates");
    }
    return true;
}

GammaScaled kp_lhs(const KPInstance& inst) {
    if (!inst.a.is_nonpositive_integer())
        throw NonTerminatingError("a must be a non-positive integer, got " + inst.a.str());
    HypergeomSpec spec;
    spec.numerator.push_back(inst.a);
    for (std::size_t j = 0; j < inst.f.size(); ++j)
        spec.numerator.push_back(inst.f[j] + Rational(static_cast<long>(inst.m[j])));
    for (const Rational& bq : inst.b) spec.numerator.push_back(bq);
    spec.denominator = inst.f;
    for (std::size_t q = 0; q < inst.b.size(); ++q)
        spec.denominator.push_back(inst.b[q] + Rational(static_cast<long>(inst.k[q])));
    spec.argument = Rational(1);
    return pfq_terminating(spec);
}

GammaScaled kp_rhs(const KPInstance& inst) {
    if (!inst.a.is_nonpositive_integer())
        throw NonTerminatingError("a must be a non-positive integer, got " + inst.a.str());
    const std::size_t r = inst.f.size();
    const std::size_t l = inst.b.size();

    GammaScaled acc;
    for (std::size_t q = 0; q < l; ++q) {
        const Rational kq(static_cast<long>(inst.k[q]));
        const Rational edge = inst.b[q] + kq - Rational(1); // b_q + k_q - 1

        // f~_j = f_j - b_q + 1 - k_q + m_j
        std::vector<Rational> ft(r);
        for (std::size_t j = 0; j < r; ++j)
            ft[j] = inst.f[j] - edge + Rational(static_cast<long>(inst.m[j]));

        GammaScaled term(inst.k[q] % 2 == 0 ? Rational(-1) : Rational(1)); // (-1)^{k_q - 1}
        for (std::size_t j = 0; j < r; ++j)
            term = term * GammaScaled(pochhammer(ft[j] - Rational(static_cast<long>(inst.m[j])),
                                                 inst.m[j]));
        term = term * gamma_ratio(edge, inst.b[q] + kq - inst.a);
        term = term * GammaScaled(factorial(inst.k[q] - 1)).inverse();
        for (std::size_t j = 0; j < l; ++j) {
            if (j == q) continue;
            const Rational pf = pochhammer(inst.b[j] - edge, inst.k[j]);
            if (pf.is_zero())
                throw DenominatorPoleError("(b_j-b_q-k_q+1)_{k_j} vanishes for " + inst.str());
            term = term * GammaScaled(Rational(1) / pf);
        }

        HypergeomSpec inner;
        inner.numerator.push_back(Rational(1) - kq);            // -k_q + 1
        inner.numerator.push_back(inst.a - edge);               // -b_q - k_q + 1 + a
        for (const Rational& v : ft) inner.numerator.push_back(v);
        for (std::size_t j = 0; j < l; ++j)
            if (j != q) inner.numerator.push_back(inst.b[j] - edge);
        inner.denominator.push_back(Rational(1) - edge);        // -b_q - k_q + 2
        for (std::size_t j = 0; j < r; ++j)
            inner.denominator.push_back(ft[j] - Rational(static_cast<long>(inst.m[j])));
        for (std::size_t j = 0; j < l; ++j)
            if (j != q)
                inner.denominator.push_back(inst.b[j] + Rational(static_cast<long>(inst.k[j])) - edge);
        inner.argument = Rational(1);

        acc = acc + term * pfq_terminating(inner);
    }

    GammaScaled pref(factorial(static_cast<unsigned long>((-inst.a).to_long()))); // Gamma(1-a)
    for (std::size_t q = 0; q < l; ++q) pref = pref * GammaScaled(pochhammer(inst.b[q], inst.k[q]));
    for (std::size_t j = 0; j < r; ++j) {
        const Rational pf = pochhammer(inst.f[j], inst.m[j]);
        if (pf.is_zero()) throw DenominatorPoleError("(f_j)_{m_j} vanishes for " + inst.str());
        pref = pref * GammaScaled(Rational(1) / pf);
    }
    const GammaScaled out = pref * acc;
    return GammaScaled(out.rational_value()); // demand total cancellation
}

ReversedSeries reversal(const HypergeomSpec& spec) {
    if (spec.argument != Rational(1))
        throw std::invalid_argument("reversal applies to unit-argument series");
    const unsigned long n = termination_index(spec);
    const Rational lead(-static_cast<long>(n));

    // split the terminating parameter off the remaining numerator parameters
    std::vector<Rational> as;
    bool taken = false;
    for (const Rational& a : spec.numerator) {
        if (!taken && a == lead) {
            taken = true;
            continue;
        }
        as.push_back(a);
    }

    Rational pref(n % 2 == 0 ? 1 : -1);
    for (const Rational& a : as) pref *= pochhammer(a, n);
    for (const Rational& b : spec.denominator) {
        const Rational pb = pochhammer(b, n);
        if (pb.is_zero()) throw PoleError("(b)_n vanishes in reversal prefactor, b=" + b.str());
        pref /= pb;
    }

    const Rational shift = Rational(1) - Rational(static_cast<long>(n)); // 1 - n
    ReversedSeries out;
    out.spec.numerator.push_back(lead);
    for (const Rational& b : spec.denominator) out.spec.numerator.push_back(shift - b);
    for (const Rational& a : as) out.spec.denominator.push_back(shift - a);
    // reversing l -> n-l flips the sign of each term once per parameter, so
    // the reversed argument is (-1)^{p+q}; unit only for balanced series
    out.spec.argument =
        (as.size() + spec.denominator.size()) % 2 == 0 ? Rational(1) : Rational(-1);
    out.prefactor = GammaScaled(pref);
    return out;
}

} // namespace mop
