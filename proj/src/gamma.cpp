#include "mop/gamma.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mop {

GammaScaled::GammaScaled(Rational r, std::map<Rational, int> g)
    : rational_(std::move(r)), gammas_(std::move(g)) {
    canonicalize();
}

GammaScaled GammaScaled::gamma(const Rational& arg) {
    if (arg.is_nonpositive_integer()) throw PoleError("Gamma pole at " + arg.str());
    return GammaScaled(Rational(1), {{arg, 1}});
}

const Rational& GammaScaled::rational_value() const {
    if (!gammas_.empty())
        throw IncompatibleGammaError("Gamma residuals did not cancel: " + str());
    return rational_;
}

void GammaScaled::canonicalize() {
    if (rational_.is_zero()) {
        gammas_.clear();
        return;
    }
    // Pull entries out, dropping zero exponents and folding integer arguments
    // to factorials: Gamma(m) = (m-1)!.
    std::vector<std::pair<Rational, int>> entries;
    entries.reserve(gammas_.size());
    for (const auto& [arg, exp] : gammas_) {
        if (exp == 0) continue;
        if (arg.is_nonpositive_integer()) throw PoleError("Gamma pole at " + arg.str());
        if (arg.is_integer()) {
            rational_ *= pow_int(factorial(static_cast<unsigned long>(arg.to_long() - 1)), exp);
            continue;
        }
        entries.emplace_back(arg, exp);
    }
    gammas_.clear();

    // Group arguments whose pairwise differences are integers; entries arrive
    // sorted ascending by argument.
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t t = 0; t < entries.size(); ++t) {
        bool placed = false;
        for (auto& c : classes) {
            if ((entries[t].first - entries[c.front()].first).is_integer()) {
                c.push_back(t);
                placed = true;
                break;
            }
        }
        if (!placed) classes.push_back({t});
    }

    // Within a class, cancel numerator/denominator pairs, always pairing the
    // largest remaining argument on each side: Gamma(a)/Gamma(b) = (b)_{a-b}.
    for (auto& c : classes) {
        while (true) {
            std::size_t pos = c.size(), neg = c.size();
            for (std::size_t t = c.size(); t-- > 0;) {
                if (pos == c.size() && entries[c[t]].second > 0) pos = t;
                if (neg == c.size() && entries[c[t]].second < 0) neg = t;
                if (pos != c.size() && neg != c.size()) break;
            }
            if (pos == c.size() || neg == c.size()) break;
            auto& [a, ea] = entries[c[pos]];
            auto& [b, eb] = entries[c[neg]];
            const int folds = std::min(ea, -eb);
            const Rational diff = a - b;
            Rational factor;
            if (diff.sign() >= 0)
                factor = pochhammer(b, static_cast<unsigned long>(diff.to_long()));
            else
                factor = Rational(1) / pochhammer(a, static_cast<unsigned long>((-diff).to_long()));
            rational_ *= pow_int(factor, folds);
            ea -= folds;
            eb += folds;
        }
    }

    for (const auto& [arg, exp] : entries)
        if (exp != 0) gammas_[arg] += exp;
}

GammaScaled GammaScaled::inverse() const {
    if (is_zero()) throw DivisionByZeroError{};
    std::map<Rational, int> g;
    for (const auto& [arg, exp] : gammas_) g.emplace(arg, -exp);
    return GammaScaled(Rational(1) / rational_, std::move(g));
}

GammaScaled GammaScaled::operator-() const {
    GammaScaled out(*this);
    out.rational_ = -out.rational_;
    return out;
}

GammaScaled operator*(const GammaScaled& u, const GammaScaled& v) {
    if (u.is_zero() || v.is_zero()) return GammaScaled{};
    std::map<Rational, int> g = u.gammas_;
    for (const auto& [arg, exp] : v.gammas_) g[arg] += exp;
    return GammaScaled(u.rational_ * v.rational_, std::move(g));
}

GammaScaled operator+(const GammaScaled& u, const GammaScaled& v) {
    if (u.is_zero()) return v;
    if (v.is_zero()) return u;
    if (u.gammas_ != v.gammas_)
        throw IncompatibleGammaError("cannot add " + u.str() + " and " + v.str());
    return GammaScaled(u.rational_ + v.rational_, u.gammas_);
}

bool value_equal(const GammaScaled& u, const GammaScaled& v) {
    if (u.is_zero() || v.is_zero()) return u.is_zero() == v.is_zero();
    const GammaScaled ratio = u / v;
    return ratio.is_rational() && ratio.rational_value() == Rational(1);
}

BigFloat GammaScaled::to_float(mpfr_prec_t precision_bits) const {
    if (precision_bits < 53) throw std::invalid_argument("precision must be at least 53 bits");
    if (is_zero()) return BigFloat(Rational(0), precision_bits);
    const mpfr_prec_t work = precision_bits + 64;
    BigFloat log_acc(work);
    int sign = 1;
    for (const auto& [arg, exp] : gammas_) {
        int s = 1;
        BigFloat lg = BigFloat::log_gamma(arg, work, &s);
        log_acc = log_acc + BigFloat(Rational(exp), work) * lg;
        if (s < 0 && (exp % 2 != 0)) sign = -sign;
    }
    BigFloat g = exp(log_acc);
    BigFloat out(precision_bits);
    mpfr_mul_q(out.raw(), g.raw(), rational_.raw().get_mpq_t(), MPFR_RNDN);
    if (!out.is_finite()) throw OverflowError("GammaScaled value exceeds floating range: " + str());
    if (sign < 0) out.negate();
    return out;
}

std::string GammaScaled::str() const {
    if (is_zero()) return "0";
    std::string s = rational_.str();
    for (const auto& [arg, exp] : gammas_)
        for (int t = 0; t < exp; ++t) s += "*Γ(" + arg.str() + ")";
    for (const auto& [arg, exp] : gammas_)
        for (int t = 0; t < -exp; ++t) s += "/Γ(" + arg.str() + ")";
    return s;
}

namespace {

void skip_ws(std::string_view s, std::size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

Rational parse_rational_token(std::string_view s, std::size_t& pos) {
    skip_ws(s, pos);
    const std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    // a '/' starts a denominator only when followed by a digit (not "/Γ")
    if (pos + 1 < s.size() && s[pos] == '/' && std::isdigit(static_cast<unsigned char>(s[pos + 1]))) {
        ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    return Rational::parse(s.substr(start, pos - start));
}

// accepts "Γ(" (UTF-8) and the ASCII fallback "Gamma("
bool consume_gamma_open(std::string_view s, std::size_t& pos) {
    skip_ws(s, pos);
    if (s.substr(pos).starts_with("Γ(")) {
        pos += 3;
        return true;
    }
    if (s.substr(pos).starts_with("Gamma(")) {
        pos += 6;
        return true;
    }
    return false;
}

} // namespace

GammaScaled GammaScaled::parse(std::string_view text) {
    std::size_t pos = 0;
    const Rational r = parse_rational_token(text, pos);
    std::map<Rational, int> g;
    while (true) {
        skip_ws(text, pos);
        if (pos == text.size()) break;
        int dir;
        if (text[pos] == '*') dir = 1;
        else if (text[pos] == '/') dir = -1;
        else throw ParseError("expected '*' or '/' at offset " + std::to_string(pos));
        ++pos;
        if (!consume_gamma_open(text, pos)) throw ParseError("expected Gamma factor at offset " + std::to_string(pos));
        const Rational arg = parse_rational_token(text, pos);
        skip_ws(text, pos);
        if (pos == text.size() || text[pos] != ')') throw ParseError("expected ')' at offset " + std::to_string(pos));
        ++pos;
        g[arg] += dir;
    }
    return GammaScaled(r, std::move(g));
}

GammaScaled gamma_ratio(const Rational& a, const Rational& b) {
    if (a.is_nonpositive_integer()) throw PoleError("Gamma pole at " + a.str());
    if (b.is_nonpositive_integer()) throw PoleError("Gamma pole at " + b.str());
    const Rational diff = a - b;
    if (diff.is_integer()) {
        if (diff.sign() >= 0)
            return GammaScaled(pochhammer(b, static_cast<unsigned long>(diff.to_long())));
        return GammaScaled(Rational(1) / pochhammer(a, static_cast<unsigned long>((-diff).to_long())));
    }
    return GammaScaled::gamma(a) * GammaScaled::gamma(b).inverse();
}

} // namespace mop
