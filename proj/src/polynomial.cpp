#include "mop/polynomial.hpp"

namespace mop {

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::monomial(std::size_t k, const Rational& c) {
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = c;
    return Polynomial(std::move(v));
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
}

BigFloat Polynomial::eval(const BigFloat& x) const {
    BigFloat acc(x.precision());
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + BigFloat(c_[k], x.precision());
    return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] += b.c_[k];
    return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Rational& s) const {
    std::vector<Rational> v = c_;
    for (auto& c : v) c *= s;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const { return *this * Rational(-1); }

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::string s = "[";
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (k) s += ",";
        s += c_[k].str();
    }
    return s + "]";
}

Polynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    const std::size_t n = points.size();
    // divided differences in place
    std::vector<Rational> dd(n);
    for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n; i-- > level;)
            dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);
    // Horner-style assembly of the Newton form
    Polynomial out;
    for (std::size_t i = n; i-- > 0;) {
        Polynomial shift(std::vector<Rational>{-points[i].first, Rational(1)});
        out = out * shift + Polynomial(std::vector<Rational>{dd[i]});
    }
    return out;
}

} // namespace mop
