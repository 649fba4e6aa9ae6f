#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mop/bigfloat.hpp"
#include "mop/rational.hpp"

namespace mop {

/// Dense univariate polynomial over Rational; coefficient k multiplies x^k.
/// The zero polynomial has an empty coefficient vector and degree -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial monomial(std::size_t k, const Rational& c);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const Rational& leading() const { return c_.back(); }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational operator()(const Rational& x) const;
    BigFloat eval(const BigFloat& x) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator*(const Rational& s) const;
    Polynomial operator-() const;
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    std::string str() const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Exact polynomial through the given points (pairwise distinct abscissas),
/// recovered by Newton divided differences.
Polynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points);

} // namespace mop
