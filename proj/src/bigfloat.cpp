#include "mop/bigfloat.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace mop {

BigFloat::BigFloat(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }

BigFloat::BigFloat(const Rational& r, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, r.raw().get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

std::string BigFloat::str(std::size_t digits) const {
    std::vector<char> buf(digits + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", static_cast<int>(digits), v_);
    return std::string(buf.data());
}

BigFloat& BigFloat::negate() {
    mpfr_neg(v_, v_, MPFR_RNDN);
    return *this;
}

BigFloat BigFloat::log_gamma(const Rational& x, mpfr_prec_t prec, int* sign) {
    BigFloat arg(x, prec);
    BigFloat out(prec);
    int s = 1;
    mpfr_lgamma(out.v_, &s, arg.v_, MPFR_RNDN);
    if (sign) *sign = s;
    return out;
}

BigFloat abs(BigFloat x) {
    mpfr_abs(x.v_, x.v_, MPFR_RNDN);
    return x;
}

BigFloat exp(const BigFloat& x) {
    BigFloat out(mpfr_get_prec(x.v_));
    mpfr_exp(out.v_, x.v_, MPFR_RNDN);
    return out;
}

namespace {
mpfr_prec_t join_prec(const BigFloat& a, const BigFloat& b) {
    return std::max(a.precision(), b.precision());
}
} // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat out(join_prec(a, b));
    mpfr_add(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return out;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat out(join_prec(a, b));
    mpfr_sub(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return out;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat out(join_prec(a, b));
    mpfr_mul(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return out;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat out(join_prec(a, b));
    mpfr_div(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return out;
}

} // namespace mop
