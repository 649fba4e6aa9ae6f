#include "mop/rational.hpp"

#include <cctype>
#include <ostream>

namespace mop {

Rational::Rational(long num, long den) {
    if (den == 0) throw DivisionByZeroError{};
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpq_class& v) : v_(v) {
    if (v_.get_den() == 0) throw DivisionByZeroError{};
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    // strict grammar: [+-]?digits(/digits)?
    std::size_t pos = 0;
    auto fail = [&] { throw ParseError("invalid rational: '" + std::string(text) + "'"); };
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    std::size_t num_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == num_start) fail();
    if (pos < text.size()) {
        if (text[pos] != '/') fail();
        ++pos;
        std::size_t den_start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == den_start || pos != text.size()) fail();
    }
    std::string s(text);
    if (s[0] == '+') s.erase(0, 1);
    mpq_class v;
    if (v.set_str(s, 10) != 0) fail();
    if (v.get_den() == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    v.canonicalize();
    Rational r;
    r.v_ = v;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZeroError{};
    v_ /= o.v_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

long Rational::to_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p())
        throw OverflowError("rational does not fit a machine integer: " + str());
    return v_.get_num().get_si();
}

mpz_class Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

std::size_t Rational::bit_length() const {
    const std::size_t nb = mpz_sizeinbase(v_.get_num().get_mpz_t(), 2);
    const std::size_t db = mpz_sizeinbase(v_.get_den().get_mpz_t(), 2);
    return nb > db ? nb : db;
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pochhammer(const Rational& x, unsigned long n) {
    Rational acc(1);
    Rational t = x;
    for (unsigned long j = 0; j < n; ++j) {
        acc *= t;
        if (acc.is_zero()) return acc;
        t += Rational(1);
    }
    return acc;
}

Rational factorial(unsigned long n) {
    if (n > 1000000) throw OverflowError("factorial argument too large");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational pow_int(const Rational& x, long e) {
    if (e == 0) return Rational(1);
    if (x.is_zero()) {
        if (e < 0) throw DivisionByZeroError{};
        return Rational(0);
    }
    const unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), x.numerator().get_mpz_t(), a);
    mpz_pow_ui(den.get_mpz_t(), x.denominator().get_mpz_t(), a);
    mpq_class v(num, den);
    if (e < 0) v = 1 / v;
    v.canonicalize();
    return Rational(v);
}

} // namespace mop
