#include "mop/oracle.hpp"

#include <gmpxx.h>

#include <mutex>
#include <stdexcept>

namespace mop {

GammaScaled MomentTable::value(std::size_t i, unsigned long k) const {
    const auto key = std::make_pair(i, k);
    {
        std::shared_lock lock(mutex_);
        if (auto it = values_.find(key); it != values_.end()) return it->second;
    }
    GammaScaled v = moment(ws_, i, k);
    std::unique_lock lock(mutex_);
    return values_.emplace(key, std::move(v)).first->second;
}

Rational MomentTable::ratio(std::size_t i, unsigned long k) const {
    const auto key = std::make_pair(i, k);
    {
        std::shared_lock lock(mutex_);
        if (auto it = ratios_.find(key); it != ratios_.end()) return it->second;
    }
    Rational r = (value(i, k) * value(i, 0).inverse()).rational_value();
    std::unique_lock lock(mutex_);
    return ratios_.emplace(key, std::move(r)).first->second;
}

std::vector<Rational> LinearSystem::solve() const {
    const std::size_t n = matrix.size();
    if (rhs.size() != n) throw std::invalid_argument("rhs size must match matrix order");
    for (const auto& row : matrix)
        if (row.size() != n) throw std::invalid_argument("matrix must be square");
    if (n == 0) return {};

    // clear denominators, one scaling factor per equation
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class lcm(1);
        for (std::size_t j = 0; j < n; ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), matrix[i][j].denominator().get_mpz_t());
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), rhs[i].denominator().get_mpz_t());
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = matrix[i][j].numerator() * mpz_class(lcm / matrix[i][j].denominator());
        m[i][n] = rhs[i].numerator() * mpz_class(lcm / rhs[i].denominator());
    }

    mpz_class prev(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) throw SingularSystemError("singular moment matrix (pivot column " +
                                                std::to_string(k) + ")");
        if (piv != k) std::swap(m[piv], m[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j) {
                mpz_class t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                mpz_class q, rem;
                mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                if (rem != 0) throw std::logic_error("fraction-free elimination lost exactness");
                m[i][j] = q;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }

    std::vector<Rational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational acc{Rational(m[i][n])};
        for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(m[i][j]) * x[j];
        acc /= Rational(m[i][i]);
        x[i] = acc;
    }
    return x;
}

TypeIVector oracle_type1_solve(const WeightSystem& ws, const MultiIndex& n) {
    const std::size_t p = weight_count(ws);
    if (n.p() != p) throw std::invalid_argument("multi-index length must equal p");
    const unsigned N = n.total();
    if (N == 0) throw std::invalid_argument("|n| must be at least 1");

    MomentTable table(ws);
    std::vector<std::pair<std::size_t, unsigned long>> cols;
    for (std::size_t i = 0; i < p; ++i)
        for (unsigned long l = 0; l < n[i]; ++l) cols.emplace_back(i, l);

    // unknown u_{i,l} = c_{i,l} * moment(i,0), so every entry is the rational
    // moment ratio and the system stays over Q
    LinearSystem sys;
    sys.matrix.assign(N, std::vector<Rational>(N, Rational(0)));
    sys.rhs.assign(N, Rational(0));
    sys.rhs[N - 1] = Rational(1);
    for (unsigned long j = 0; j < N; ++j)
        for (std::size_t c = 0; c < cols.size(); ++c)
            sys.matrix[j][c] = table.ratio(cols[c].first, j + cols[c].second);

    const std::vector<Rational> u = sys.solve();

    std::vector<PolyComponent> comps(p);
    std::size_t c = 0;
    for (std::size_t i = 0; i < p; ++i) {
        if (n[i] == 0) {
            comps[i] = PolyComponent::zero();
            continue;
        }
        std::vector<Rational> coeffs(u.begin() + c, u.begin() + c + n[i]);
        c += n[i];
        while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
        if (coeffs.empty())
            comps[i] = PolyComponent::zero();
        else
            comps[i] = PolyComponent{table.value(i, 0).inverse(), std::move(coeffs)};
    }
    return TypeIVector(ws, n, std::move(comps));
}

Polynomial oracle_type2_solve(const WeightSystem& ws, const MultiIndex& n) {
    const std::size_t p = weight_count(ws);
    if (n.p() != p) throw std::invalid_argument("multi-index length must equal p");
    const unsigned N = n.total();

    MomentTable table(ws);
    LinearSystem sys;
    sys.matrix.assign(N, std::vector<Rational>(N, Rational(0)));
    sys.rhs.assign(N, Rational(0));
    std::size_t row = 0;
    for (std::size_t i = 0; i < p; ++i) {
        for (unsigned long j = 0; j < n[i]; ++j, ++row) {
            for (unsigned long t = 0; t < N; ++t) sys.matrix[row][t] = table.ratio(i, j + t);
            sys.rhs[row] = -table.ratio(i, j + N);
        }
    }

    std::vector<Rational> coeffs = sys.solve();
    coeffs.push_back(Rational(1)); // monic
    return Polynomial(std::move(coeffs));
}

Rational biorthogonal_check(const Polynomial& B, const TypeIVector& v) {
    return type1_pairing(v, B);
}

} // namespace mop
