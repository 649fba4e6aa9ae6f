#include <doctest.h>

#include <random>

#include "mop/laguerre.hpp"
#include "mop/oracle.hpp"
#include "mop/param_gen.hpp"
#include "support.hpp"

using namespace mop;

TEST_SUITE("laguerre") {

TEST_CASE("moments") {
    const LaguerreWeightSystem ws({Rational(0), Rational(1, 2)});
    CHECK(ws.moment(0, 3).rational_value() == Rational(6)); // Gamma(4)
    CHECK(ws.moment(0, 0).rational_value() == Rational(1));
    CHECK(ws.moment_ratio(1, 2) == Rational(15, 4)); // (3/2)(5/2)
    CHECK((ws.moment(1, 2) * ws.moment(1, 0).inverse()).rational_value() == Rational(15, 4));
}

TEST_CASE("p=2 constants, frozen from the 2x2 moment solve") {
    // conditions: c1 + c2 Gamma(3/2) = 0, c1 + c2 Gamma(5/2) = 1
    // give c1 = -2 and c2 = 2/Gamma(3/2)
    const LaguerreWeightSystem ws({Rational(0), Rational(1, 2)});
    const MultiIndex n({1, 1});
    const TypeIVector v = lag_type1_vector(ws, n);
    CHECK(v.component(0).monomial_coeff(0).rational_value() == Rational(-2));
    const GammaScaled expected =
        GammaScaled(Rational(2)) * GammaScaled::gamma(Rational(3, 2)).inverse();
    CHECK(value_equal(v.component(1).monomial_coeff(0), expected));
    CHECK(lag_pairing(v, 0) == Rational(0));
    CHECK(lag_pairing(v, 1) == Rational(1)); // -2*Gamma(2) + (2/Gamma(3/2))*Gamma(5/2) = -2 + 3
    CHECK(type1_equal(v, oracle_type1_solve(WeightSystem(ws), n)));
}

TEST_CASE("n_i = 1 components are constants") {
    const LaguerreWeightSystem ws({Rational(1, 4), Rational(3, 2), Rational(-1, 3)});
    const MultiIndex n({1, 1, 1});
    for (std::size_t i = 0; i < 3; ++i) {
        const PolyComponent c = lag_type1(ws, n, i);
        CHECK(c.degree() == 0);
        CHECK(c.coeffs.size() == 1);
        CHECK(c.coeffs[0] == Rational(1));
    }
}

TEST_CASE("general formula specializes to the p=2 display") {
    Rng rng(79);
    for (int t = 0; t < 30; ++t) {
        const LaguerreWeightSystem ws = random_laguerre_system(rng, 2);
        std::uniform_int_distribution<unsigned> deg(1, 3);
        const MultiIndex n({deg(rng), deg(rng)});
        for (std::size_t i = 0; i < 2; ++i) {
            const PolyComponent general = lag_type1(ws, n, i);
            const PolyComponent display =
                testsupport::p2_display_lag(ws.alpha(0), ws.alpha(1), n[0], n[1], i);
            CHECK_MESSAGE(testsupport::components_equal(general, display),
                          "i=" << i << " n=" << n.str());
        }
    }
}

TEST_CASE("orthonormality sweep, small") {
    Rng rng(83);
    for (std::size_t p : {std::size_t(2), std::size_t(3)}) {
        const LaguerreWeightSystem ws = random_laguerre_system(rng, p);
        for (const MultiIndex& n : MultiIndex::lattice(p, 5)) {
            const TypeIVector v = lag_type1_vector(ws, n);
            for (unsigned long j = 0; j < n.total(); ++j) {
                const Rational expected(j + 1 == n.total() ? 1 : 0);
                CHECK_MESSAGE(lag_pairing(v, j) == expected, "n=" << n.str() << " j=" << j);
            }
            CHECK(type1_equal(v, oracle_type1_solve(WeightSystem(ws), n)));
        }
    }
}

TEST_CASE("coefficientwise limit, exact") {
    const LaguerreWeightSystem ws({Rational(0), Rational(1, 2)});
    for (const MultiIndex& n : MultiIndex::lattice(2, 4)) {
        for (std::size_t i = 0; i < 2; ++i) {
            const CoefficientLimitReport rep = lag_limit_coefficientwise(ws, n, i);
            CHECK_MESSAGE(rep.pass, "n=" << n.str() << " i=" << i << " " << rep.detail);
        }
    }
}

TEST_CASE("floating limit sweep decays like 1/beta") {
    const LaguerreWeightSystem ws({Rational(0), Rational(1, 2)});
    const MultiIndex n({2, 1});
    const std::vector<Rational> betas{Rational(10), Rational(100), Rational(1000)};
    const std::vector<double> dev = lag_limit_check(ws, n, 0, Rational(1), betas, 128);
    REQUIRE(dev.size() == 3);
    CHECK(dev[0] > dev[1]);
    CHECK(dev[1] > dev[2]);
    CHECK(dev[0] / dev[1] == doctest::Approx(10.0).epsilon(0.5));
    CHECK(dev[1] / dev[2] == doctest::Approx(10.0).epsilon(0.5));
}

TEST_CASE("scaled constants agree exactly at every beta") {
    // all n_i = 1: the scaled coefficient has no beta dependence left
    const LaguerreWeightSystem ws({Rational(0), Rational(1, 2)});
    const MultiIndex n({1, 1});
    const std::vector<double> dev =
        lag_limit_check(ws, n, 0, Rational(2), {Rational(10), Rational(100)}, 128);
    for (double d : dev) CHECK(d < 1e-30);
}

TEST_CASE("floating limit guards") {
    const LaguerreWeightSystem ws({Rational(0), Rational(1, 2)});
    const MultiIndex n({1, 1});
    CHECK_THROWS_AS(lag_limit_check(ws, n, 0, Rational(-1), {Rational(10)}, 128),
                    std::invalid_argument);
    CHECK_THROWS_AS(lag_limit_check(ws, n, 0, Rational(1), {Rational(0)}, 128),
                    std::invalid_argument);
}

} // TEST_SUITE
