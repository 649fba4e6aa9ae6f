#include <doctest.h>

#include <random>

#include "mop/jacobi_pineiro.hpp"
#include "mop/oracle.hpp"
#include "mop/param_gen.hpp"
#include "support.hpp"

using namespace mop;

TEST_SUITE("jacobi-pineiro") {

TEST_CASE("admissibility") {
    CHECK_THROWS_AS(JPWeightSystem({Rational(0), Rational(1)}, Rational(0)), ATSystemError);
    CHECK_THROWS_AS(JPWeightSystem({Rational(1, 2), Rational(-5, 2)}, Rational(0)), ATSystemError);
    CHECK_THROWS_AS(JPWeightSystem({Rational(-1)}, Rational(0)), ATSystemError);
    CHECK_THROWS_AS(JPWeightSystem({Rational(0)}, Rational(-1)), ATSystemError);
    CHECK_THROWS_AS(JPWeightSystem({}, Rational(0)), ATSystemError);
    CHECK_NOTHROW(JPWeightSystem({Rational(0), Rational(1, 2)}, Rational(-1, 2)));
}

TEST_CASE("moments") {
    const JPWeightSystem unit({Rational(0)}, Rational(0));
    CHECK(unit.moment(0, 3).rational_value() == Rational(1, 4)); // integral of x^3 on [0,1]

    const JPWeightSystem ws({Rational(1, 2)}, Rational(1));
    CHECK(ws.moment_ratio(0, 2) == Rational(5, 21)); // (3/2)(5/2)/((7/2)(9/2))
    CHECK((ws.moment(0, 2) * ws.moment(0, 0).inverse()).rational_value() == Rational(5, 21));

    const JPWeightSystem b3({Rational(0)}, Rational(3));
    CHECK(b3.moment(0, 0).rational_value() == Rational(1, 4)); // 1/(beta+1)
}

TEST_CASE("p=1 normalization is the inverse Beta integral") {
    const JPWeightSystem ws({Rational(1, 3)}, Rational(1, 2));
    const MultiIndex n({1});
    const PolyComponent c = jp_type1(ws, n, 0);
    REQUIRE(c.degree() == 0);
    const GammaScaled expected = GammaScaled::gamma(Rational(1, 3) + Rational(1, 2) + Rational(2)) /
                                 GammaScaled::gamma(Rational(3, 2)) /
                                 GammaScaled::gamma(Rational(4, 3));
    CHECK(value_equal(c.monomial_coeff(0), expected));
    CHECK(type1_equal(jp_type1_vector(ws, n), oracle_type1_solve(WeightSystem(ws), n)));
}

TEST_CASE("p=2 constants, frozen from the 2x2 moment solve") {
    const JPWeightSystem ws({Rational(0), Rational(1, 2)}, Rational(0));
    const MultiIndex n({1, 1});
    const TypeIVector v = jp_type1_vector(ws, n);
    CHECK(v.component(0).monomial_coeff(0).rational_value() == Rational(-10));
    CHECK(v.component(1).monomial_coeff(0).rational_value() == Rational(15));
    CHECK(jp_pairing(v, 0) == Rational(0)); // -10*1 + 15*(2/3)
    CHECK(jp_pairing(v, 1) == Rational(1)); // -10*(1/2) + 15*(2/5)
    CHECK(type1_equal(v, oracle_type1_solve(WeightSystem(ws), n)));
}

TEST_CASE("general formula specializes to the p=2 display") {
    Rng rng(61);
    for (int t = 0; t < 30; ++t) {
        const JPWeightSystem ws = random_jp_system(rng, 2);
        std::uniform_int_distribution<unsigned> deg(1, 3);
        const MultiIndex n({deg(rng), deg(rng)});
        for (std::size_t i = 0; i < 2; ++i) {
            const PolyComponent general = jp_type1(ws, n, i);
            const PolyComponent display = testsupport::p2_display_jp(
                ws.alpha(0), ws.alpha(1), ws.beta(), n[0], n[1], i);
            CHECK_MESSAGE(testsupport::components_equal(general, display),
                          "i=" << i << " n=" << n.str());
        }
    }
}

TEST_CASE("orthonormality sweep, small") {
    Rng rng(67);
    for (std::size_t p : {std::size_t(2), std::size_t(3)}) {
        const JPWeightSystem ws = random_jp_system(rng, p);
        for (const MultiIndex& n : MultiIndex::lattice(p, 5)) {
            const TypeIVector v = jp_type1_vector(ws, n);
            for (unsigned long j = 0; j < n.total(); ++j) {
                const Rational expected(j + 1 == n.total() ? 1 : 0);
                CHECK_MESSAGE(jp_pairing(v, j) == expected, "n=" << n.str() << " j=" << j);
            }
            CHECK(type1_equal(v, oracle_type1_solve(WeightSystem(ws), n)));
        }
    }
}

TEST_CASE("degree bound is attained") {
    Rng rng(71);
    for (int t = 0; t < 20; ++t) {
        const JPWeightSystem ws = random_jp_system(rng, 3);
        const MultiIndex n = random_index(rng, 3, 1 + (t % 6));
        for (std::size_t i = 0; i < 3; ++i) {
            const PolyComponent c = jp_type1(ws, n, i);
            CHECK(c.degree() == static_cast<long>(n[i]) - 1);
        }
    }
}

TEST_CASE("zero components for zero index entries") {
    const JPWeightSystem ws({Rational(0), Rational(1, 2)}, Rational(1, 3));
    const MultiIndex n({0, 2});
    const TypeIVector v = jp_type1_vector(ws, n);
    CHECK(v.component(0).is_zero());
    CHECK(v.component(1).degree() == 1);
    CHECK(jp_pairing(v, 0) == Rational(0));
    CHECK(jp_pairing(v, 1) == Rational(1));
    CHECK(type1_equal(v, oracle_type1_solve(WeightSystem(ws), n)));
}

TEST_CASE("removable singularity at alpha+beta+|n| = 0") {
    // alpha_1 + beta + 1 = 0 exactly; the folded prefactor must stay finite
    const JPWeightSystem ws({Rational(-1, 2), Rational(1, 3)}, Rational(-1, 2));
    const MultiIndex n({1, 0});
    const TypeIVector v = jp_type1_vector(ws, n);
    CHECK(jp_pairing(v, 0) == Rational(1));
    CHECK(type1_equal(v, oracle_type1_solve(WeightSystem(ws), n)));
}

TEST_CASE("pairing against a full polynomial picks out the leading coefficient") {
    Rng rng(73);
    for (int t = 0; t < 20; ++t) {
        const JPWeightSystem ws = random_jp_system(rng, 2);
        const MultiIndex n = random_index(rng, 2, 2 + (t % 4));
        const TypeIVector v = jp_type1_vector(ws, n);
        const Polynomial q = random_polynomial(rng, n.total() - 1);
        CHECK(type1_pairing(v, q) == q.leading());
    }
}

} // TEST_SUITE
