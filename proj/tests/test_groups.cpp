#include "common.hpp"

using namespace orbitq;
using namespace orbitq::test;

TEST_SUITE("groups") {

TEST_CASE("group axioms hold on seeded samples") {
    std::mt19937_64 rng(1);
    for (const auto& d : {GroupDescriptor::affine(), GroupDescriptor::shearlet(), GroupDescriptor::heisenberg(),
                          GroupDescriptor::affine(OrbitSign::Minus)}) {
        CAPTURE(to_string(d.name));
        const GroupPoint e = identity(d);
        for (int i = 0; i < 200; ++i) {
            const GroupPoint g = random_point(d, rng), h = random_point(d, rng), k = random_point(d, rng);
            CHECK(mul(d, mul(d, g, h), k).max_abs_diff(mul(d, g, mul(d, h, k))) < 1e-12);
            CHECK(mul(d, g, inv(d, g)).max_abs_diff(e) < 1e-12);
            CHECK(mul(d, e, g).max_abs_diff(g) == 0.0);
        }
    }
}

TEST_CASE("affine product and inverse closed forms") {
    const auto d = GroupDescriptor::affine();
    const GroupPoint g = mul(d, GroupPoint{2.0, 1.0}, GroupPoint{3.0, -1.0});
    CHECK(g[0] == doctest::Approx(6.0));
    CHECK(g[1] == doctest::Approx(-2.0 + 1.0));
    const GroupPoint gi = inv(d, GroupPoint{2.0, 1.0});
    CHECK(gi[0] == doctest::Approx(0.5));
    CHECK(gi[1] == doctest::Approx(-0.5));
}

TEST_CASE("exp and log are inverse") {
    std::mt19937_64 rng(2);
    for (const auto& d : {GroupDescriptor::affine(), GroupDescriptor::shearlet(), GroupDescriptor::heisenberg()}) {
        for (int i = 0; i < 200; ++i) {
            const AlgebraVec X = random_algebra(d, rng, 3.0);
            CHECK(log(d, exp(d, X)).max_abs_diff(X) < 1e-12);
        }
    }
    const auto a = GroupDescriptor::affine();
    const GroupPoint g = exp(a, AlgebraVec{1.0, 1.0});
    CHECK(g[0] == doctest::Approx(std::exp(1.0)));
    CHECK(g[1] == doctest::Approx(std::exp(1.0) - 1.0));
}

TEST_CASE("Ad and K are homomorphisms and the pairing is invariant") {
    std::mt19937_64 rng(3);
    for (const auto& d : {GroupDescriptor::affine(), GroupDescriptor::shearlet(), GroupDescriptor::heisenberg()}) {
        for (int i = 0; i < 100; ++i) {
            const GroupPoint g = random_point(d, rng), h = random_point(d, rng);
            CHECK((adjoint(d, mul(d, g, h)) - adjoint(d, g) * adjoint(d, h)).cwiseAbs().maxCoeff() < 1e-12);
            DualVec Y = DualVec::zeros(d.dim);
            for (int k = 0; k < d.dim; ++k) Y[k] = 0.3 * (k + 1);
            CHECK(coadjoint(d, mul(d, g, h), Y).max_abs_diff(coadjoint(d, g, coadjoint(d, h, Y))) < 1e-12);
            const AlgebraVec X = random_algebra(d, rng);
            CHECK(std::abs(pairing(coadjoint(d, g, Y), apply(adjoint(d, g), X)) - pairing(Y, X)) < 1e-12);
        }
    }
}

TEST_CASE("theta matches the determinant formula and the modular relation") {
    std::mt19937_64 rng(4);
    for (const auto& d : {GroupDescriptor::affine(), GroupDescriptor::shearlet(), GroupDescriptor::heisenberg()}) {
        for (int i = 0; i < 100; ++i) {
            const AlgebraVec X = random_algebra(d, rng, 3.0);
            const double t = theta(d, X);
            CHECK(std::abs(theta_by_determinant(d, X) - t) <= 1e-10 * t);
            CHECK(std::abs(modular(d, exp(d, X)) * t - theta(d, -X)) <= 1e-12 * theta(d, -X));
        }
    }
    const auto a = GroupDescriptor::affine();
    CHECK(theta(a, AlgebraVec{1.0, 0.0}) == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-14));
    CHECK(theta(a, AlgebraVec{-1.0, 0.0}) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-14));
    CHECK(theta(a, AlgebraVec{0.0, 5.0}) == 1.0);
    CHECK(theta(GroupDescriptor::heisenberg(), AlgebraVec{1.0, 2.0, 3.0}) == 1.0);
}

TEST_CASE("lambda is continuous at zero") {
    CHECK(std::abs(lambda(1e-9) - 1.0) < 1e-8);
    CHECK(std::abs(lambda(-1e-9) - 1.0) < 1e-8);
    CHECK(lambda(0.0) == 1.0);
    CHECK(lambda(2.0) == doctest::Approx(std::expm1(2.0) / 2.0));
}

TEST_CASE("modular function") {
    CHECK(modular(GroupDescriptor::affine(), GroupPoint{2.0, 7.0}) == doctest::Approx(0.5));
    CHECK(modular(GroupDescriptor::heisenberg(), GroupPoint{1.0, 2.0, 3.0}) == 1.0);
    std::mt19937_64 rng(5);
    const auto s = GroupDescriptor::shearlet();
    for (int i = 0; i < 50; ++i) {
        const GroupPoint g = random_point(s, rng), h = random_point(s, rng);
        CHECK(modular(s, mul(s, g, h)) == doctest::Approx(modular(s, g) * modular(s, h)).epsilon(1e-13));
        CHECK(adjoint(s, g).determinant() * modular(s, g) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("kappa identifies the group with the orbit") {
    std::mt19937_64 rng(6);
    for (const auto& d : {GroupDescriptor::affine(), GroupDescriptor::affine(OrbitSign::Minus),
                          GroupDescriptor::shearlet(), GroupDescriptor::shearlet(OrbitSign::Minus)}) {
        for (int i = 0; i < 100; ++i) {
            const GroupPoint g = random_point(d, rng);
            const DualVec Y = kappa(d, g);
            CHECK(on_orbit(d, Y));
            CHECK(Y.max_abs_diff(coadjoint(d, inv(d, g), d.F)) < 1e-12);
            CHECK(kappa_inv(d, Y).max_abs_diff(g) < 1e-12);
        }
    }
    const auto a = GroupDescriptor::affine();
    const DualVec Y = kappa(a, GroupPoint{2.0, 0.5});
    CHECK(Y[0] == doctest::Approx(-0.5));
    CHECK(Y[1] == doctest::Approx(2.0));
}

TEST_CASE("symplectic pairing on the affine orbit") {
    const auto a = GroupDescriptor::affine();
    const GroupPoint g{1.5, -0.4};
    const AlgebraVec X{0.3, 0.7};
    CHECK(pairing(kappa(a, g), X) == doctest::Approx(1.5 * 0.7 - (-0.4) * 0.3));
    const auto m = GroupDescriptor::affine(OrbitSign::Minus);
    CHECK(pairing(kappa(m, g), X) == doctest::Approx(-(1.5 * 0.7 - (-0.4) * 0.3)));
}

TEST_CASE("pfaffian of the base covectors") {
    CHECK(pfaffian(GroupDescriptor::affine(), GroupDescriptor::affine().F) == doctest::Approx(1.0));
    CHECK(std::abs(pfaffian(GroupDescriptor::shearlet(), GroupDescriptor::shearlet().F)) == doctest::Approx(1.0));
    CHECK_THROWS_AS(pfaffian(GroupDescriptor::heisenberg(), GroupDescriptor::heisenberg().F), GroupError);
}

TEST_CASE("invalid inputs are rejected") {
    const auto a = GroupDescriptor::affine();
    CHECK_THROWS_AS(mul(a, GroupPoint{-1.0, 0.0}, GroupPoint{1.0, 0.0}), GroupError);
    CHECK_THROWS_AS(mul(a, GroupPoint{1.0, 0.0, 0.0}, GroupPoint{1.0, 0.0}), GroupError);
    CHECK_THROWS_AS(inv(a, GroupPoint{0.0, 1.0}), GroupError);
    CHECK_THROWS_AS(kappa_inv(a, DualVec{0.0, -1.0}), OrbitError);
    CHECK_FALSE(on_orbit(a, DualVec{0.0, -1.0}));
    CHECK_FALSE(on_orbit(GroupDescriptor::heisenberg(), DualVec{0.0, 0.0, 1.0}));
    CHECK_FALSE(GroupDescriptor::heisenberg().quantizable());
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(inv(a, GroupPoint{1.0, nan}), GroupError);
}

}
