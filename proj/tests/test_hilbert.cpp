#include "common.hpp"

using namespace orbitq;
using namespace orbitq::test;

namespace {

StateVector random_state(const CarrierPtr& c, std::mt19937_64& rng) {
    std::normal_distribution<double> nd;
    VecC v(c->size());
    for (int i = 0; i < c->size(); ++i) v[i] = cplx(nd(rng), nd(rng));
    return {c, v};
}

KernelOperator random_operator(const CarrierPtr& c, std::mt19937_64& rng) {
    std::normal_distribution<double> nd;
    MatC m(c->size(), c->size());
    for (int i = 0; i < c->size(); ++i)
        for (int j = 0; j < c->size(); ++j) m(i, j) = cplx(nd(rng), nd(rng));
    return {c, m};
}

}  // namespace

TEST_SUITE("hilbert") {

TEST_CASE("inner product on a 4-point log grid") {
    const auto c = CarrierGrid::log_axis(0.0, 0.5, 4);
    const StateVector one(c, VecC::Ones(4));
    CHECK(inner(one, one).real() == doctest::Approx(2.0));
    CHECK(norm(one) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("inner product is sesquilinear") {
    std::mt19937_64 rng(1);
    const auto c = CarrierGrid::log_axis(-1.0, 0.1, 20);
    const StateVector a = random_state(c, rng), b = random_state(c, rng), d = random_state(c, rng);
    CHECK(std::abs(inner(a, b) - std::conj(inner(b, a))) < 1e-12);
    const cplx z(0.3, -1.2);
    CHECK(std::abs(inner(a * z + d, b) - (z * inner(a, b) + inner(d, b))) < 1e-12);
    CHECK(std::abs(inner(a, b * z) - std::conj(z) * inner(a, b)) < 1e-12);
}

TEST_CASE("Gaussian norm converges against a refined grid") {
    const auto n2 = [](double dt) {
        const auto c = CarrierGrid::log_axis(-6.0, dt, static_cast<int>(std::lround(12.0 / dt)));
        VecC v(c->size());
        for (int i = 0; i < c->size(); ++i) v[i] = std::exp(-std::pow(c->coord(i, 0), 2));
        return std::pow(norm(StateVector(c, v)), 2);
    };
    CHECK(std::abs(n2(0.125) - n2(0.0625)) <= 1e-6 * n2(0.0625));
    CHECK(n2(0.0625) == doctest::Approx(std::sqrt(kPi / 2)).epsilon(1e-10));
}

TEST_CASE("rank-one operators") {
    std::mt19937_64 rng(2);
    const auto c = CarrierGrid::log_axis(-1.0, 0.1, 20);
    const StateVector p = random_state(c, rng), q = random_state(c, rng);
    const KernelOperator R = rank_one(p, q);
    CHECK(std::abs(trace(R) - inner(p, q)) < 1e-12 * norm(p) * norm(q));
    CHECK(hs_norm(R) == doctest::Approx(norm(p) * norm(q)));
    CHECK(hs_inner(R, R).real() == doctest::Approx(std::pow(norm(p) * norm(q), 2)));
    CHECK((adjoint(R).matrix - rank_one(q, p).matrix).norm() == 0.0);
    const StateVector x = random_state(c, rng);
    CHECK((apply(R, x).values - p.values * inner(x, q)).norm() < 1e-12 * norm(p) * norm(q) * norm(x) * 10);
}

TEST_CASE("compose, trace and identity") {
    std::mt19937_64 rng(3);
    const auto c = CarrierGrid::log_axis(-1.0, 0.1, 16);
    const KernelOperator A = random_operator(c, rng), B = random_operator(c, rng);
    CHECK(rel(compose(A, KernelOperator::identity(c)), A) < 1e-14);
    CHECK(std::abs(trace(compose(A, B)) - trace(compose(B, A))) < 1e-10 * std::abs(trace(compose(A, B))));
    CHECK(std::abs(hs_inner(A, B) - trace(compose(A, adjoint(B)))) < 1e-10 * hs_norm(A) * hs_norm(B));
}

TEST_CASE("Hermitian eigendecomposition") {
    const auto c = CarrierGrid::log_axis(-2.0, 0.05, 80);
    const auto basis = hermite_basis(c, 3, 0.0, 0.3);
    const KernelOperator A = rank_one(basis[0], basis[0]) * cplx(2.0) + rank_one(basis[1], basis[1]);
    const auto e = eig_hermitian(A);
    CHECK(e[0].value == doctest::Approx(2.0));
    CHECK(e[1].value == doctest::Approx(1.0));
    CHECK(std::abs(e[2].value) < 1e-10);
    CHECK(std::abs(std::abs(inner(e[0].vector, basis[0])) - 1.0) < 1e-10);

    const StateVector g = gaussian_log(c, {0.1, 0.3});
    const auto eg = eig_hermitian(rank_one(g, g));
    CHECK(eg[0].value == doctest::Approx(std::pow(norm(g), 2)));
    CHECK(std::abs(eg[1].value) < 1e-10);

    std::mt19937_64 rng(4);
    const KernelOperator R = random_operator(c, rng);
    const KernelOperator H{c, (R.matrix + R.matrix.adjoint()) * cplx(0.5)};
    const auto eh = eig_hermitian(H);
    KernelOperator rebuilt = KernelOperator::zero(c);
    for (const auto& p : eh) rebuilt = rebuilt + rank_one(p.vector, p.vector) * cplx(p.value);
    CHECK(rel(rebuilt, H) <= 1e-8);
    for (std::size_t k = 1; k < eh.size(); ++k) CHECK(eh[k - 1].value >= eh[k].value);
    CHECK_THROWS_AS(eig_hermitian(R), GridError);
}

TEST_CASE("grid mismatches and shapes are rejected") {
    const auto c1 = CarrierGrid::log_axis(0.0, 0.1, 10);
    const auto c2 = CarrierGrid::log_axis(0.0, 0.1, 12);
    CHECK_THROWS_AS(inner(StateVector::zero(c1), StateVector::zero(c2)), GridError);
    CHECK_THROWS_AS(StateVector(c1, VecC::Zero(3)), GridError);
    CHECK_THROWS_AS(KernelOperator(c1, MatC::Zero(10, 9)), GridError);
    CHECK_THROWS_AS(CarrierGrid::log_axis(0.0, 0.1, 2000), GridError);
}

}
