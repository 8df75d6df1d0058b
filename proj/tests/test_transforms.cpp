#include "common.hpp"

using namespace orbitq;
using namespace orbitq::test;

namespace {

GroupFunction random_function(const GridPtr& G, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd;
    GroupFunction f = GroupFunction::zero(G);
    for (int i = 0; i < f.size(); ++i) f.values[i] = cplx(nd(rng), nd(rng));
    return f;
}

}  // namespace

TEST_SUITE("transforms") {

TEST_CASE("F_KO inverse is an isometry and a right inverse") {
    const auto ctx = small_context();
    const GroupFunction g = random_function(ctx->orbit_grid(), 1);
    for (const FkoMode m : {FkoMode::Fft, FkoMode::Direct}) {
        const GroupFunction gi = fourier_kirillov_inv(*ctx, g, m);
        CHECK(std::abs(norm(gi) - norm(g)) <= 1e-10 * norm(g));
        CHECK(rel(fourier_kirillov(*ctx, gi, m), g) <= 1e-10);
    }
    const GroupFunction f = random_function(ctx->exp_grid(), 2);
    const auto P = [&](const GroupFunction& x) {
        return fourier_kirillov_inv(*ctx, fourier_kirillov(*ctx, x, FkoMode::Fft), FkoMode::Fft);
    };
    CHECK(rel(P(P(f)), P(f)) <= 1e-10);
    CHECK(norm(P(f)) <= norm(f) * (1 + 1e-12));
}

TEST_CASE("F_KO of zero and of a Gaussian") {
    const auto ctx = medium_context();
    CHECK(norm(fourier_kirillov(*ctx, GroupFunction::zero(ctx->exp_grid()), FkoMode::Fft)) == 0.0);
    const auto gauss = sample_algebra(ctx->exp_grid(), [](const AlgebraVec& X) {
        return cplx(std::exp(-kPi * (X[0] * X[0] + X[1] * X[1])) / std::sqrt(lambda(X[0])));
    });
    const GroupFunction G = fourier_kirillov(*ctx, gauss, FkoMode::Fft);
    const GridPtr& O = ctx->orbit_grid();
    double err = 0.0;
    for (int p = 0; p < O->size(); ++p) {
        const GroupPoint& y = O->point(p);
        if (y[0] < 0.3 || y[0] > 2.5 || std::abs(y[1]) > 2.5) continue;
        err = std::max(err, std::abs(G.values[p] - std::sqrt(y[0]) * std::exp(-kPi * (y[0] * y[0] + y[1] * y[1]))));
    }
    CHECK(err <= 1e-6 * std::sqrt(0.5 / kPi));
}

TEST_CASE("fft and direct modes agree") {
    const auto ctx = small_context();
    const auto h = sample_algebra(ctx->exp_grid(), [](const AlgebraVec& X) {
        return std::exp(-2.0 * X[0] * X[0] - 0.5 * X[1] * X[1]) * std::polar(1.0, -2 * kPi * 0.7 * X[1]);
    });
    CHECK(rel(fourier_kirillov(*ctx, h, FkoMode::Direct), fourier_kirillov(*ctx, h, FkoMode::Fft)) <= 1e-10);
    const GroupPoint g = ctx->orbit_grid()->point(40);
    const cplx at = fourier_kirillov_at(*ctx, h, kappa(ctx->descriptor(), g));
    CHECK(std::abs(at - fourier_kirillov(*ctx, h, FkoMode::Fft).values[40]) <= 1e-10 * norm(h));
    CHECK_THROWS_AS(fourier_kirillov_at(*ctx, h, DualVec{0.0, -1.0}), OrbitError);
}

TEST_CASE("conjugation lemma") {
    const auto ctx = small_context();
    const GridPtr& E = ctx->exp_grid();
    const auto h = sample_algebra(E, [](const AlgebraVec& X) {
        return std::exp(-2.0 * X[0] * X[0] - 0.5 * X[1] * X[1]) *
               (std::polar(1.0, -2 * kPi * 0.7 * X[1] + 0.4 * X[0]) + 0.5 * std::polar(1.0, 2 * kPi * 0.5 * X[1]));
    });
    GroupFunction hc = involution(h);
    for (int i = 0; i < hc.size(); ++i) hc.values[i] *= std::sqrt(E->delta(i));
    CHECK(rel(fourier_kirillov(*ctx, hc, FkoMode::Fft), fourier_kirillov(*ctx, h.conj(), FkoMode::Fft).conj()) <= 1e-10);
}

TEST_CASE("F_W reduces to the wavelet transform") {
    const auto ctx = small_context();
    const CarrierPtr c = ctx->rep().carrier();
    const StateVector psi = gaussian_log(c, {-0.6, 0.3, 2.0}), phi = gaussian_log(c, {-0.8, 0.3});
    const GroupFunction w = wavelet(ctx->rep(), psi, phi, ctx->exp_grid());
    CHECK(rel(fourier_wigner(*ctx, rank_one(psi, ctx->rep().apply_duflo(-1, phi))), w) <= 1e-10);
    CHECK(norm(fourier_wigner(*ctx, KernelOperator::zero(c))) == 0.0);
    CHECK(hs_norm(fourier_wigner_inv(*ctx, GroupFunction::zero(ctx->exp_grid()))) == 0.0);
}

TEST_CASE("F_W isometry and left inverse on interior Gaussians") {
    const auto ctx = medium_context();
    const CarrierPtr c = ctx->rep().carrier();
    const KernelOperator A = rank_one(gaussian_log(c, {0.1, 0.3, 2.0}), gaussian_log(c, {-0.1, 0.3})) +
                             rank_one(gaussian_log(c, {0.0, 0.35}), gaussian_log(c, {0.2, 0.3, -1.0})) * cplx(0.0, 0.7);
    const GroupFunction h = fourier_wigner(*ctx, A);
    CHECK(std::abs(norm(h) - hs_norm(A)) <= 1e-2 * hs_norm(A));
    CHECK(rel(fourier_wigner_inv(*ctx, h), A) <= 1e-2);
}

TEST_CASE("kernel route agrees with the trace route") {
    const auto ctx = small_context();
    const CarrierPtr c = ctx->rep().carrier();
    const KernelOperator A = rank_one(gaussian_log(c, {-0.6, 0.3, 2.0}), gaussian_log(c, {-0.8, 0.3}));
    CHECK(rel(fourier_wigner_kernel(ctx->rep(), sampled_kernel(A), ctx->exp_grid()), fourier_wigner(*ctx, A)) <= 1e-8);
}

TEST_CASE("F_W inverse intertwines right translation") {
    const auto ctx = medium_context();
    const GroupDescriptor& d = ctx->descriptor();
    const auto fn = [&](const GroupPoint& g) {
        const AlgebraVec X = log(d, g);
        return std::exp(-2.0 * X[0] * X[0] - 0.5 * (X[1] - 0.2) * (X[1] - 0.2)) * std::polar(1.0, -2 * kPi * X[1]);
    };
    const GroupPoint x{std::exp(2 * ctx->rep().carrier()->axes()[0].step), 0.25};
    const KernelOperator lhs = compose(ctx->rep().pi(x), fourier_wigner_inv(*ctx, sample(ctx->exp_grid(), fn)));
    const KernelOperator rhs = fourier_wigner_inv(*ctx, sample(ctx->exp_grid(), [&](const GroupPoint& g) { return fn(mul(d, g, x)); }));
    CHECK(rel(lhs, rhs) <= 1e-2);
}

TEST_CASE("orbit lattice keeps the positive orbit half") {
    const auto ctx = small_context();
    const GridPtr& O = ctx->orbit_grid();
    for (int p = 0; p < O->size(); ++p) CHECK(O->point(p)[0] > 0.0);
    const TransformContext minus = transform_tier(0, OrbitSign::Minus);
    for (int p = 0; p < minus.orbit_grid()->size(); ++p) CHECK(minus.orbit_grid()->point(p)[0] > 0.0);
    CHECK(O->size() == 33 * 16);
}

TEST_CASE("shearlet dual path") {
    const Representation R(GroupDescriptor::shearlet(), shearlet_carrier());
    const GridPtr G = GroupGrid::exponential(R.descriptor(), {{-0.75, 0.375, 5}, {-0.75, 0.375, 5}, {-0.75, 0.375, 5}, {-0.75, 0.375, 5}});
    const StateVector psi = gaussian_log(R.carrier(), {0.0, 0.5, 1.0, 0.3, 0.8});
    const StateVector phi = gaussian_log(R.carrier(), {0.2, 0.5, 0.0, -0.2, 0.8});
    const KernelOperator A = rank_one(psi, phi);
    CHECK(rel(fourier_wigner_kernel(R, sampled_kernel(A), G), fourier_wigner(R, A, G)) <= 1e-8);
}

}
