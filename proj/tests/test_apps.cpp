#include "common.hpp"

using namespace orbitq;
using namespace orbitq::test;

namespace {

GroupFunction scalogram(const TransformContext& ctx, const StateVector& psi, const StateVector& phi) {
    GroupFunction s = wavelet(ctx.rep(), psi, phi, ctx.exp_grid());
    s.values = s.values.cwiseAbs2().cast<cplx>();
    return s;
}

}  // namespace

TEST_SUITE("apps") {

TEST_CASE("phase retrieval recovers a chirped Gaussian") {
    const auto ctx = medium_context();
    const CarrierPtr c = ctx->rep().carrier();
    const StateVector psi = gaussian_log(c, {0.1, 0.3, 2.4}), phi = gaussian_log(c, {0.0, 0.3});
    RetrievalConfig cfg;
    cfg.reference = phi;
    const RetrievalResult r = phase_retrieve(*ctx, scalogram(*ctx, psi, phi), phi, cfg, psi);
    REQUIRE(r.fidelity);
    CHECK(*r.fidelity >= 0.99);
    CHECK_FALSE(r.below_floor);
    CHECK(r.rank > 0);

    const RetrievalResult plain = phase_retrieve(*ctx, scalogram(*ctx, psi, phi), phi, cfg);
    CHECK_FALSE(plain.fidelity);
    CHECK(std::abs(fidelity(plain.psi, psi) - *r.fidelity) <= 1e-12);

    const StateVector rotated = psi * std::polar(1.0, 0.7);
    const RetrievalResult r2 = phase_retrieve(*ctx, scalogram(*ctx, rotated, phi), phi, cfg, rotated);
    CHECK(std::abs(*r2.fidelity - *r.fidelity) <= 1e-10);
}

TEST_CASE("phase retrieval error paths") {
    const auto ctx = small_context();
    const CarrierPtr c = ctx->rep().carrier();
    const StateVector phi = gaussian_log(c, {-0.8, 0.3});
    RetrievalConfig cfg;
    CHECK_THROWS_AS(phase_retrieve(*ctx, GroupFunction::zero(ctx->exp_grid()), phi, cfg), RetrievalError);
    cfg.regularization = 1.0;
    CHECK_THROWS_AS(phase_retrieve(*ctx, scalogram(*ctx, phi, phi), phi, cfg), RetrievalError);
    cfg.regularization = 1e-8;
    CHECK_THROWS_AS(phase_retrieve(*ctx, scalogram(*ctx, phi, phi), StateVector::zero(c), cfg), RetrievalError);
    CHECK_FALSE(window_admissible(ctx->rep(), StateVector::zero(c)));
    CHECK(window_admissible(ctx->rep(), phi));
}

TEST_CASE("fidelity") {
    const CarrierPtr c = small_context()->rep().carrier();
    const StateVector a = gaussian_log(c, {-0.8, 0.3, 1.0});
    CHECK(fidelity(a, a * std::polar(2.0, 1.3)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(fidelity(a, StateVector::zero(c)) == 0.0);
    const auto hb = hermite_basis(c, 2, -0.8, 0.3);
    CHECK(fidelity(hb[0], hb[1]) <= 1e-10);
}

TEST_CASE("nearest Wigner function") {
    const auto q = std::make_shared<const Quantizer>(small_context());
    const GalerkinQuantizer G(q, hermite_basis(q->carrier(), 4, -0.8, 0.3));
    const auto& b = G.basis();
    const GroupFunction f = G.dequantize(rank_one(b[0], b[0]) * cplx(2.0) + rank_one(b[1], b[1]));
    const WignerApprox wa = wigner_approx(G, f);
    CHECK(std::abs(wa.distance - 1.0) <= 1e-6);
    CHECK(wa.multiplicity == 1);
    CHECK(1.0 - fidelity(wa.minimizer, b[0]) <= 1e-6);
    CHECK(std::abs(norm(f - G.wigner(wa.minimizer)) - wa.distance) <= 1e-6);

    const StateVector ps = b[0] * cplx(0.8) + b[2] * cplx(0.0, 0.6);
    const WignerApprox wp = wigner_approx(G, G.wigner(ps));
    CHECK(wp.distance <= 1e-6);

    const WignerApprox neg = wigner_approx(G, G.dequantize(rank_one(b[0], b[0]) * cplx(-1.0)));
    CHECK(neg.distance == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(norm(neg.minimizer) <= 1e-6);

    const WignerApprox deg = wigner_approx(G, G.dequantize(rank_one(b[0], b[0]) + rank_one(b[1], b[1])));
    CHECK(deg.multiplicity == 2);
}

TEST_CASE("wavelet images of distinct windows meet only at zero") {
    const auto ctx = small_context();
    const CarrierPtr c = ctx->rep().carrier();
    const auto hb = hermite_basis(c, 6, -0.8, 0.3);
    const StateVector p1 = gaussian_log(c, {-0.9, 0.3, 1.0}), p2 = gaussian_log(c, {-0.7, 0.35, -1.0});
    const IntersectionResult r = intersection_probe(ctx->rep(), ctx->exp_grid(), p1, p2, hb, 4, 3);
    CHECK(r.defect > 1e-10);
    CHECK(r.min_residual() >= 0.1);
    CHECK(intersection_test(ctx->rep(), ctx->exp_grid(), p1, p2, hb, 4, 3).passed());

    const IntersectionResult s = intersection_probe(ctx->rep(), ctx->exp_grid(), p1, p1 * cplx(0.0, 3.0), hb, 4, 3);
    CHECK(s.max_residual() <= 1e-8);
    const VerificationReport col = intersection_test(ctx->rep(), ctx->exp_grid(), p1, p1 * cplx(2.0), hb, 4, 3, 0.1, "x");
    CHECK(col.passed());
    CHECK(col.records().front().id == "x.collinear");
    CHECK_THROWS_AS(intersection_probe(ctx->rep(), ctx->exp_grid(), p1, p2, hb, 0, 3), std::invalid_argument);
}

}
