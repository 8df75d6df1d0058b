#include "common.hpp"

using namespace orbitq;
using namespace orbitq::test;

namespace {

QuantizerPtr quantizer() {
    static const auto q = std::make_shared<const Quantizer>(medium_context());
    return q;
}

}  // namespace

TEST_SUITE("quant") {

TEST_CASE("Wigner functions quantize to rank-one operators") {
    const auto q = quantizer();
    const CarrierPtr c = q->carrier();
    const StateVector psi = gaussian_log(c, {0.1, 0.3, 2.0}), phi = gaussian_log(c, {-0.1, 0.3});
    CHECK(rel(q->quantize(q->wigner(psi, phi)), rank_one(psi, phi)) <= 1e-2);
    CHECK(hs_norm(q->quantize(GroupFunction::zero(q->symbol_grid()))) == 0.0);
}

TEST_CASE("Wigner function properties") {
    const auto q = quantizer();
    const CarrierPtr c = q->carrier();
    const StateVector psi = gaussian_log(c, {0.1, 0.3, 2.0}), phi = gaussian_log(c, {-0.1, 0.3});
    const StateVector psi2 = gaussian_log(c, {0.0, 0.35, 1.0}), phi2 = gaussian_log(c, {0.05, 0.3, 0.5});
    const GroupFunction W = q->wigner(psi, phi);
    const GroupFunction Wp = q->wigner(psi);
    CHECK(Wp.values.imag().cwiseAbs().maxCoeff() <= 1e-10 * Wp.values.cwiseAbs().maxCoeff());
    CHECK(rel(W.conj(), q->wigner(phi, psi)) <= 1e-10);
    const cplx moyal = inner(W, q->wigner(psi2, phi2));
    const cplx expect = inner(psi, psi2) * std::conj(inner(phi, phi2));
    CHECK(std::abs(moyal - expect) <= 1e-2 * std::abs(expect));
    CHECK(std::abs(integrate_right(W) - inner(psi, phi)) <= 1e-2 * std::abs(inner(psi, phi)));
}

TEST_CASE("pairing and adjoint") {
    const auto q = quantizer();
    const CarrierPtr c = q->carrier();
    const StateVector psi = gaussian_log(c, {0.0, 0.35, 1.0}), phi = gaussian_log(c, {0.05, 0.3, 0.5});
    const GroupFunction f = q->wigner(gaussian_log(c, {0.1, 0.3, 2.0}), gaussian_log(c, {-0.1, 0.3})) * cplx(0.5, 1.0);
    const cplx lhs = inner(f, q->wigner(phi, psi));
    const cplx rhs = inner(apply(q->quantize(f), psi), phi);
    CHECK(std::abs(lhs - rhs) <= 1e-2 * std::abs(rhs));
    CHECK(rel(adjoint(q->quantize(f)), q->quantize(f.conj())) <= 1e-8);
}

TEST_CASE("dequantization paths agree") {
    const auto q = quantizer();
    const Quantizer qd(medium_context(), FkoMode::Direct);
    const CarrierPtr c = q->carrier();
    const KernelOperator S = rank_one(gaussian_log(c, {0.1, 0.3, 2.0}), gaussian_log(c, {-0.1, 0.3}));
    CHECK(rel(qd.dequantize(S), q->dequantize(S)) <= 1e-8);

    const auto closed_form_gap = [](const Quantizer& qq, const KernelOperator& A) {
        const GroupFunction a = qq.dequantize(A);
        const GroupFunction ac = qq.dequantize_closed_form(A, qq.symbol_grid());
        double num = 0.0, mx = 0.0;
        for (int i = 0; i < a.size(); ++i) {
            const GroupPoint& g = a.grid->point(i);
            if (g[0] < 0.3 || g[0] > 3.0 || std::abs(g[1]) > 4.0) continue;
            num = std::max(num, std::abs(a.values[i] - ac.values[i]));
            mx = std::max(mx, std::abs(a.values[i]));
        }
        return num / mx;
    };
    const Quantizer q0(small_context());
    const CarrierPtr c0 = q0.carrier();
    const double e0 = closed_form_gap(q0, rank_one(gaussian_log(c0, {0.1, 0.3, 2.0}), gaussian_log(c0, {-0.1, 0.3})));
    const double e1 = closed_form_gap(*q, S);
    CHECK(e1 < 0.5 * e0);
    CHECK(e1 <= 1e-3);

    const KernelOperator K = q->quantize_closed_form([&](const GroupPoint& g) { return q->dequantize_closed_form_at(S, g); });
    CHECK(rel(K, S) <= 1e-3);
}

TEST_CASE("self-adjoint operators have real symbols") {
    const auto q = quantizer();
    const CarrierPtr c = q->carrier();
    const StateVector a = gaussian_log(c, {0.1, 0.3, 2.0}), b = gaussian_log(c, {-0.2, 0.3});
    const GroupFunction s = q->dequantize(rank_one(a, a) + rank_one(b, b) * cplx(0.5));
    CHECK(s.values.imag().cwiseAbs().maxCoeff() <= 1e-10 * s.values.cwiseAbs().maxCoeff());
}

TEST_CASE("translation covariance") {
    const auto q = quantizer();
    const CarrierPtr c = q->carrier();
    const KernelOperator A = rank_one(gaussian_log(c, {0.1, 0.3, 2.0}), gaussian_log(c, {-0.1, 0.3}));
    const GroupFunction W = q->dequantize(A);
    const GroupPoint x{std::exp(2 * c->axes()[0].step), 0.3};
    const KernelOperator pi = q->rep().pi(x);
    const auto& d = q->context().descriptor();
    CHECK(rel(q->quantize(q->translate_symbol(W, inv(d, x), Side::Right)), compose(compose(adjoint(pi), A), pi)) <= 1e-2);
}

TEST_CASE("parity") {
    const auto q = quantizer();
    const CarrierPtr c = q->carrier();
    const StateVector psi = gaussian_log(c, {0.1, 0.3, 2.0});
    const KernelOperator S = rank_one(psi, gaussian_log(c, {-0.1, 0.3}));
    CHECK(rel(q->parity(q->parity(S)), S) <= 1e-2);
    const KernelOperator P = q->parity(rank_one(psi, psi));
    CHECK(rel(adjoint(P), P) <= 1e-8);
    // the involuted symbol is reproduced up to its component outside the discrete symbol image
    CHECK(rel(q->dequantize(q->parity(S)), q->involuted_symbol(S)) <= 1e-3);
}

TEST_CASE("H*-algebra identities in the Galerkin frame") {
    const auto q = quantizer();
    const GalerkinQuantizer G(q, hermite_basis(q->carrier(), 5, 0.0, 0.3));
    std::mt19937_64 rng(7);
    std::normal_distribution<double> nd;
    const auto rnd = [&]() {
        MatC C(5, 5);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) C(i, j) = cplx(nd(rng), nd(rng));
        return G.dequantize(G.from_coefficients(C));
    };
    const GroupFunction f = rnd(), g = rnd(), h = rnd();
    CHECK(rel(G.twisted_mul(G.twisted_mul(f, g), h), G.twisted_mul(f, G.twisted_mul(g, h))) <= 1e-8);
    CHECK(rel(G.twisted_mul(f, g).conj(), G.twisted_mul(g.conj(), f.conj())) <= 1e-8);
    CHECK(norm(G.twisted_mul(f, g)) <= norm(f) * norm(g));
    CHECK(std::abs(inner(G.twisted_mul(f, g), h) - inner(g, G.twisted_mul(f.conj(), h))) <= 1e-8 * norm(f) * norm(g) * norm(h));
    CHECK(std::abs(hs_inner(G.quantize(f), G.quantize(g)) - inner(f, g)) <= 1e-8 * norm(f) * norm(g));
    CHECK(G.gram_condition() < 10.0);

    const auto& b = G.basis();
    const KernelOperator R = rank_one(b[0] + b[2] * cplx(0.3), b[1] + b[0] * cplx(0.5));
    const GroupFunction w = G.fourier_wigner(R);
    CHECK(rel(G.twisted_conv(w, w), G.fourier_wigner(compose(R, R))) <= 1e-8);
}

TEST_CASE("Galerkin frame matches the natural maps on its span") {
    const auto q = quantizer();
    const GalerkinQuantizer G(q, hermite_basis(q->carrier(), 4, 0.0, 0.3));
    const auto& b = G.basis();
    const KernelOperator S = rank_one(b[1], b[3]);
    CHECK(rel(G.dequantize(S), q->dequantize(S)) <= 1e-2);
    CHECK(rel(G.project(S), S) <= 1e-12);
    CHECK_THROWS_AS(GalerkinQuantizer(q, {}), GridError);
}

TEST_CASE("Wigner functions of an orthonormal family are orthonormal") {
    const auto q = quantizer();
    const auto basis = hermite_basis(q->carrier(), 3, 0.0, 0.3);
    std::vector<GroupFunction> W;
    for (const auto& a : basis)
        for (const auto& b : basis) W.push_back(q->wigner(a, b));
    for (std::size_t i = 0; i < W.size(); ++i)
        for (std::size_t j = 0; j < W.size(); ++j)
            CHECK(std::abs(inner(W[i], W[j]) - (i == j ? 1.0 : 0.0)) <= 1e-2);
}

TEST_CASE("closed forms are affine only") {
    const Representation R(GroupDescriptor::shearlet(), shearlet_carrier());
    const auto sh = std::make_shared<const TransformContext>(
        std::make_shared<const Representation>(R),
        GroupGrid::exponential(R.descriptor(), {LatticeAxis::centered(0.5, 3), LatticeAxis::centered(0.5, 3),
                                                LatticeAxis::centered(0.5, 3), LatticeAxis::centered(0.5, 3)}));
    const Quantizer qs(sh);
    CHECK_FALSE(qs.affine_fast_path());
    const StateVector s = gaussian_log(R.carrier(), {0.0, 0.5, 0.0, 0.0, 0.8});
    CHECK_THROWS_AS(qs.dequantize_closed_form(rank_one(s, s), qs.symbol_grid()), GroupError);
}

}
