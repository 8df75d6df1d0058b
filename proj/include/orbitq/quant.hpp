#pragma once

// Quantization A_f = F_W^-1(F_KO^-1 f) and dequantization a_S = F_KO(F_W S).
//
// Quantizer evaluates both maps through the transforms.  GalerkinQuantizer
// restricts them to the span of q_i (x) q_j for an orthonormal carrier family
// and isometrizes the image, so identities such as associativity of the
// twisted product hold to rounding error.

#include "signals.hpp"
#include "transforms.hpp"

#include <memory>

namespace orbitq {

class Quantizer {
public:
    explicit Quantizer(std::shared_ptr<const TransformContext> ctx, FkoMode mode = FkoMode::Fft)
        : ctx_(std::move(ctx)), mode_(mode) {}

    const TransformContext& context() const { return *ctx_; }
    const std::shared_ptr<const TransformContext>& context_ptr() const { return ctx_; }
    const Representation& rep() const { return ctx_->rep(); }
    const CarrierPtr& carrier() const { return ctx_->rep().carrier(); }
    const GridPtr& symbol_grid() const { return ctx_->orbit_grid(); }
    bool affine_fast_path() const { return ctx_->descriptor().name == GroupName::Affine; }

    KernelOperator quantize(const GroupFunction& f) const {
        require_same(f.grid, ctx_->orbit_grid());
        return fourier_wigner_inv(*ctx_, fourier_kirillov_inv(*ctx_, f, mode_));
    }

    GroupFunction dequantize(const KernelOperator& S) const {
        return fourier_kirillov(*ctx_, fourier_wigner(*ctx_, S), mode_);
    }

    GroupFunction wigner(const StateVector& psi, const StateVector& phi) const {
        return dequantize(rank_one(psi, phi));
    }
    GroupFunction wigner(const StateVector& psi) const { return wigner(psi, psi); }

    // f # g = a_{A_f A_g}
    GroupFunction twisted_mul(const GroupFunction& f, const GroupFunction& g) const {
        return dequantize(compose(quantize(f), quantize(g)));
    }

    // f natural g = F_W(F_W^-1 f o F_W^-1 g), on the exponential lattice
    GroupFunction twisted_conv(const GroupFunction& f, const GroupFunction& g) const {
        return fourier_wigner(*ctx_, compose(fourier_wigner_inv(*ctx_, f), fourier_wigner_inv(*ctx_, g)));
    }

    // Band-limited evaluation of a symbol at arbitrary points: the symbol is
    // pulled back to the exponential lattice and re-synthesized there.
    VecC symbol_at(const GroupFunction& f, const std::vector<GroupPoint>& pts) const {
        require_same(f.grid, ctx_->orbit_grid());
        return fourier_kirillov_points(*ctx_, fourier_kirillov_inv(*ctx_, f, mode_), pts);
    }

    // R_y f (x) = f(xy) or L_y f (x) = f(y^-1 x) on the symbol grid
    GroupFunction translate_symbol(const GroupFunction& f, const GroupPoint& y, Side side) const {
        const GroupDescriptor& d = ctx_->descriptor();
        const GroupGrid& O = *f.grid;
        const GroupPoint yi = inv(d, y);
        std::vector<GroupPoint> pts(static_cast<std::size_t>(O.size()));
        for (int p = 0; p < O.size(); ++p)
            pts[static_cast<std::size_t>(p)] = side == Side::Right ? mul(d, O.point(p), y) : mul(d, yi, O.point(p));
        return {f.grid, symbol_at(f, pts)};
    }

    // (a_S)-check, evaluated exactly at the inverted symbol-grid points
    GroupFunction involuted_symbol(const KernelOperator& S) const {
        const GridPtr& O = ctx_->orbit_grid();
        std::vector<GroupPoint> pts(static_cast<std::size_t>(O->size()));
        for (int p = 0; p < O->size(); ++p) pts[static_cast<std::size_t>(p)] = inv(ctx_->descriptor(), O->point(p));
        return {O, fourier_kirillov_points(*ctx_, fourier_wigner(*ctx_, S), pts)};
    }

    // S-check = A_{(a_S)-check}
    KernelOperator parity(const KernelOperator& S) const { return quantize(involuted_symbol(S)); }

    // Affine closed form f(a,x) = int K(a e^u / lambda(u), a / lambda(u)) e^{-+2 pi i x u} du,
    // discretized on the u-axis of the exponential lattice.
    cplx dequantize_closed_form_at(const KernelOperator& S, const GroupPoint& g) const {
        require_affine();
        require_same(S.grid, carrier());
        const auto& ax = carrier()->axes()[0];
        const LatticeAxis& ua = ctx_->exp_grid()->axes()[0];
        const double sg = -ctx_->descriptor().sign_value();
        const double la = std::log(g[0]);
        cplx s = 0.0;
        for (int k = 0; k < ua.count; ++k) {
            const double u = ua.coord(k);
            const double ll = std::log(lambda(u));
            const Stencil1 sr = catmull_rom(la + u - ll, ax.min, ax.step, ax.count);
            const Stencil1 ss = catmull_rom(la - ll, ax.min, ax.step, ax.count);
            cplx K = 0.0;
            for (int p = 0; p < sr.n; ++p)
                for (int q = 0; q < ss.n; ++q) K += sr.w[p] * ss.w[q] * S.matrix(sr.idx[p], ss.idx[q]);
            if (K != cplx(0.0)) s += K * std::polar(1.0, sg * 2 * kPi * g[1] * u);
        }
        return s * ua.step;
    }

    GroupFunction dequantize_closed_form(const KernelOperator& S, const GridPtr& out) const {
        VecC v(out->size());
        parallel_for(static_cast<std::size_t>(out->size()), [&](std::size_t o) {
            v[static_cast<Eigen::Index>(o)] = dequantize_closed_form_at(S, out->point(static_cast<int>(o)));
        });
        return {out, std::move(v)};
    }

    // Affine closed form K(r,s) = int f(s lambda(u), x) e^{+-2 pi i x u} dx with u = ln(r/s).
    // The symbol is evaluated pointwise; the x-integral runs over the x-lattice of the
    // symbol grid, which is the discrete dual of the u-lattice.  Entries with
    // |ln(r/s)| beyond the u-window of the lattice are aliased and set to zero.
    KernelOperator quantize_closed_form(const std::function<cplx(const GroupPoint&)>& f) const {
        require_affine();
        const CarrierGrid& c = *carrier();
        const double sg = ctx_->descriptor().sign_value();
        const LatticeAxis& xa = ctx_->orbit_grid()->axes()[0];
        const LatticeAxis& ua = ctx_->exp_grid()->axes()[0];
        const double umax = (ua.count - 1) / 2 * ua.step * (1 + 1e-12);
        const int n = c.size();
        MatC M(n, n);
        parallel_for(static_cast<std::size_t>(n), [&](std::size_t jj) {
            const int j = static_cast<int>(jj);
            for (int k = 0; k < n; ++k) {
                const double u = c.coord(j, 0) - c.coord(k, 0);
                if (std::abs(u) > umax) {
                    M(j, k) = 0.0;
                    continue;
                }
                GroupPoint g = GroupPoint::zeros(2);
                g[0] = c.value(k, 0) * lambda(u);
                cplx s = 0.0;
                for (int i = 0; i < xa.count; ++i) {
                    g[1] = xa.coord(i);
                    s += f(g) * std::polar(1.0, sg * 2 * kPi * g[1] * u);
                }
                M(j, k) = s * xa.step;
            }
        });
        return {carrier(), std::move(M)};
    }

private:
    void require_affine() const {
        if (ctx_->descriptor().name != GroupName::Affine) throw GroupError("closed form is available for the affine group only");
    }

    std::shared_ptr<const TransformContext> ctx_;
    FkoMode mode_;
};

using QuantizerPtr = std::shared_ptr<const Quantizer>;

class GalerkinQuantizer {
public:
    GalerkinQuantizer(QuantizerPtr q, std::vector<StateVector> basis) : q_(std::move(q)), basis_(std::move(basis)) {
        const int n = static_cast<int>(basis_.size());
        if (n == 0) throw GridError("empty operator basis");
        const int N = q_->rep().size();
        Q_.resize(N, n);
        for (int i = 0; i < n; ++i) {
            require_same(basis_[static_cast<std::size_t>(i)].grid, q_->carrier());
            Q_.col(i) = basis_[static_cast<std::size_t>(i)].values;
        }
        const GridPtr& O = q_->symbol_grid();
        MatC W(O->size(), n * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                W.col(i * n + j) = q_->wigner(basis_[static_cast<std::size_t>(i)], basis_[static_cast<std::size_t>(j)]).values;
        wr_.resize(O->size());
        for (int p = 0; p < O->size(); ++p) wr_[p] = O->weight_right(p);
        const MatC G = W.adjoint() * wr_.asDiagonal() * W;
        Eigen::SelfAdjointEigenSolver<MatC> es(G);
        const Eigen::VectorXd ev = es.eigenvalues();
        if (ev.minCoeff() <= 1e-12 * ev.maxCoeff()) throw GridError("operator basis images are degenerate");
        cond_ = ev.maxCoeff() / ev.minCoeff();
        gram_dev_ = (G - MatC::Identity(n * n, n * n)).norm();
        const MatC Gm = es.eigenvectors() * ev.cwiseSqrt().cwiseInverse().cast<cplx>().asDiagonal() *
                        es.eigenvectors().adjoint();
        What_ = W * Gm;
    }

    int rank() const { return static_cast<int>(basis_.size()); }
    const std::vector<StateVector>& basis() const { return basis_; }
    const Quantizer& natural() const { return *q_; }
    const GridPtr& symbol_grid() const { return q_->symbol_grid(); }
    double gram_condition() const { return cond_; }
    // Frobenius distance of the raw image Gram matrix from the identity
    double gram_deviation() const { return gram_dev_; }

    // C_ij = <S q_j, q_i>
    MatC coefficients(const KernelOperator& S) const {
        require_same(S.grid, q_->carrier());
        const double w = S.grid->weight();
        return Q_.adjoint() * S.matrix * Q_ * (w * w);
    }

    KernelOperator from_coefficients(const MatC& C) const { return {q_->carrier(), Q_ * C * Q_.adjoint()}; }

    // orthogonal projection of S onto span q_i (x) q_j
    KernelOperator project(const KernelOperator& S) const { return from_coefficients(coefficients(S)); }

    GroupFunction dequantize(const KernelOperator& S) const {
        return {symbol_grid(), What_ * vec(coefficients(S))};
    }

    KernelOperator quantize(const GroupFunction& f) const {
        require_same(f.grid, symbol_grid());
        return from_coefficients(unvec(What_.adjoint() * (wr_.cast<cplx>().asDiagonal() * f.values)));
    }

    // orthogonal projection of f onto the symbol image
    GroupFunction project(const GroupFunction& f) const { return dequantize(quantize(f)); }

    GroupFunction wigner(const StateVector& psi, const StateVector& phi) const {
        return dequantize(rank_one(psi, phi));
    }
    GroupFunction wigner(const StateVector& psi) const { return wigner(psi, psi); }

    GroupFunction twisted_mul(const GroupFunction& f, const GroupFunction& g) const {
        return dequantize(compose(quantize(f), quantize(g)));
    }

    // F_W realized as F_KO^-1 o a and its inverse as A o F_KO on the exponential lattice
    GroupFunction fourier_wigner(const KernelOperator& S) const {
        return fourier_kirillov_inv(q_->context(), dequantize(S), FkoMode::Fft);
    }
    KernelOperator fourier_wigner_inv(const GroupFunction& h) const {
        return quantize(fourier_kirillov(q_->context(), h, FkoMode::Fft));
    }
    GroupFunction twisted_conv(const GroupFunction& f, const GroupFunction& g) const {
        return fourier_wigner(compose(fourier_wigner_inv(f), fourier_wigner_inv(g)));
    }

private:
    VecC vec(const MatC& C) const {
        const int n = rank();
        VecC c(n * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) c[i * n + j] = C(i, j);
        return c;
    }
    MatC unvec(const VecC& c) const {
        const int n = rank();
        MatC C(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) C(i, j) = c[i * n + j];
        return C;
    }

    QuantizerPtr q_;
    std::vector<StateVector> basis_;
    MatC Q_;
    MatC What_;
    Eigen::VectorXd wr_;
    double cond_ = 1.0;
    double gram_dev_ = 0.0;
};

}  // namespace orbitq
