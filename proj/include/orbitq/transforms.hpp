#pragma once

// Fourier-Wigner and Fourier-Kirillov transforms.
//
//   F_W(A)(g)       = tr(A D pi(g))
//   F_W^-1(h)       = sum_i h(g_i) pi(g_i^-1) D dmu_r(g_i)
//   F_KO(f)(g)      = (|Pf| Delta(g))^{-1/2} int f(exp X) e^{2 pi i <kappa(g), X>} sqrt(Theta(X)) dX
//   F_KO^-1(h)(X)   = Theta(X)^{-1/2} int h(g) e^{-2 pi i <kappa(g), X>} (|Pf| Delta(g))^{-1/2} dmu_r(g)
//
// The fft mode maps a centered exponential lattice onto its frequency lattice
// (positive orbit bins only) and is exactly unitary in the discrete sense.

#include "rep.hpp"

#include <functional>

namespace orbitq {

using CarrierPoint = std::array<double, 2>;
using KernelFn = std::function<cplx(const CarrierPoint&, const CarrierPoint&)>;

enum class FkoMode { Fft, Direct };

inline CarrierPoint carrier_point(const CarrierGrid& c, int m) {
    return {c.value(m, 0), c.rank() > 1 ? c.value(m, 1) : 0.0};
}

// kernel samples K(p_j, p_k) against the carrier measure
inline KernelOperator kernel_operator(const CarrierPtr& c, const KernelFn& K) {
    MatC M(c->size(), c->size());
    for (int j = 0; j < c->size(); ++j)
        for (int k = 0; k < c->size(); ++k) M(j, k) = K(carrier_point(*c, j), carrier_point(*c, k));
    return {c, std::move(M)};
}

class TransformContext {
public:
    TransformContext(RepPtr rep, GridPtr exp_grid) : rep_(std::move(rep)), exp_(std::move(exp_grid)) {
        if (!(exp_->descriptor() == rep_->descriptor())) throw GridError("grid and representation differ in group");
        orbit_ = GroupGrid::dual_of(*exp_);
        pf_ = pfaffian(rep_->descriptor(), rep_->descriptor().F);
        if (pf_ == 0.0) throw GroupError("degenerate orbit base point");
    }
    const Representation& rep() const { return *rep_; }
    const RepPtr& rep_ptr() const { return rep_; }
    const GridPtr& exp_grid() const { return exp_; }
    const GridPtr& orbit_grid() const { return orbit_; }
    const GroupDescriptor& descriptor() const { return rep_->descriptor(); }
    double pf() const { return pf_; }

private:
    RepPtr rep_;
    GridPtr exp_;
    GridPtr orbit_;
    double pf_ = 1.0;
};

inline GroupFunction fourier_wigner(const Representation& rep, const KernelOperator& A, const GridPtr& grid) {
    require_same(rep.carrier(), A.grid);
    const MatC P = A.action();
    const auto pts = grid_points(*grid);
    const Slices sl = slice_points(rep, pts);
    const Eigen::VectorXd D = rep.duflo_diag(1);
    const int n = rep.size();
    VecC out(grid->size());
    parallel_for(sl.members.size(), [&](std::size_t k) {
        const SparseRows S = rep.dilation(sl.anchor[k]);
        VecC q(n);
        for (int m = 0; m < n; ++m) {
            cplx s = 0.0;
            for (int e = S.start[m]; e < S.start[m + 1]; ++e) s += P(S.col[e], m) * S.w[e];
            q[m] = s * D[m];
        }
        for (int i : sl.members[k]) {
            cplx s = 0.0;
            for (int m = 0; m < n; ++m)
                if (q[m] != cplx(0.0)) s += std::polar(1.0, rep.phase(pts[static_cast<std::size_t>(i)], m)) * q[m];
            out[i] = s;
        }
    });
    return {grid, std::move(out)};
}

// Kernel of a sampled operator: the first argument is interpolated with the stencils
// of Representation::dilation, the second must be a carrier node.
inline KernelFn sampled_kernel(const KernelOperator& A) {
    return [A](const CarrierPoint& p, const CarrierPoint& q) {
        const CarrierGrid& c = *A.grid;
        const auto& ax = c.axes();
        const auto node = [&](int k, double v) {
            const double t = ax[k].kind == AxisKind::Log ? std::log(v) : v;
            return static_cast<int>(std::lround((t - ax[k].min) / ax[k].step));
        };
        const int qi = c.rank() == 1 ? node(0, q[0]) : c.index(node(0, q[0]), node(1, q[1]));
        if (qi < 0 || qi >= c.size()) return cplx(0.0);
        const Stencil1 s0 = catmull_rom(std::log(p[0]), ax[0].min, ax[0].step, ax[0].count);
        cplx v = 0.0;
        if (c.rank() == 1) {
            for (int i = 0; i < s0.n; ++i) v += s0.w[i] * A.matrix(s0.idx[i], qi);
            return v;
        }
        const Stencil1 s1 = catmull_rom(p[1], ax[1].min, ax[1].step, ax[1].count);
        for (int i = 0; i < s0.n; ++i)
            for (int j = 0; j < s1.n; ++j) v += s0.w[i] * s1.w[j] * A.matrix(c.index(s0.idx[i], s1.idx[j]), qi);
        return v;
    };
}

// Kernel route: F_W(A)(g) = int K(g.p, p) D(p) e^{phase(g,p)} dp over the carrier,
// with g.p = a r (affine) or (a b, t + s sqrt(b)) (shearlet).
inline GroupFunction fourier_wigner_kernel(const Representation& rep, const KernelFn& K, const GridPtr& grid) {
    const CarrierGrid& c = *rep.carrier();
    const Eigen::VectorXd D = rep.duflo_diag(1);
    const double w = c.weight();
    const bool shear = rep.descriptor().name == GroupName::Shearlet;
    VecC out(grid->size());
    parallel_for(static_cast<std::size_t>(grid->size()), [&](std::size_t i) {
        const GroupPoint& g = grid->point(static_cast<int>(i));
        cplx s = 0.0;
        for (int m = 0; m < c.size(); ++m) {
            const CarrierPoint p = carrier_point(c, m);
            const CarrierPoint gp = shear ? CarrierPoint{g[0] * p[0], p[1] + g[1] * std::sqrt(p[0])}
                                          : CarrierPoint{g[0] * p[0], 0.0};
            s += K(gp, p) * D[m] * std::polar(1.0, rep.phase(g, m));
        }
        out[static_cast<Eigen::Index>(i)] = s * w;
    });
    return {grid, std::move(out)};
}

inline KernelOperator fourier_wigner_inv(const Representation& rep, const GroupFunction& h) {
    if (!(h.grid->descriptor() == rep.descriptor())) throw GridError("function and representation differ in group");
    const GroupDescriptor& d = rep.descriptor();
    std::vector<GroupPoint> ginv(static_cast<std::size_t>(h.size()));
    for (int i = 0; i < h.size(); ++i) ginv[static_cast<std::size_t>(i)] = inv(d, h.grid->point(i));
    const Slices sl = slice_points(rep, ginv);
    const Eigen::VectorXd D = rep.duflo_diag(1);
    const int n = rep.size();
    MatC total = MatC::Zero(n, n);
    for (std::size_t k = 0; k < sl.members.size(); ++k) {
        std::vector<int> live;
        for (int i : sl.members[k])
            if (h.values[i] != cplx(0.0)) live.push_back(i);
        if (live.empty()) continue;
        VecC c(n);
        parallel_for(static_cast<std::size_t>(n), [&](std::size_t mm) {
            const int m = static_cast<int>(mm);
            cplx s = 0.0;
            for (int i : live)
                s += h.values[i] * h.grid->weight_right(i) * std::polar(1.0, rep.phase(ginv[static_cast<std::size_t>(i)], m));
            c[m] = s;
        });
        const SparseRows S = rep.dilation(sl.anchor[k]);
        for (int m = 0; m < n; ++m)
            for (int e = S.start[m]; e < S.start[m + 1]; ++e) total(m, S.col[e]) += c[m] * S.w[e] * D[S.col[e]];
    }
    return KernelOperator::from_action(rep.carrier(), total);
}

namespace detail {

// one-axis transform of a row-major array: out[.., p, ..] = sum_j T(p, j) in[.., j, ..]
inline VecC dft_axis(const VecC& in, std::vector<int>& shape, int axis, const MatC& T) {
    int outer = 1, inner = 1;
    for (int k = 0; k < axis; ++k) outer *= shape[k];
    for (int k = axis + 1; k < static_cast<int>(shape.size()); ++k) inner *= shape[k];
    const int nin = shape[axis], nout = static_cast<int>(T.rows());
    VecC out = VecC::Zero(static_cast<Eigen::Index>(outer) * nout * inner);
    parallel_for(static_cast<std::size_t>(outer), [&](std::size_t oo) {
        const int o = static_cast<int>(oo);
        for (int p = 0; p < nout; ++p) {
            for (int j = 0; j < nin; ++j) {
                const cplx t = T(p, j);
                const Eigen::Index src = (static_cast<Eigen::Index>(o) * nin + j) * inner;
                const Eigen::Index dst = (static_cast<Eigen::Index>(o) * nout + p) * inner;
                for (int q = 0; q < inner; ++q) out[dst + q] += t * in[src + q];
            }
        }
    });
    shape[axis] = nout;
    return out;
}

// e^{sign 2 pi i m j / n} for frequency indices m and centered sample indices j
inline MatC twiddles(const std::vector<int>& freq, int n, double sign) {
    const int c = (n - 1) / 2;
    MatC T(static_cast<Eigen::Index>(freq.size()), n);
    for (std::size_t p = 0; p < freq.size(); ++p)
        for (int j = 0; j < n; ++j) {
            long long r = (static_cast<long long>(freq[p]) * (j - c)) % n;
            if (r < 0) r += n;
            T(static_cast<Eigen::Index>(p), j) = std::polar(1.0, sign * 2 * kPi * static_cast<double>(r) / n);
        }
    return T;
}

inline std::vector<int> orbit_bins(const GroupGrid& e, const GroupGrid& o, int k) {
    const auto& ax = o.axes()[k];
    const double dy = 1.0 / (e.axes()[k].count * e.axes()[k].step);
    std::vector<int> f;
    for (int i = 0; i < ax.count; ++i) f.push_back(static_cast<int>(std::lround(ax.coord(i) / dy)));
    return f;
}

}  // namespace detail

inline GroupFunction fourier_kirillov_fft(const TransformContext& ctx, const GroupFunction& f) {
    require_same(f.grid, ctx.exp_grid());
    const GroupGrid& E = *ctx.exp_grid();
    const GroupGrid& O = *ctx.orbit_grid();
    VecC data(f.size());
    for (int i = 0; i < f.size(); ++i) data[i] = f.values[i] * std::sqrt(E.theta(i)) * E.cell();
    std::vector<int> shape;
    for (const auto& a : E.axes()) shape.push_back(a.count);
    for (int k = 0; k < E.dim(); ++k)
        data = detail::dft_axis(data, shape, k, detail::twiddles(detail::orbit_bins(E, O, k), E.axes()[k].count, 1.0));
    const double apf = std::abs(ctx.pf());
    for (int p = 0; p < O.size(); ++p) data[p] /= std::sqrt(apf * O.delta(p));
    return {ctx.orbit_grid(), std::move(data)};
}

inline GroupFunction fourier_kirillov_inv_fft(const TransformContext& ctx, const GroupFunction& h) {
    require_same(h.grid, ctx.orbit_grid());
    const GroupGrid& E = *ctx.exp_grid();
    const GroupGrid& O = *ctx.orbit_grid();
    const double apf = std::abs(ctx.pf());
    VecC data(h.size());
    for (int p = 0; p < O.size(); ++p) data[p] = h.values[p] * std::sqrt(apf * O.delta(p)) * O.cell();
    std::vector<int> shape;
    for (const auto& a : O.axes()) shape.push_back(a.count);
    for (int k = 0; k < E.dim(); ++k) {
        const MatC T = detail::twiddles(detail::orbit_bins(E, O, k), E.axes()[k].count, -1.0);
        data = detail::dft_axis(data, shape, k, MatC(T.transpose()));
    }
    for (int i = 0; i < E.size(); ++i) data[i] /= std::sqrt(E.theta(i));
    return {ctx.exp_grid(), std::move(data)};
}

namespace detail {

// frequencies resolved by an exponential lattice: |Y_k| < 1/(2 h_k)
inline bool in_nyquist_box(const GroupGrid& in, const DualVec& Y) {
    if (in.chart() != Chart::Exponential) return true;
    for (int k = 0; k < in.dim(); ++k)
        if (std::abs(Y[k]) * 2.0 * in.axes()[k].step >= 1.0) return false;
    return true;
}

}  // namespace detail

// Quadrature over the input grid at arbitrary group points.  Outputs whose
// covector lies outside the frequency box of an exponential input lattice
// are aliases of resolved frequencies and are set to zero.
inline VecC fourier_kirillov_points(const TransformContext& ctx, const GroupFunction& f,
                                    const std::vector<GroupPoint>& pts) {
    const GroupDescriptor& d = ctx.descriptor();
    const GroupGrid& I = *f.grid;
    const double apf = std::abs(ctx.pf());
    std::vector<AlgebraVec> X;
    std::vector<cplx> c;
    for (int i = 0; i < I.size(); ++i) {
        if (f.values[i] == cplx(0.0)) continue;
        X.push_back(I.algebra(i));
        c.push_back(f.values[i] * I.weight_right(i) / std::sqrt(I.theta(i)));
    }
    VecC v(static_cast<Eigen::Index>(pts.size()));
    parallel_for(pts.size(), [&](std::size_t o) {
        const GroupPoint& g = pts[o];
        const DualVec Y = kappa(d, g);
        cplx s = 0.0;
        if (detail::in_nyquist_box(I, Y)) {
            for (std::size_t i = 0; i < X.size(); ++i) s += c[i] * std::polar(1.0, 2 * kPi * pairing(Y, X[i]));
            s /= std::sqrt(apf * modular(d, g));
        }
        v[static_cast<Eigen::Index>(o)] = s;
    });
    return v;
}

inline GroupFunction fourier_kirillov_direct(const TransformContext& ctx, const GroupFunction& f, const GridPtr& out) {
    return {out, fourier_kirillov_points(ctx, f, grid_points(*out))};
}

inline cplx fourier_kirillov_at(const TransformContext& ctx, const GroupFunction& f, const DualVec& Y) {
    const GroupDescriptor& d = ctx.descriptor();
    const GroupPoint g = kappa_inv(d, Y);
    const GroupGrid& I = *f.grid;
    if (!detail::in_nyquist_box(I, Y)) return 0.0;
    cplx s = 0.0;
    for (int i = 0; i < I.size(); ++i)
        s += f.values[i] * I.weight_right(i) / std::sqrt(I.theta(i)) * std::polar(1.0, 2 * kPi * pairing(Y, I.algebra(i)));
    return s / std::sqrt(std::abs(ctx.pf()) * modular(d, g));
}

inline GroupFunction fourier_kirillov_inv_direct(const TransformContext& ctx, const GroupFunction& h,
                                                 const GridPtr& out) {
    const GroupDescriptor& d = ctx.descriptor();
    const GroupGrid& I = *h.grid;
    const double apf = std::abs(ctx.pf());
    std::vector<DualVec> Y;
    std::vector<cplx> c;
    for (int p = 0; p < I.size(); ++p) {
        if (h.values[p] == cplx(0.0)) continue;
        Y.push_back(kappa(d, I.point(p)));
        c.push_back(h.values[p] * I.weight_right(p) / std::sqrt(apf * I.delta(p)));
    }
    VecC v(out->size());
    parallel_for(static_cast<std::size_t>(out->size()), [&](std::size_t o) {
        const AlgebraVec X = out->algebra(static_cast<int>(o));
        cplx s = 0.0;
        for (std::size_t p = 0; p < Y.size(); ++p) s += c[p] * std::polar(1.0, -2 * kPi * pairing(Y[p], X));
        v[static_cast<Eigen::Index>(o)] = s / std::sqrt(theta(d, X));
    });
    return {out, std::move(v)};
}

inline GroupFunction fourier_kirillov(const TransformContext& ctx, const GroupFunction& f, FkoMode mode) {
    return mode == FkoMode::Fft ? fourier_kirillov_fft(ctx, f) : fourier_kirillov_direct(ctx, f, ctx.orbit_grid());
}

inline GroupFunction fourier_kirillov_inv(const TransformContext& ctx, const GroupFunction& h, FkoMode mode) {
    return mode == FkoMode::Fft ? fourier_kirillov_inv_fft(ctx, h) : fourier_kirillov_inv_direct(ctx, h, ctx.exp_grid());
}

inline GroupFunction fourier_wigner(const TransformContext& ctx, const KernelOperator& A) {
    return fourier_wigner(ctx.rep(), A, ctx.exp_grid());
}

inline KernelOperator fourier_wigner_inv(const TransformContext& ctx, const GroupFunction& h) {
    return fourier_wigner_inv(ctx.rep(), h);
}

}  // namespace orbitq
