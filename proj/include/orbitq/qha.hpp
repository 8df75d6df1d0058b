#pragma once

// Quantum harmonic analysis:
//   f * S  = int f(x) pi(x)^* S pi(x) dmu_r(x)
//   T * S (x) = tr(T pi(x)^* S pi(x))

#include "quant.hpp"
#include "report.hpp"

namespace orbitq {

struct QhaContext {
    QuantizerPtr quantizer;
    const Representation& rep() const { return quantizer->rep(); }
    const GridPtr& ggrid() const { return quantizer->context().exp_grid(); }
};

namespace detail {

// fixed block partition so the summation order does not depend on the thread count
constexpr int kReduceBlocks = 16;

}  // namespace detail

inline KernelOperator conv_fn_op(const Representation& rep, const GroupFunction& f, const KernelOperator& S) {
    require_same(rep.carrier(), S.grid);
    std::vector<int> live;
    for (int i = 0; i < f.size(); ++i)
        if (f.values[i] != cplx(0.0)) live.push_back(i);
    const MatC P = S.action();
    const int n = rep.size();
    const int nb = detail::kReduceBlocks;
    std::vector<MatC> part(static_cast<std::size_t>(nb), MatC::Zero(n, n));
    parallel_for(static_cast<std::size_t>(nb), [&](std::size_t b) {
        for (std::size_t k = b; k < live.size(); k += static_cast<std::size_t>(nb)) {
            const int i = live[k];
            part[b] += rep.conjugate_action(f.grid->point(i), P) * (f.values[i] * f.grid->weight_right(i));
        }
    });
    MatC total = MatC::Zero(n, n);
    for (const MatC& m : part) total += m;
    return KernelOperator::from_action(rep.carrier(), total);
}

inline VecC conv_op_op_at(const Representation& rep, const KernelOperator& T, const KernelOperator& S,
                          const std::vector<GroupPoint>& pts) {
    require_same(rep.carrier(), T.grid);
    require_same(rep.carrier(), S.grid);
    const MatC Tt = T.action().transpose();
    const MatC P = S.action();
    VecC out(static_cast<Eigen::Index>(pts.size()));
    parallel_for(pts.size(), [&](std::size_t i) {
        out[static_cast<Eigen::Index>(i)] = Tt.cwiseProduct(rep.conjugate_action(pts[i], P)).sum();
    });
    return out;
}

inline GroupFunction conv_op_op(const Representation& rep, const KernelOperator& T, const KernelOperator& S,
                                const GridPtr& grid) {
    return {grid, conv_op_op_at(rep, T, S, grid_points(*grid))};
}

// f * g for a symbol g on the symbol grid, evaluated band-limited at x y^-1
inline GroupFunction convolve_symbol(const Quantizer& q, const GroupFunction& f, const GroupFunction& g) {
    const TransformContext& ctx = q.context();
    require_same(g.grid, ctx.orbit_grid());
    const GroupDescriptor& d = ctx.descriptor();
    const GroupFunction h = fourier_kirillov_inv(ctx, g, FkoMode::Fft);
    const GroupGrid& O = *g.grid;
    VecC out = VecC::Zero(O.size());
    std::vector<GroupPoint> pts(static_cast<std::size_t>(O.size()));
    for (int i = 0; i < f.size(); ++i) {
        if (f.values[i] == cplx(0.0)) continue;
        const GroupPoint yi = inv(d, f.grid->point(i));
        for (int p = 0; p < O.size(); ++p) pts[static_cast<std::size_t>(p)] = mul(d, O.point(p), yi);
        out += fourier_kirillov_points(ctx, h, pts) * (f.values[i] * f.grid->weight_right(i));
    }
    return {g.grid, std::move(out)};
}

// f * g-check (x) = int f(y) g(y x^-1) dmu_r(y) for symbols f, g at arbitrary points x
inline VecC convolve_involuted_symbols_at(const Quantizer& q, const GroupFunction& f, const GroupFunction& g,
                                          const std::vector<GroupPoint>& xs) {
    const TransformContext& ctx = q.context();
    require_same(f.grid, ctx.orbit_grid());
    require_same(g.grid, ctx.orbit_grid());
    const GroupDescriptor& d = ctx.descriptor();
    const GroupFunction h = fourier_kirillov_inv(ctx, g, FkoMode::Fft);
    const GroupGrid& O = *f.grid;
    VecC out(static_cast<Eigen::Index>(xs.size()));
    std::vector<GroupPoint> pts(static_cast<std::size_t>(O.size()));
    for (std::size_t k = 0; k < xs.size(); ++k) {
        const GroupPoint xi = inv(d, xs[k]);
        for (int p = 0; p < O.size(); ++p) pts[static_cast<std::size_t>(p)] = mul(d, O.point(p), xi);
        const VecC gv = fourier_kirillov_points(ctx, h, pts);
        cplx s = 0.0;
        for (int p = 0; p < O.size(); ++p) s += f.values[p] * gv[p] * O.weight_right(p);
        out[static_cast<Eigen::Index>(k)] = s;
    }
    return out;
}

inline double relative_residual(cplx lhs, cplx rhs) {
    const double den = std::abs(rhs);
    if (den == 0.0) return std::abs(lhs);
    return std::abs(lhs - rhs) / den;
}

// int f dmu_r = tr(A_f) and int f dmu_l = tr(D^-1 A_f D^-1)
inline VerificationReport trace_formula_check(const Quantizer& q, const GroupFunction& f, double tolerance = 1e-2,
                                              const std::string& label = "trace") {
    if (q.context().descriptor().name != GroupName::Affine)
        throw GroupError("the trace formula check is defined for the affine group");
    const KernelOperator A = q.quantize(f);
    const KernelOperator Dm = q.rep().duflo(-1);
    VerificationReport rep;
    rep.add(label + ".right", "int f dmu_r = tr(A_f)", relative_residual(trace(A), integrate_right(f)), tolerance,
            "symbol grid");
    rep.add(label + ".left", "int f dmu_l = tr(D^-1 A_f D^-1)",
            relative_residual(trace(compose(compose(Dm, A), Dm)), integrate_left(f)), tolerance, "symbol grid");
    return rep;
}

struct YoungTerms {
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;  // (rhs - lhs) / rhs
    bool pass = false;
};

inline double conjugate_exponent(double q) {
    if (std::isinf(q)) return 1.0;
    if (q == 1.0) return std::numeric_limits<double>::infinity();
    return q / (q - 1.0);
}

// ||T * S||_{L^r_r} <= ||a_T Delta^{1/q'}||_{L^p_r} ||a_S||_{L^q_l}; the left side is sampled
// on the exponential lattice, the symbols on the symbol grid
inline YoungTerms young_bound(const Quantizer& q, const KernelOperator& T, const KernelOperator& S, double p,
                              double qq, double r) {
    const auto inv_or_zero = [](double x) { return std::isinf(x) ? 0.0 : 1.0 / x; };
    if (p < 1.0 || qq < 1.0 || r < 1.0 || std::abs(inv_or_zero(p) + inv_or_zero(qq) - 1.0 - inv_or_zero(r)) > 1e-12)
        throw std::invalid_argument("exponents must satisfy 1/p + 1/q = 1 + 1/r");
    const GroupFunction ts = conv_op_op(q.rep(), T, S, q.context().exp_grid());
    const double qc = conjugate_exponent(qq);
    const GroupFunction aT = q.dequantize(T);
    const GroupFunction aS = q.dequantize(S);
    YoungTerms y;
    y.lhs = lp_norm(ts, r, Side::Right);
    y.rhs = lp_norm(weight_modular(aT, inv_or_zero(qc)), p, Side::Right) * lp_norm(aS, qq, Side::Left);
    y.margin = y.rhs > 0 ? (y.rhs - y.lhs) / y.rhs : 0.0;
    y.pass = y.lhs <= y.rhs * (1 + 1e-6);
    return y;
}

inline VerificationReport young_bound_check(const Quantizer& q, const KernelOperator& T, const KernelOperator& S,
                                            double p, double qq, double r) {
    const YoungTerms y = young_bound(q, T, S, p, qq, r);
    VerificationReport rep;
    const auto fmt = [](double x) { return std::isinf(x) ? std::string("inf") : std::to_string(static_cast<int>(x)); };
    rep.add("young.p" + fmt(p) + "q" + fmt(qq) + "r" + fmt(r),
            "||T * S||_{L^r} <= ||a_T Delta^{1/q'}||_{L^p} ||a_S||_{L^q_l}", y.lhs / y.rhs, 1 + 1e-6,
            "exponential lattice and symbol grid");
    return rep;
}

}  // namespace orbitq
