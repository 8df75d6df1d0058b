#pragma once

// Identity suites behind `orbitq verify`.  Each suite runs at fixed grid tiers
// (see tiers.hpp) and returns one record per identity.

#include "apps.hpp"
#include "tiers.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>

namespace orbitq {

enum class Suite { Groups, Transforms, Quant, Qha, Apps, All };

inline const char* to_string(Suite s) {
    switch (s) {
    case Suite::Groups: return "groups";
    case Suite::Transforms: return "transforms";
    case Suite::Quant: return "quant";
    case Suite::Qha: return "qha";
    case Suite::Apps: return "apps";
    case Suite::All: return "all";
    }
    return "?";
}

inline std::optional<Suite> parse_suite(const std::string& s) {
    for (Suite v : {Suite::Groups, Suite::Transforms, Suite::Quant, Suite::Qha, Suite::Apps, Suite::All})
        if (s == to_string(v)) return v;
    return std::nullopt;
}

struct VerifyOptions {
    OrbitSign sign = OrbitSign::Plus;
    std::uint64_t seed = 20240917;
    double tolerance_scale = 1.0;
    std::map<std::string, double> overrides;
};

namespace detail {

inline double rel(const KernelOperator& a, const KernelOperator& b) { return hs_norm(a - b) / hs_norm(b); }
inline double rel(const GroupFunction& a, const GroupFunction& b) { return norm(a - b) / norm(b); }
inline double rel(const VecC& a, const VecC& b) { return (a - b).norm() / b.norm(); }
inline double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

inline std::mt19937_64 rng_for(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq s{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream)};
    return std::mt19937_64(s);
}

inline std::string tier_label(const TransformContext& ctx, const std::string& name) {
    const auto& ax = ctx.exp_grid()->axes();
    return name + ": carrier " + std::to_string(ctx.rep().size()) + ", lattice " + std::to_string(ax[0].count) + "x" +
           std::to_string(ax[1].count);
}

// largest ratio e[k+1] / e[k]; below 1 iff the sequence decreases
inline double decrease_ratio(const std::vector<double>& e) {
    double r = 0.0;
    for (std::size_t k = 1; k < e.size(); ++k) r = std::max(r, e[k] / e[k - 1]);
    return r;
}

inline std::string join(const std::vector<double>& e) {
    std::string s;
    char buf[32];
    for (std::size_t k = 0; k < e.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%s%.3e", k ? ", " : "", e[k]);
        s += buf;
    }
    return s;
}

inline StateVector random_state(const CarrierPtr& c, std::mt19937_64& rng, double lo = -0.4, double hi = 0.4) {
    std::uniform_real_distribution<double> cu(lo, hi), wu(0.25, 0.4), fu(-2.0, 2.0);
    const double ce = cu(rng), wi = wu(rng), fr = fu(rng);
    return gaussian_log(c, {ce, wi, fr});
}

struct GroupSampler {
    std::mt19937_64 rng;
    std::uniform_real_distribution<double> U{-1.0, 1.0};

    GroupPoint point(const GroupDescriptor& d) {
        GroupPoint g = GroupPoint::zeros(d.dim);
        for (int k = 0; k < d.dim; ++k) g[k] = U(rng);
        if (d.name != GroupName::Heisenberg) g[0] = std::exp(g[0]);
        return g;
    }
    AlgebraVec algebra(const GroupDescriptor& d, double scale = 1.0) {
        AlgebraVec X = AlgebraVec::zeros(d.dim);
        for (int k = 0; k < d.dim; ++k) X[k] = scale * U(rng);
        return X;
    }
    DualVec dual(const GroupDescriptor& d) {
        DualVec Y = DualVec::zeros(d.dim);
        for (int k = 0; k < d.dim; ++k) Y[k] = U(rng);
        return Y;
    }
};

}  // namespace detail

// ---------------------------------------------------------------- groups

inline VerificationReport verify_groups(const VerifyOptions& o) {
    VerificationReport rep;
    constexpr int kSamples = 1000;
    constexpr int kThetaSamples = 200;
    const GroupDescriptor groups[] = {GroupDescriptor::affine(o.sign), GroupDescriptor::shearlet(o.sign),
                                      GroupDescriptor::heisenberg()};
    std::uint64_t stream = 0;
    for (const GroupDescriptor& d : groups) {
        const std::string p = std::string("groups.") + to_string(d.name);
        const std::string meta = std::to_string(kSamples) + " seeded samples";
        detail::GroupSampler S{detail::rng_for(o.seed, ++stream)};
        const GroupPoint e = identity(d);
        double assoc = 0, ident = 0, inverse = 0, explog = 0, adh = 0, kh = 0, pair = 0, detad = 0, kap = 0, kinv = 0;
        for (int i = 0; i < kSamples; ++i) {
            const GroupPoint g = S.point(d), h = S.point(d), k = S.point(d);
            assoc = std::max(assoc, mul(d, mul(d, g, h), k).max_abs_diff(mul(d, g, mul(d, h, k))));
            ident = std::max({ident, mul(d, e, g).max_abs_diff(g), mul(d, g, e).max_abs_diff(g)});
            inverse = std::max({inverse, mul(d, g, inv(d, g)).max_abs_diff(e), mul(d, inv(d, g), g).max_abs_diff(e)});
            const AlgebraVec X = S.algebra(d);
            explog = std::max({explog, log(d, exp(d, X)).max_abs_diff(X), exp(d, log(d, g)).max_abs_diff(g)});
            adh = std::max(adh, (adjoint(d, mul(d, g, h)) - adjoint(d, g) * adjoint(d, h)).cwiseAbs().maxCoeff());
            const DualVec Y = S.dual(d);
            kh = std::max(kh, coadjoint(d, mul(d, g, h), Y).max_abs_diff(coadjoint(d, g, coadjoint(d, h, Y))));
            pair = std::max(pair, std::abs(pairing(coadjoint(d, g, Y), apply(adjoint(d, g), X)) - pairing(Y, X)));
            detad = std::max(detad, std::abs(adjoint(d, g).determinant() * modular(d, g) - 1.0));
            if (d.quantizable()) {
                kap = std::max(kap, kappa(d, g).max_abs_diff(coadjoint(d, inv(d, g), d.F)));
                kinv = std::max(kinv, kappa_inv(d, kappa(d, g)).max_abs_diff(g));
            }
        }
        rep.add(p + ".associativity", "(gh)k = g(hk)", assoc, 1e-12, meta);
        rep.add(p + ".identity", "eg = ge = g", ident, 1e-12, meta);
        rep.add(p + ".inverse", "g g^-1 = g^-1 g = e", inverse, 1e-12, meta);
        rep.add(p + ".exp_log", "log(exp X) = X, exp(log g) = g", explog, 1e-12, meta);
        rep.add(p + ".ad_homomorphism", "Ad(gh) = Ad(g) Ad(h)", adh, 1e-12, meta);
        rep.add(p + ".k_homomorphism", "K(g1 g2) = K(g1) K(g2)", kh, 1e-12, meta);
        rep.add(p + ".pairing_invariance", "<K(g)Y, Ad(g)X> = <Y, X>", pair, 1e-12, meta);
        rep.add(p + ".det_ad", "det(Ad_x) Delta(x) = 1", detad, 1e-12, meta,
                "Delta from the closed forms; det(Ad) is its reciprocal");
        if (d.quantizable()) {
            rep.add(p + ".kappa", "kappa(g) = K(g^-1) F", kap, 1e-12, meta);
            rep.add(p + ".kappa_inverse", "kappa^-1(kappa(g)) = g", kinv, 1e-12, meta);
            rep.add(p + ".pfaffian", "|Pf_F| = 1", std::abs(std::abs(pfaffian(d, d.F)) - 1.0), 1e-12, "exact");
        }

        double th = 0, thm = 0;
        for (int i = 0; i < kThetaSamples; ++i) {
            const AlgebraVec X = S.algebra(d, 3.0);
            const double t = theta(d, X);
            th = std::max(th, std::abs(theta_by_determinant(d, X) - t) / t);
            const double tm = theta(d, -X);
            thm = std::max(thm, std::abs(modular(d, exp(d, X)) * t - tm) / tm);
        }
        const std::string tmeta = std::to_string(kThetaSamples) + " seeded algebra vectors in [-3,3]";
        rep.add(p + ".theta_formula", "Theta(X) = |det((e^{ad X} - 1) / ad X)|", th, 1e-10, tmeta);
        rep.add(p + ".theta_modular", "Theta(-X) / Theta(X) = Delta(exp X)", thm, 1e-12, tmeta);
    }

    const GroupDescriptor a = GroupDescriptor::affine(o.sign);
    detail::GroupSampler S{detail::rng_for(o.seed, 99)};
    double sym = 0;
    for (int i = 0; i < kSamples; ++i) {
        const GroupPoint g = S.point(a);
        const AlgebraVec X = S.algebra(a);
        sym = std::max(sym, std::abs(pairing(kappa(a, g), X) - a.sign_value() * (g[0] * X[1] - g[1] * X[0])));
    }
    rep.add("groups.affine.symplectic_pairing", "<kappa(a,x), uU + vV> = av - xu", sym, 1e-12,
            std::to_string(kSamples) + " seeded samples", "sign-flipped for the minus orbit");
    const double tv = std::max(std::abs(theta(a, AlgebraVec{1.0, 0.0}) - (std::exp(1.0) - 1.0)),
                               std::abs(theta(a, AlgebraVec{-1.0, 0.0}) - (1.0 - std::exp(-1.0))));
    rep.add("groups.affine.theta_values", "Theta(1,0) = e - 1, Theta(-1,0) = 1 - 1/e", tv, 1e-12, "exact");
    rep.add("groups.lambda_series", "lambda(u) = (e^u - 1)/u, continuous at 0",
            std::max(std::abs(lambda(1e-9) - 1.0), std::abs(lambda(-1e-9) - 1.0)), 1e-8, "u = +-1e-9");
    return rep;
}

// ---------------------------------------------------------------- transforms

inline VerificationReport verify_transforms(const VerifyOptions& o) {
    VerificationReport rep;

    {  // Duflo-Moore orthogonality
        std::vector<double> e;
        double norm_err = 0;
        std::string meta;
        for (int L = 0; L < 3; ++L) {
            const Representation R(GroupDescriptor::affine(o.sign), duflo_carrier(L));
            const GridPtr G = duflo_lattice(L, o.sign);
            const CarrierPtr c = R.carrier();
            const StateVector p1 = gaussian_log(c, {0.0, 0.4, 0.5}), p2 = gaussian_log(c, {0.2, 0.4});
            const StateVector f1 = gaussian_log(c, {-0.2, 0.4}), f2 = gaussian_log(c, {0.1, 0.4, -0.3});
            const GroupFunction w1 = wavelet(R, p1, f1, G), w2 = wavelet(R, p2, f2, G);
            const cplx rhs = inner(p1, p2) * std::conj(inner(R.apply_duflo(-1, f1), R.apply_duflo(-1, f2)));
            e.push_back(detail::rel(inner(w1, w2), rhs));
            if (L == 2) {
                const double n2 = norm(w1), nd = norm(p1) * norm(R.apply_duflo(-1, f1));
                norm_err = std::abs(n2 * n2 - nd * nd) / (nd * nd);
                meta = "carrier " + std::to_string(c->size()) + ", lattice " + std::to_string(G->axes()[0].count) +
                       "x" + std::to_string(G->axes()[1].count);
            }
        }
        const std::string anchor = "<W_{phi1} psi1, W_{phi2} psi2> = <psi1, psi2> conj<D^-1 phi1, D^-1 phi2>";
        rep.add("transforms.duflo_moore", anchor, e.back(), 1e-2, meta, "levels 0-2: " + detail::join(e));
        rep.add("transforms.duflo_moore.refinement", anchor, detail::decrease_ratio(e), 1.0, "levels 0-2",
                "largest ratio of consecutive errors");
        rep.add("transforms.duflo_moore.norm", "||W_phi psi||^2 = ||psi||^2 ||D^-1 phi||^2", norm_err, 1e-3, meta);
    }

    {  // Fourier-Kirillov, level 1
        const TransformContext ctx = transform_tier(1, o.sign);
        const std::string meta = detail::tier_label(ctx, "affine L1");
        const GridPtr& E = ctx.exp_grid();
        const GridPtr& O = ctx.orbit_grid();
        auto rng = detail::rng_for(o.seed, 201);
        std::normal_distribution<double> nd;
        GroupFunction g = GroupFunction::zero(O), f = GroupFunction::zero(E);
        for (int i = 0; i < g.size(); ++i) g.values[i] = cplx(nd(rng), nd(rng));
        for (int i = 0; i < f.size(); ++i) f.values[i] = cplx(nd(rng), nd(rng));
        const GroupFunction gi = fourier_kirillov_inv(ctx, g, FkoMode::Fft);
        rep.add("transforms.fko.unitarity", "||F_KO^-1 f|| = ||f||", std::abs(norm(gi) - norm(g)) / norm(g), 1e-10,
                meta, "random orbit-grid data");
        rep.add("transforms.fko.inverse", "F_KO F_KO^-1 = id", detail::rel(fourier_kirillov(ctx, gi, FkoMode::Fft), g),
                1e-10, meta, "random orbit-grid data");
        const auto P = [&](const GroupFunction& x) {
            return fourier_kirillov_inv(ctx, fourier_kirillov(ctx, x, FkoMode::Fft), FkoMode::Fft);
        };
        const GroupFunction pf = P(f);
        rep.add("transforms.fko.projection", "F_KO^-1 F_KO is a projection", detail::rel(P(pf), pf), 1e-10, meta,
                "random lattice data");

        const auto h = sample_algebra(E, [](const AlgebraVec& X) {
            const double a = X[0] - 0.2, b = X[1] + 0.3;
            return std::exp(-2.0 * a * a - 0.5 * b * b) *
                   (std::polar(1.0, -2 * kPi * 0.7 * X[1] + 0.4 * X[0]) + 0.5 * std::polar(1.0, 2 * kPi * 0.5 * X[1]));
        });
        GroupFunction hc = involution(h);
        for (int i = 0; i < hc.size(); ++i) hc.values[i] *= std::sqrt(E->delta(i));
        rep.add("transforms.fko.conjugation", "F_KO(sqrt(Delta) f-check) = conj(F_KO(conj f))",
                detail::rel(fourier_kirillov(ctx, hc, FkoMode::Fft), fourier_kirillov(ctx, h.conj(), FkoMode::Fft).conj()),
                1e-10, meta);
        const GroupFunction hf = fourier_kirillov(ctx, h, FkoMode::Fft);
        rep.add("transforms.fko.fft_vs_direct", "F_KO fft and direct quadrature agree",
                detail::rel(fourier_kirillov(ctx, h, FkoMode::Direct), hf), 1e-10, meta);

        const auto gauss = sample_algebra(E, [](const AlgebraVec& X) {
            return cplx(std::exp(-kPi * (X[0] * X[0] + X[1] * X[1])) / std::sqrt(lambda(X[0])));
        });
        const GroupFunction G = fourier_kirillov(ctx, gauss, FkoMode::Fft);
        double num = 0, den = 0;
        for (int p = 0; p < O->size(); ++p) {
            const GroupPoint& y = O->point(p);
            if (y[0] < 0.3 || y[0] > 2.5 || std::abs(y[1]) > 2.5) continue;
            const double ex = std::sqrt(y[0]) * std::exp(-kPi * (y[0] * y[0] + y[1] * y[1]));
            num = std::max(num, std::abs(G.values[p] - ex));
            den = std::max(den, ex);
        }
        rep.add("transforms.fko.gaussian", "f(exp X) sqrt(Theta(X)) = e^{-pi |X|^2} => F_KO f(a,x) = sqrt(a) e^{-pi(a^2+x^2)}",
                num / den, 1e-6, meta, "sup over 0.3 <= a <= 2.5, |x| <= 2.5");
        rep.add("transforms.fko.zero", "F_KO(0) = 0",
                norm(fourier_kirillov(ctx, GroupFunction::zero(E), FkoMode::Fft)), 0.0, meta);
    }

    {  // translation covariance of F_KO, level 2, analytic resampling
        const TransformContext ctx = transform_tier(2, o.sign);
        const GroupDescriptor& d = ctx.descriptor();
        const GridPtr& O = ctx.orbit_grid();
        const auto fn = [&](const GroupPoint& g) {
            const AlgebraVec X = log(d, g);
            const double a = X[0] - 0.2, b = X[1] + 0.3;
            return std::exp(-2.0 * a * a - 0.5 * b * b) * std::polar(1.0, -2 * kPi * 0.7 * X[1] + 0.4 * X[0]);
        };
        const GroupPoint x{std::exp(0.25), 0.3};
        std::vector<GroupPoint> yx;
        for (int p = 0; p < O->size(); ++p) yx.push_back(mul(d, O->point(p), x));
        const VecC lhs = fourier_kirillov_points(ctx, sample(ctx.exp_grid(), fn), yx);
        const auto psi = sample(ctx.exp_grid(), [&](const GroupPoint& g) { return fn(mul(d, mul(d, inv(d, x), g), x)); });
        const VecC rhs = fourier_kirillov_points(ctx, psi, grid_points(*O)) * std::sqrt(modular(d, x));
        rep.add("transforms.fko.translation", "R_x F_KO(f) = sqrt(Delta(x)) F_KO(Psi_x f)", detail::rel(lhs, rhs), 1e-2,
                detail::tier_label(ctx, "affine L2"), "x = (e^0.25, 0.3), Psi_x f(g) = f(x^-1 g x)");
    }

    {  // Fourier-Wigner over levels 1-3
        std::vector<double> iso1, iso3, li1, li3;
        for (int L = 1; L <= 3; ++L) {
            const TransformContext ctx = transform_tier(L, o.sign);
            const CarrierPtr c = ctx.rep().carrier();
            const KernelOperator A1 = rank_one(gaussian_log(c, {0.1, 0.3, 2.0}), gaussian_log(c, {-0.1, 0.3}));
            const KernelOperator A3 = A1 + rank_one(gaussian_log(c, {0.0, 0.35}), gaussian_log(c, {0.2, 0.3, -1.0})) +
                                      rank_one(gaussian_log(c, {-0.3, 0.3, 1.0}), gaussian_log(c, {0.3, 0.4})) * cplx(0.5, 0.5);
            for (const auto& [A, iso, li] : {std::tie(A1, iso1, li1), std::tie(A3, iso3, li3)}) {
                const GroupFunction h = fourier_wigner(ctx, A);
                iso.push_back(std::abs(norm(h) - hs_norm(A)) / hs_norm(A));
                li.push_back(detail::rel(fourier_wigner_inv(ctx, h), A));
            }
        }
        const std::string meta = "affine L3: carrier 256, lattice 257x257";
        const auto both = [&](const std::string& id, const std::string& anchor, const std::vector<double>& e) {
            rep.add(id, anchor, e.back(), 1e-2, meta, "levels 1-3: " + detail::join(e));
            rep.add(id + ".refinement", anchor, detail::decrease_ratio(e), 1.0, "levels 1-3",
                    "largest ratio of consecutive errors");
        };
        both("transforms.fw.isometry.rank1", "||F_W(A)||_{L^2_r} = ||A||_{S^2}", iso1);
        both("transforms.fw.isometry.rank3", "||F_W(A)||_{L^2_r} = ||A||_{S^2}", iso3);
        both("transforms.fw.left_inverse.rank1", "F_W^-1 F_W = id on S^2", li1);
        both("transforms.fw.left_inverse.rank3", "F_W^-1 F_W = id on S^2", li3);
    }

    {  // dual paths and wavelet reduction, level 1
        const TransformContext ctx = transform_tier(1, o.sign);
        const std::string meta = detail::tier_label(ctx, "affine L1");
        const CarrierPtr c = ctx.rep().carrier();
        const StateVector psi = gaussian_log(c, {0.1, 0.3, 2.0}), phi = gaussian_log(c, {-0.1, 0.3});
        const KernelOperator A = rank_one(psi, phi);
        const GroupFunction tr = fourier_wigner(ctx, A);
        rep.add("transforms.fw.dual_path", "F_W(A)(x) = tr(A D pi(x)) vs the kernel integral",
                detail::rel(fourier_wigner_kernel(ctx.rep(), sampled_kernel(A), ctx.exp_grid()), tr), 1e-8, meta);
        const GroupFunction w = wavelet(ctx.rep(), psi, phi, ctx.exp_grid());
        rep.add("transforms.fw.wavelet", "F_W(psi (x) D^-1 phi)(x) = W_phi psi(x)",
                detail::rel(fourier_wigner(ctx, rank_one(psi, ctx.rep().apply_duflo(-1, phi))), w), 1e-10, meta);

        const GroupDescriptor& d = ctx.descriptor();
        const auto fn = [&](const GroupPoint& g) {
            const AlgebraVec X = log(d, g);
            return std::exp(-2.0 * X[0] * X[0] - 0.5 * (X[1] - 0.2) * (X[1] - 0.2)) * std::polar(1.0, -2 * kPi * X[1]);
        };
        const GroupPoint x{std::exp(2 * c->axes()[0].step), 0.25};
        const KernelOperator lhs = compose(ctx.rep().pi(x), fourier_wigner_inv(ctx, sample(ctx.exp_grid(), fn)));
        const KernelOperator rhs =
            fourier_wigner_inv(ctx, sample(ctx.exp_grid(), [&](const GroupPoint& g) { return fn(mul(d, g, x)); }));
        rep.add("transforms.fw_inv.translation", "pi(x) F_W^-1(f) = F_W^-1(R_x f)", detail::rel(lhs, rhs), 1e-2, meta,
                "x = (e^{2 dt}, 0.25)");
    }

    {  // projection theorem over levels 1-3
        std::vector<double> e;
        const auto bump1 = [](double z) { return std::abs(z) < 1 ? std::exp(1 - 1 / (1 - z * z)) : 0.0; };
        for (int L = 1; L <= 3; ++L) {
            const TransformContext ctx = transform_tier(L, o.sign);
            const GridPtr& E = ctx.exp_grid();
            GroupFunction f = GroupFunction::zero(E);
            for (int i = 0; i < f.size(); ++i) {
                const auto& c = E->coords(i);
                f.values[i] = bump1(c[0] / 0.8) * bump1(c[1] / 3.0) * std::polar(1.0, -2 * kPi * 1.5 * c[1]);
            }
            const GroupFunction pk = fourier_kirillov_inv(ctx, fourier_kirillov(ctx, f, FkoMode::Fft), FkoMode::Fft);
            const GroupFunction pw = fourier_wigner(ctx, fourier_wigner_inv(ctx, f));
            e.push_back(detail::rel(pw, pk));
        }
        const std::string anchor = "F_KO^-1(F_KO(f)) = F_W(F_W^-1(f))";
        rep.add("transforms.projection_theorem", anchor, e.back(), 1e-2, "affine L3: carrier 256, lattice 257x257",
                "compact bump modulated into the carrier band; levels 1-3: " + detail::join(e));
        rep.add("transforms.projection_theorem.refinement", anchor, detail::decrease_ratio(e), 1.0, "levels 1-3",
                "largest ratio of consecutive errors");
    }

    {  // shearlet tier
        const Representation R(GroupDescriptor::shearlet(o.sign), shearlet_carrier());
        const GridPtr G = shearlet_lattice(o.sign);
        const CarrierPtr c = R.carrier();
        const GaussianSpec s1{0.0, 0.5, 1.0, 0.3, 0.8}, s2{0.2, 0.5, 0.0, -0.2, 0.8};
        const StateVector psi = gaussian_log(c, s1), phi = gaussian_log(c, s2);
        const std::string meta = "shearlet: carrier 32x32, lattice 16^4";
        double un = 0;
        for (int i = 0; i < G->size(); ++i) {
            const GroupPoint& g = G->point(i);
            if (std::abs(std::log(g[0])) > 1.0 || std::abs(g[1]) > 1.0) continue;
            un = std::max(un, std::abs(norm(R.apply(g, psi)) / norm(psi) - 1.0));
        }
        rep.add("transforms.shearlet.unitarity", "||pi(x) psi|| = ||psi||", un, 5e-2, meta,
                "lattice points with |ln a| <= 1, |s| <= 1");
        const KernelOperator A = rank_one(psi, phi);
        const GroupFunction tr = fourier_wigner(R, A, G);
        rep.add("transforms.shearlet.dual_path", "K_A((ab, t + s sqrt(b)), (b, t)) kernel route vs tr(A D pi(x))",
                detail::rel(fourier_wigner_kernel(R, sampled_kernel(A), G), tr), 1e-8, meta);
        const KernelFn K = [&](const CarrierPoint& p, const CarrierPoint& q) {
            return gaussian_value(s1, std::log(p[0]), p[1], true) * std::conj(gaussian_value(s2, std::log(q[0]), q[1], true));
        };
        rep.add("transforms.shearlet.kernel_analytic", "kernel route with the analytic kernel vs tr(A D pi(x))",
                detail::rel(fourier_wigner_kernel(R, K, G), tr), 5e-2, meta);
    }
    return rep;
}

// ---------------------------------------------------------------- quant

inline VerificationReport verify_quant(const VerifyOptions& o) {
    VerificationReport rep;
    const auto ctx2 = std::make_shared<const TransformContext>(transform_tier(2, o.sign));
    const auto q = std::make_shared<const Quantizer>(ctx2);
    const std::string m2 = detail::tier_label(*ctx2, "affine L2");
    const CarrierPtr c = q->carrier();
    const GroupDescriptor& d = ctx2->descriptor();
    const StateVector psi = gaussian_log(c, {0.1, 0.3, 2.0}), phi = gaussian_log(c, {-0.1, 0.3});
    const StateVector psi2 = gaussian_log(c, {0.0, 0.35, 1.0}), phi2 = gaussian_log(c, {0.05, 0.3, 0.5});
    const KernelOperator R1 = rank_one(psi, phi);
    const GroupFunction W = q->wigner(psi, phi);
    const KernelOperator A = q->quantize(W);

    rep.add("quant.wigner_quantize", "A_{W(psi,phi)} = psi (x) phi", detail::rel(A, R1), 1e-2, m2);
    const GroupFunction W2 = q->wigner(psi2, phi2);
    rep.add("quant.moyal", "<W(psi1,phi1), W(psi2,phi2)> = <psi1,psi2> conj<phi1,phi2>",
            detail::rel(inner(W, W2), inner(psi, psi2) * std::conj(inner(phi, phi2))), 1e-2, m2);
    const GroupFunction f = W + q->wigner(psi2) * cplx(0.5, 0.2);
    rep.add("quant.pairing", "<f, W(phi,psi)> = <A_f psi, phi>",
            detail::rel(inner(f, q->wigner(phi2, psi2)), inner(apply(q->quantize(f), psi2), phi2)), 1e-2, m2);
    rep.add("quant.adjoint", "A_f^* = A_{conj f}", detail::rel(adjoint(q->quantize(f)), q->quantize(f.conj())), 1e-8, m2);
    {
        const GroupPoint x{std::exp(2 * c->axes()[0].step), 0.3};
        const KernelOperator pi = q->rep().pi(x);
        rep.add("quant.translation", "pi(x)^* A_f pi(x) = A_{R_{x^-1} f}",
                detail::rel(q->quantize(q->translate_symbol(W, inv(d, x), Side::Right)), compose(compose(adjoint(pi), A), pi)),
                1e-2, m2, "x = (e^{2 dt}, 0.3), band-limited translation");
    }
    {
        const GroupFunction Wc = q->dequantize_closed_form(R1, q->symbol_grid());
        double num = 0, mx = 0;
        for (int i = 0; i < W.size(); ++i) {
            const GroupPoint& g = W.grid->point(i);
            if (g[0] < 0.3 || g[0] > 3.0 || std::abs(g[1]) > 4.0) continue;
            num = std::max(num, std::abs(W.values[i] - Wc.values[i]));
            mx = std::max(mx, std::abs(W.values[i]));
        }
        rep.add("quant.closed_form_dequantize",
                "f_A(a,x) = int K_A(a u e^u/(e^u - 1), a u/(e^u - 1)) e^{-2 pi i x u} du vs F_KO F_W", num / mx, 1e-4, m2,
                "sup over 0.3 <= a <= 3, |x| <= 4, relative to the sup of the symbol");
    }
    rep.add("quant.wigner.conjugate", "conj W(psi,phi) = W(phi,psi)", detail::rel(W.conj(), q->wigner(phi, psi)), 1e-10, m2);
    {
        const GroupFunction Wp = q->wigner(psi);
        rep.add("quant.wigner.real", "W(psi,psi) is real", Wp.values.imag().cwiseAbs().maxCoeff() / Wp.values.cwiseAbs().maxCoeff(),
                1e-10, m2);
        const GroupFunction s = q->dequantize(rank_one(psi, psi) + rank_one(phi2, phi2) * cplx(0.5));
        rep.add("quant.self_adjoint_real", "S = S^* => a_S real", s.values.imag().cwiseAbs().maxCoeff() / s.values.cwiseAbs().maxCoeff(),
                1e-10, m2);
    }
    rep.add("quant.wigner.mass", "int W(psi,phi) dmu_r = <psi,phi>", detail::rel(integrate_right(W), inner(psi, phi)), 1e-2, m2);

    {  // parity
        const KernelOperator P = q->parity(R1);
        rep.add("quant.parity.symbol", "a_{S-check} = (a_S)-check", detail::rel(q->dequantize(P), q->involuted_symbol(R1)),
                1e-10, m2, "the involuted symbol is not in the discrete symbol image; error is its out-of-image part");
        rep.add("quant.parity.involutive", "S-check-check = S", detail::rel(q->parity(P), R1), 1e-2, m2);
        const KernelOperator Pp = q->parity(rank_one(psi, psi));
        rep.add("quant.parity.self_adjoint", "(psi (x) psi)-check is self-adjoint", detail::rel(adjoint(Pp), Pp), 1e-8, m2);
    }

    {  // Wigner orthonormal basis, weak identity, uniqueness
        const auto basis = hermite_basis(c, 4, 0.0, 0.3);
        std::vector<GroupFunction> Wk;
        for (const auto& a : basis)
            for (const auto& b : basis) Wk.push_back(q->wigner(a, b));
        double off = 0, diag = 0;
        for (std::size_t i = 0; i < Wk.size(); ++i)
            for (std::size_t j = 0; j < Wk.size(); ++j) {
                const cplx g = inner(Wk[i], Wk[j]);
                if (i == j) diag = std::max(diag, std::abs(g - 1.0));
                else off = std::max(off, std::abs(g));
            }
        rep.add("quant.basis_transport", "{W(phi_i, phi_j)} is orthonormal", std::max(off, diag), 1e-2, m2,
                "4 orthonormal Hermite-in-log states, 16 Wigner functions");

        MatC B(c->size(), 4);
        for (int k = 0; k < 4; ++k) B.col(k) = basis[static_cast<std::size_t>(k)].values * std::sqrt(c->weight());
        std::vector<double> e;
        GroupFunction sum = GroupFunction::zero(q->symbol_grid());
        for (int n = 0; n < 4; ++n) {
            sum = sum + q->wigner(basis[static_cast<std::size_t>(n)]);
            const MatC C = B.adjoint() * q->quantize(sum).action() * B;
            e.push_back((C - MatC::Identity(4, 4)).norm());
        }
        rep.add("quant.weak_identity", "sum_k A_{W(phi_k)} -> I_H weakly", detail::decrease_ratio(e), 1.0, m2,
                "restricted to span(phi_1..phi_4), n = 1..4: " + detail::join(e));

        const GroupFunction Wpsi = q->wigner(psi);
        const StateVector same = psi * std::polar(1.0, 0.9);
        const double dsame = norm(Wpsi - q->wigner(same)) / norm(Wpsi);
        const StateVector other = psi + psi2 * cplx(0.05);
        const double dother = norm(Wpsi - q->wigner(other)) / norm(Wpsi);
        rep.add("quant.uniqueness.collinear", "W(psi) = W(phi) iff psi = c phi",
                dsame <= 1e-6 ? std::max(0.0, 1.0 - fidelity(psi, same)) : 1.0, 1e-4, m2, "phi = e^{0.9 i} psi");
        rep.add("quant.uniqueness.separated", "W(psi) = W(phi) iff psi = c phi",
                fidelity(psi, other) < 1.0 - 1e-4 ? 1e-6 / dother : 0.0, 1.0, m2,
                "phi = psi + 0.05 psi2; error is 1e-6 / relative Wigner distance");
    }

    {  // H*-algebra identities in the Galerkin frame
        const GalerkinQuantizer G(q, hermite_basis(c, 6, 0.0, 0.3));
        const std::string mg = m2 + ", 6-state Hermite frame";
        auto rng = detail::rng_for(o.seed, 301);
        std::normal_distribution<double> nd;
        const auto rnd = [&]() {
            MatC C(6, 6);
            for (int i = 0; i < 6; ++i)
                for (int j = 0; j < 6; ++j) C(i, j) = cplx(nd(rng), nd(rng));
            return G.dequantize(G.from_coefficients(C));
        };
        const GroupFunction fa = rnd(), fb = rnd(), fc = rnd();
        rep.add("quant.hstar.associativity", "(f # g) # h = f # (g # h)",
                detail::rel(G.twisted_mul(G.twisted_mul(fa, fb), fc), G.twisted_mul(fa, G.twisted_mul(fb, fc))), 1e-8, mg);
        rep.add("quant.hstar.adjoint_product", "conj(f # g) = conj g # conj f",
                detail::rel(G.twisted_mul(fa, fb).conj(), G.twisted_mul(fb.conj(), fa.conj())), 1e-8, mg);
        double sub = 0;
        for (int k = 0; k < 10; ++k) {
            const GroupFunction x = rnd(), y = rnd();
            sub = std::max(sub, norm(G.twisted_mul(x, y)) / (norm(x) * norm(y)));
        }
        rep.add("quant.hstar.submultiplicative", "||f # g|| <= ||f|| ||g||", sub, 1.0, mg,
                "largest ratio over 10 seeded pairs");
        rep.add("quant.hstar.inner_rule", "<f # g, h> = <g, conj f # h>",
                std::abs(inner(G.twisted_mul(fa, fb), fc) - inner(fb, G.twisted_mul(fa.conj(), fc))) /
                    (norm(fa) * norm(fb) * norm(fc)),
                1e-8, mg);
        rep.add("quant.galerkin.isometry", "<A_f, A_g>_{S^2} = <f, g>",
                detail::rel(hs_inner(G.quantize(fa), G.quantize(fb)), inner(fa, fb)), 1e-8, mg);
        const KernelOperator S = G.quantize(fa);
        rep.add("quant.galerkin.left_inverse", "A(a_S) = S", detail::rel(G.quantize(G.dequantize(S)), S), 1e-8, mg);
        const auto& b = G.basis();
        const KernelOperator Rk = rank_one(b[0] + b[2] * cplx(0.3), b[1] + b[0] * cplx(0.5));
        const GroupFunction h = G.fourier_wigner(Rk);
        rep.add("quant.twisted_conv", "f natural g = F_W(F_W^-1 f o F_W^-1 g)",
                detail::rel(G.twisted_conv(h, h), G.fourier_wigner(compose(Rk, Rk))), 1e-8, mg,
                "F_W realized as F_KO^-1 a in the Galerkin frame");
    }

    {  // closed-form quantization and two-path dequantization, level 1
        const auto ctx1 = std::make_shared<const TransformContext>(transform_tier(1, o.sign));
        const Quantizer q1(ctx1), q1d(ctx1, FkoMode::Direct);
        const std::string m1 = detail::tier_label(*ctx1, "affine L1");
        const CarrierPtr c1 = q1.carrier();
        const KernelOperator S1 = rank_one(gaussian_log(c1, {0.1, 0.3, 2.0}), gaussian_log(c1, {-0.1, 0.3}));
        const KernelOperator K =
            q1.quantize_closed_form([&](const GroupPoint& g) { return q1.dequantize_closed_form_at(S1, g); });
        rep.add("quant.closed_form_quantize", "K_A(r,s) from the inverse change of variables (u, a) -> (r, s)",
                detail::rel(K, S1), 1e-3, m1, "closed-form quantization of the closed-form symbol");
        rep.add("quant.dequantize_two_paths", "a_S = F_KO(F_W S), fft and direct quadrature",
                detail::rel(q1d.dequantize(S1), q1.dequantize(S1)), 1e-8, m1);
    }
    return rep;
}

// ---------------------------------------------------------------- qha

inline VerificationReport verify_qha(const VerifyOptions& o) {
    VerificationReport rep;
    const auto ctx = std::make_shared<const TransformContext>(transform_tier(1, o.sign));
    const auto q = std::make_shared<const Quantizer>(ctx);
    const std::string m1 = detail::tier_label(*ctx, "affine L1");
    const Representation& R = q->rep();
    const CarrierPtr c = q->carrier();
    const GridPtr& E = ctx->exp_grid();
    const StateVector psi = gaussian_log(c, {0.1, 0.3, 2.0}), phi = gaussian_log(c, {-0.1, 0.3});

    const GroupFunction lhs = conv_op_op(R, rank_one(psi, psi), rank_one(phi, phi), E);
    const GroupFunction w = wavelet(R, psi, phi, E);
    rep.add("qha.wigner_modulus", "W(psi) * W-check(phi)(x) = |W_phi psi(x)|^2",
            detail::rel(lhs.values, VecC(w.values.cwiseAbs2().cast<cplx>())), 1e-10, m1);

    const GroupFunction f = bump(E, {0.2, 0.3, 0, 0}, 0.3);
    const KernelOperator S = rank_one(psi, phi);
    const KernelOperator fS = conv_fn_op(R, f, S);
    rep.add("qha.adjoint_rule", "(f * S)^* = conj f * S^*", detail::rel(adjoint(fS), conv_fn_op(R, f.conj(), adjoint(S))),
            1e-10, m1);
    {
        const auto ev = eig_hermitian(conv_fn_op(R, f, rank_one(psi, psi)));
        rep.add("qha.positivity.fn_op", "f >= 0, S >= 0 => f * S >= 0", std::max(0.0, -ev.back().value), 1e-10, m1,
                "negative part of the smallest eigenvalue");
        const KernelOperator T = rank_one(psi, psi) + rank_one(phi, phi) * cplx(0.5);
        const KernelOperator P = rank_one(phi, phi) + rank_one(gaussian_log(c, {0.0, 0.4}), gaussian_log(c, {0.0, 0.4}));
        const GroupFunction tp = conv_op_op(R, T, P, E);
        double neg = 0;
        for (int i = 0; i < tp.size(); ++i) neg = std::max({neg, -tp.values[i].real(), std::abs(tp.values[i].imag())});
        rep.add("qha.positivity.op_op", "T, S >= 0 => T * S >= 0", neg, 1e-12, m1,
                "largest negative real part or imaginary part");
    }
    rep.add("qha.l1_bound", "||f * S||_{S^2} <= ||f||_{L^1_r} ||S||_{S^2}", hs_norm(fS) / (lp_norm(f, 1) * hs_norm(S)), 1.0, m1);
    rep.add("qha.conv_fn_op.symbol", "A_{f * g} = f * A_g", detail::rel(q->quantize(convolve_symbol(*q, f, q->dequantize(S))), fS),
            1e-2, m1, "band-limited evaluation of g at x y^-1");

    std::vector<GroupPoint> xs;
    for (int k = 0; k < 12; ++k) xs.push_back(GroupPoint{std::exp(-0.6 + 0.1 * k), -0.5 + 0.09 * k});
    {
        const GroupFunction fa = q->wigner(psi, phi);
        const GroupFunction gb = q->wigner(gaussian_log(c, {0.0, 0.4}), gaussian_log(c, {0.3, 0.35, -1.0}));
        rep.add("qha.conv_op_op.symbol", "A_f * A_g = f * g-check",
                detail::rel(conv_op_op_at(R, q->quantize(fa), q->quantize(gb), xs), convolve_involuted_symbols_at(*q, fa, gb, xs)),
                1e-2, m1, "12 points on a diagonal segment");
    }
    {
        const KernelOperator T = rank_one(psi, psi);
        const GroupFunction st = conv_op_op(R, S, T, E);
        const GroupFunction fst = convolve(f, st);
        VecC r3(static_cast<Eigen::Index>(xs.size()));
        for (std::size_t k = 0; k < xs.size(); ++k) r3[static_cast<Eigen::Index>(k)] = fst.at(xs[k]);
        rep.add("qha.associativity", "(f * S) * T = f * (S * T)", detail::rel(conv_op_op_at(R, fS, T, xs), r3), 1e-2, m1,
                "12 points on a diagonal segment");
    }
    {
        const KernelOperator T = rank_one(psi, psi), P = rank_one(phi, phi);
        const double triples[3][3] = {{1, 1, 1}, {2, 1, 2}, {2, 2, std::numeric_limits<double>::infinity()}};
        for (const auto& t : triples) {
            const VerificationReport y = young_bound_check(*q, T, P, t[0], t[1], t[2]);
            for (const CheckRecord& r : y.records())
                rep.add("qha." + r.id, r.anchor, r.error, r.base_tolerance, m1, r.note);
        }
    }
    {
        auto rng = detail::rng_for(o.seed, 401);
        for (int k = 0; k < 5; ++k) {
            const StateVector a = detail::random_state(c, rng, -0.3, 0.3);
            std::uniform_real_distribution<double> cu(-0.2, 0.2);
            const StateVector b = gaussian_log(c, {cu(rng), 0.3});
            VerificationReport t = trace_formula_check(*q, q->wigner(a, b), 1e-2, "qha.trace.s" + std::to_string(k));
            for (const CheckRecord& r : t.records())
                rep.add(r.id, r.anchor, r.error, r.base_tolerance, m1,
                        "seeded Wigner symbol; the 1/sqrt(Pf) factor is untestable since |Pf| = 1");
        }
        const auto basis = hermite_basis(c, 3, 0.0, 0.3);
        const GroupFunction fp = q->wigner(basis[0]) + q->wigner(basis[1]) * cplx(0.5) + q->wigner(basis[2]) * cplx(0.3);
        rep.add("qha.positive_quantization", "A_f >= 0 => ||f||_{L^2_r} <= int f dmu_r",
                norm(fp) / integrate_right(fp).real(), 1.0, m1, "f = W(phi_1) + 0.5 W(phi_2) + 0.3 W(phi_3)");
    }
    return rep;
}

// ---------------------------------------------------------------- apps

inline VerificationReport verify_apps(const VerifyOptions& o) {
    VerificationReport rep;
    const auto scalogram = [](const TransformContext& ctx, const StateVector& psi, const StateVector& phi) {
        GroupFunction s = wavelet(ctx.rep(), psi, phi, ctx.exp_grid());
        s.values = s.values.cwiseAbs2().cast<cplx>();
        return s;
    };
    const auto ctx = std::make_shared<const TransformContext>(transform_tier(1, o.sign));
    const std::string m1 = detail::tier_label(*ctx, "affine L1");
    const CarrierPtr c = ctx->rep().carrier();
    {
        const StateVector psi = gaussian_log(c, {0.1, 0.3, 2.4}), phi = gaussian_log(c, {0.0, 0.3});
        RetrievalConfig cfg;
        cfg.reference = phi;
        const RetrievalResult r = phase_retrieve(*ctx, scalogram(*ctx, psi, phi), phi, cfg, psi);
        rep.add("apps.phase_retrieval.fidelity", "|W_phi psi|^2 determines psi up to a global phase", 1.0 - *r.fidelity,
                1e-2, m1, "error is 1 - fidelity; kept singular values " + std::to_string(r.rank));
        const StateVector psi2 = psi * std::polar(1.0, 0.7);
        const RetrievalResult r2 = phase_retrieve(*ctx, scalogram(*ctx, psi2, phi), phi, cfg, psi2);
        rep.add("apps.phase_retrieval.global_phase", "|W_phi(e^{i theta} psi)|^2 = |W_phi psi|^2",
                std::abs(*r2.fidelity - *r.fidelity), 1e-10, m1, "theta = 0.7");
        bool threw = false;
        try {
            phase_retrieve(*ctx, GroupFunction::zero(ctx->exp_grid()), phi, cfg);
        } catch (const RetrievalError&) {
            threw = true;
        }
        rep.add("apps.phase_retrieval.zero_scalogram", "zero scalogram leaves rank 0", threw ? 0.0 : 1.0, 0.0, m1);

        std::vector<double> fid;
        for (int L = 0; L < 3; ++L) {
            const TransformContext cx = transform_tier(L, o.sign);
            const CarrierPtr cc = cx.rep().carrier();
            const StateVector p = gaussian_log(cc, {0.1, 0.3, 2.4}), w = gaussian_log(cc, {0.0, 0.3});
            RetrievalConfig cf;
            cf.reference = w;
            fid.push_back(*phase_retrieve(cx, scalogram(cx, p, w), w, cf, p).fidelity);
        }
        double drop = 0;
        for (std::size_t k = 1; k < fid.size(); ++k) drop = std::max(drop, fid[k - 1] - fid[k]);
        rep.add("apps.phase_retrieval.refinement", "fidelity is non-decreasing in carrier resolution", drop, 0.0,
                "levels 0-2", "largest fidelity drop; fidelities " + detail::join(fid));
    }
    {
        const auto q = std::make_shared<const Quantizer>(ctx);
        const GalerkinQuantizer G(q, hermite_basis(c, 6, 0.0, 0.3));
        const std::string mg = m1 + ", 6-state Hermite frame";
        const auto& b = G.basis();
        const GroupFunction f = G.dequantize(rank_one(b[0], b[0]) * cplx(2.0) + rank_one(b[1], b[1]));
        const WignerApprox wa = wigner_approx(G, f);
        const std::string anchor = "inf_psi ||f - W(psi)|| = sqrt(||f||^2 - lambda_max^+(A_f)^2)";
        rep.add("apps.wigner_approx.distance", anchor, std::abs(wa.distance - 1.0), 1e-6, mg, "f = a_{2 phi1 (x) phi1 + phi2 (x) phi2}");
        rep.add("apps.wigner_approx.minimizer", anchor, std::max(0.0, 1.0 - fidelity(wa.minimizer, b[0])), 1e-6, mg, "error is 1 - fidelity with phi1");
        rep.add("apps.wigner_approx.multiplicity", anchor, std::abs(wa.multiplicity - 1.0), 0.0, mg);
        rep.add("apps.wigner_approx.formula", anchor, std::abs(norm(f - G.wigner(wa.minimizer)) - wa.distance), 1e-6, mg,
                "distance formula vs direct ||f - W(minimizer)||");
        auto rng = detail::rng_for(o.seed, 501);
        std::normal_distribution<double> nd;
        double best = std::numeric_limits<double>::infinity();
        for (int k = 0; k < 1000; ++k) {
            VecC v = VecC::Zero(c->size());
            for (int j = 0; j < 6; ++j) v += b[static_cast<std::size_t>(j)].values * cplx(nd(rng), nd(rng)) * (j < 2 ? 1.0 : 0.3);
            StateVector p(c, v);
            p = p * cplx(std::sqrt(2.0) / norm(p));
            best = std::min(best, norm(f - G.wigner(p)));
        }
        rep.add("apps.wigner_approx.probe", anchor, std::max(0.0, wa.distance - best), 1e-6, mg,
                "eigen answer minus the best of 1000 seeded rank-one probes");
        const StateVector ps = b[0] * cplx(0.8) + b[2] * cplx(0.0, 0.6);
        const WignerApprox wp = wigner_approx(G, G.wigner(ps));
        rep.add("apps.wigner_approx.wigner_input", anchor, std::max(wp.distance, std::max(0.0, 1.0 - fidelity(wp.minimizer, ps))), 1e-6, mg,
                "f = W(psi); larger of distance and 1 - fidelity");
    }
    {
        const Representation& R = ctx->rep();
        const auto hb = hermite_basis(c, 8, 0.0, 0.4);
        auto rng = detail::rng_for(o.seed, 601);
        std::uniform_real_distribution<double> U(0.0, 1.0);
        for (int k = 0; k < 20; ++k) {
            const StateVector p1 = gaussian_log(c, {-0.3 + 0.6 * U(rng), 0.2 + 0.3 * U(rng), -2 + 4 * U(rng)});
            const StateVector p2 = gaussian_log(c, {-0.3 + 0.6 * U(rng), 0.2 + 0.3 * U(rng), -2 + 4 * U(rng)});
            char id[48];
            std::snprintf(id, sizeof id, "apps.intersection.pair%02d", k);
            rep.merge(intersection_test(R, ctx->exp_grid(), p1, p2, hb, 5, o.seed + static_cast<std::uint64_t>(k), 0.1, id));
        }
        const StateVector phi = gaussian_log(c, {0.0, 0.3});
        rep.merge(intersection_test(R, ctx->exp_grid(), phi, phi * cplx(2.0), hb, 5, o.seed, 0.1, "apps.intersection.scaled"));

        const auto q = std::make_shared<const Quantizer>(ctx);
        const auto ob = hermite_basis(c, 2, 0.0, 0.3);
        const StateVector s1 = gaussian_log(c, {0.1, 0.3, 1.0}), s2 = gaussian_log(c, {-0.1, 0.35});
        const GroupFunction w1 = q->wigner(s1, ob[0]), w2 = q->wigner(s2, ob[1]);
        rep.add("apps.intersection.orthogonal", "phi1 _|_ phi2 => <W(psi1,phi1), W(psi2,phi2)> = 0",
                std::abs(inner(w1, w2)) / (norm(w1) * norm(w2)), 1e-2, m1);
    }
    return rep;
}

// ---------------------------------------------------------------- driver

struct SuiteTiming {
    std::string suite;
    double seconds = 0.0;
};

inline VerificationReport verify(Suite s, const VerifyOptions& o, std::vector<SuiteTiming>* timing = nullptr) {
    VerificationReport rep(o.tolerance_scale);
    rep.set_overrides(o.overrides);
    const std::pair<Suite, std::function<VerificationReport(const VerifyOptions&)>> suites[] = {
        {Suite::Groups, verify_groups}, {Suite::Transforms, verify_transforms}, {Suite::Quant, verify_quant},
        {Suite::Qha, verify_qha},       {Suite::Apps, verify_apps}};
    for (const auto& [id, run] : suites) {
        if (s != Suite::All && s != id) continue;
        const auto t0 = std::chrono::steady_clock::now();
        rep.merge(run(o));
        if (timing)
            timing->push_back({to_string(id), std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()});
    }
    return rep;
}

}  // namespace orbitq
