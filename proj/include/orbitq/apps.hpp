#pragma once

// Scalogram phase retrieval, best Wigner approximation, and wavelet-space
// intersection checks.

#include "qha.hpp"

#include <optional>
#include <random>

namespace orbitq {

class RetrievalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RetrievalConfig {
    double regularization = 1e-6;  // relative singular-value cutoff
    std::optional<StateVector> reference;
    double fidelity_floor = 0.99;
};

struct RetrievalResult {
    StateVector psi;
    std::optional<double> fidelity;
    bool below_floor = false;
    int rank = 0;                 // singular values kept in the right inversion
    Eigen::VectorXd singular_values;
    double leading_eigenvalue = 0.0;
};

inline double fidelity(const StateVector& a, const StateVector& b) {
    const double na = norm(a), nb = norm(b);
    if (na == 0.0 || nb == 0.0) return 0.0;
    return std::abs(inner(a, b)) / (na * nb);
}

// W(phi) = a_{phi (x) phi} sampled at the exponential lattice points
inline GroupFunction wigner_on_lattice(const TransformContext& ctx, const StateVector& phi) {
    const GroupFunction h = fourier_wigner(ctx, rank_one(phi, phi));
    return {ctx.exp_grid(), fourier_kirillov_points(ctx, h, grid_points(*ctx.exp_grid()))};
}

// Window admissibility on the carrier window: D^-1 phi finite and nonzero
inline bool window_admissible(const Representation& rep, const StateVector& phi) {
    const double n = norm(rep.apply_duflo(-1, phi));
    return std::isfinite(n) && n > 0.0 && std::isfinite(norm(rep.apply_duflo(1, phi)));
}

// W(psi) = F_W(pi(|W_phi psi|^2-check) pi_r(W(phi) Delta)^+ D), psi from the leading
// eigenpair of A_{W(psi)}.  The scalogram lives on the exponential lattice.
inline RetrievalResult phase_retrieve(const TransformContext& ctx, const GroupFunction& scalogram,
                                      const StateVector& phi, const RetrievalConfig& cfg,
                                      const std::optional<StateVector>& truth = std::nullopt) {
    const Representation& rep = ctx.rep();
    require_same(scalogram.grid, ctx.exp_grid());
    require_same(rep.carrier(), phi.grid);
    if (!(cfg.regularization >= 0.0 && cfg.regularization < 1.0)) throw RetrievalError("cutoff must lie in [0, 1)");
    if (!window_admissible(rep, phi)) throw RetrievalError("window is not admissible on the carrier");
    if (scalogram.values.cwiseAbs().maxCoeff() == 0.0) throw RetrievalError("zero scalogram leaves rank 0");

    const MatC P = integrated_left(rep, involution(scalogram)).action();
    const MatC R = integrated_right(rep, weight_modular(wigner_on_lattice(ctx, phi), 1.0)).action();
    Eigen::JacobiSVD<MatC> svd(R, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::VectorXd s = svd.singularValues();
    RetrievalResult out{StateVector::zero(rep.carrier()), std::nullopt, false, 0, s, 0.0};
    const double cut = cfg.regularization * s[0];
    VecC sinv = VecC::Zero(s.size());
    for (int k = 0; k < s.size(); ++k)
        if (s[k] > cut && s[k] > 0.0) {
            sinv[k] = 1.0 / s[k];
            ++out.rank;
        }
    if (out.rank == 0) throw RetrievalError("inversion cutoff leaves rank 0");
    const MatC Rp = svd.matrixV() * sinv.asDiagonal() * svd.matrixU().adjoint();
    const MatC X = P * Rp * rep.duflo_diag(1).cast<cplx>().asDiagonal();

    const GroupFunction w = fourier_wigner(ctx, KernelOperator::from_action(rep.carrier(), X));
    const KernelOperator B = fourier_wigner_inv(ctx, fourier_kirillov_inv_direct(ctx, w, ctx.exp_grid()));
    const KernelOperator H{B.grid, (B.matrix + B.matrix.adjoint()) * cplx(0.5)};
    const auto eig = eig_hermitian(H);
    out.leading_eigenvalue = eig.front().value;
    if (!(out.leading_eigenvalue > 0.0)) throw RetrievalError("reconstructed operator has no positive eigenvalue");
    StateVector psi = eig.front().vector * cplx(std::sqrt(out.leading_eigenvalue));
    if (cfg.reference) {
        const cplx z = inner(psi, *cfg.reference);
        if (std::abs(z) > 0.0) psi = psi * (std::abs(z) / z);
    }
    out.psi = psi;
    if (truth) {
        out.fidelity = fidelity(psi, *truth);
        out.below_floor = *out.fidelity < cfg.fidelity_floor;
    }
    return out;
}

struct WignerApprox {
    double distance = 0.0;
    StateVector minimizer;
    int multiplicity = 0;
    double lambda = 0.0;
};

// inf_psi ||f - W(psi)|| = sqrt(||f||^2 - lambda_max^+(A_f)^2), attained at sqrt(lambda) phi_max
template <class Q>
WignerApprox wigner_approx(const Q& q, const GroupFunction& f, double tol = 1e-8) {
    const KernelOperator A = q.quantize(f);
    const KernelOperator H{A.grid, (A.matrix + A.matrix.adjoint()) * cplx(0.5)};
    const auto eig = eig_hermitian(H);
    const double fn = norm(f);
    WignerApprox out{fn, StateVector::zero(A.grid), 0, 0.0};
    const double lmax = eig.front().value;
    if (!(lmax > 0.0)) return out;
    out.lambda = lmax;
    out.distance = std::sqrt(std::max(0.0, fn * fn - lmax * lmax));
    out.minimizer = eig.front().vector * cplx(std::sqrt(lmax));
    for (const auto& e : eig)
        if (std::abs(e.value - lmax) <= tol * std::max(1.0, lmax)) ++out.multiplicity;
    return out;
}

struct IntersectionTrial {
    double residual = 0.0;  // min ||W_{phi1} psi1 - W_{phi2} psi2|| / ||W_{phi1} psi1||
    double scale = 0.0;     // |<psi2, psi1>| / ||psi1||^2 of the minimizer
};

struct IntersectionResult {
    double defect = 0.0;  // 1 - |<phi1, phi2>| / (||phi1|| ||phi2||)
    std::vector<IntersectionTrial> trials;
    double min_residual() const {
        double m = std::numeric_limits<double>::infinity();
        for (const auto& t : trials) m = std::min(m, t.residual);
        return m;
    }
    double max_residual() const {
        double m = 0.0;
        for (const auto& t : trials) m = std::max(m, t.residual);
        return m;
    }
};

// For random psi1 in span(basis), least squares over psi2 in span(basis) of
// ||W_{phi1} psi1 - W_{phi2} psi2||.  The scalar c of the comparison is absorbed into psi2.
inline IntersectionResult intersection_probe(const Representation& rep, const GridPtr& grid, const StateVector& phi1,
                                             const StateVector& phi2, const std::vector<StateVector>& basis,
                                             int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("intersection test needs at least one trial");
    const int n = static_cast<int>(basis.size());
    const int M = grid->size();
    Eigen::VectorXd sw(M);
    for (int i = 0; i < M; ++i) sw[i] = std::sqrt(grid->weight_right(i));
    MatC B1(M, n), B2(M, n);
    for (int k = 0; k < n; ++k) {
        B1.col(k) = wavelet(rep, basis[static_cast<std::size_t>(k)], phi1, grid).values.cwiseProduct(sw.cast<cplx>());
        B2.col(k) = wavelet(rep, basis[static_cast<std::size_t>(k)], phi2, grid).values.cwiseProduct(sw.cast<cplx>());
    }
    const Eigen::ColPivHouseholderQR<MatC> qr(B2);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd;
    IntersectionResult out;
    out.defect = 1.0 - fidelity(phi1, phi2);
    for (int t = 0; t < trials; ++t) {
        VecC c(n);
        for (int k = 0; k < n; ++k) c[k] = cplx(nd(rng), nd(rng));
        const VecC w1 = B1 * c;
        const VecC c2 = qr.solve(w1);
        IntersectionTrial tr;
        tr.residual = (w1 - B2 * c2).norm() / w1.norm();
        tr.scale = std::abs(c2.dot(c)) / c.squaredNorm();
        out.trials.push_back(tr);
    }
    return out;
}

// PASS iff near-equality (residual <= 1e-8) happens exactly for collinear windows
// (defect <= 1e-10), and non-collinear windows keep every residual >= floor
inline VerificationReport intersection_test(const Representation& rep, const GridPtr& grid, const StateVector& phi1,
                                            const StateVector& phi2, const std::vector<StateVector>& basis,
                                            int trials, std::uint64_t seed, double floor = 0.1,
                                            const std::string& label = "intersection") {
    const IntersectionResult r = intersection_probe(rep, grid, phi1, phi2, basis, trials, seed);
    VerificationReport rep_out;
    const std::string anchor = "W_{phi1}(H) meets W_{phi2}(H) only at 0 unless phi1, phi2 are collinear";
    const std::string meta = "carrier " + std::to_string(rep.size()) + ", lattice " + std::to_string(grid->size());
    if (r.defect <= 1e-10)
        rep_out.add(label + ".collinear", anchor, r.max_residual(), 1e-8, meta);
    else
        rep_out.add(label + ".separated", anchor, floor / std::max(r.min_residual(), 1e-300), 1.0, meta,
                    "error is floor / min residual");
    return rep_out;
}

}  // namespace orbitq
