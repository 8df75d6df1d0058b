#pragma once

// Square-integrable representations realized on a carrier grid.
//
//   affine    pi(a,x) psi(r)      = e^{-+2 pi i x r} psi(a r)
//   shearlet  pi(a,s,x) phi(b,t)  = e^{-+2 pi i (b x1 + sqrt(b) t x2)} phi(b a, t + s sqrt(b))
//
// Every pi(g) factors as (modulation diagonal) * (dilation stencil).  The
// stencil depends only on the dilation part of g, which lets lattice loops
// share one stencil across all translations.

#include "groupfn.hpp"

#include <map>

namespace orbitq {

struct SparseRows {
    std::vector<int> start{0};
    std::vector<int> col;
    std::vector<double> w;

    int rows() const { return static_cast<int>(start.size()) - 1; }
};

class Representation {
public:
    Representation(const GroupDescriptor& d, CarrierPtr carrier) : desc_(d), carrier_(std::move(carrier)) {
        if (!d.quantizable()) throw GroupError("heisenberg representation is not square integrable");
        if (!carrier_) throw GridError("missing carrier grid");
        const auto& ax = carrier_->axes();
        if (d.name == GroupName::Affine && (ax.size() != 1 || ax[0].kind != AxisKind::Log))
            throw GridError("affine carrier needs one log axis");
        if (d.name == GroupName::Shearlet &&
            (ax.size() != 2 || ax[0].kind != AxisKind::Log || ax[1].kind != AxisKind::Linear))
            throw GridError("shearlet carrier needs a log axis and a linear axis");
    }

    const GroupDescriptor& descriptor() const { return desc_; }
    const CarrierPtr& carrier() const { return carrier_; }
    int size() const { return carrier_->size(); }

    // dilation part of g, used to group lattice points that share a stencil
    std::pair<double, double> dilation_key(const GroupPoint& g) const {
        return {g[0], desc_.name == GroupName::Shearlet ? g[1] : 0.0};
    }

    SparseRows dilation(const GroupPoint& g) const {
        detail::check_point(desc_, g);
        SparseRows S;
        const auto& ax = carrier_->axes();
        const int n = size();
        S.col.reserve(static_cast<std::size_t>(n) * 4);
        S.w.reserve(static_cast<std::size_t>(n) * 4);
        const double la = std::log(g[0]);
        if (desc_.name == GroupName::Affine) {
            for (int m = 0; m < n; ++m) {
                const Stencil1 s = catmull_rom(ax[0].coord(m) + la, ax[0].min, ax[0].step, ax[0].count);
                for (int k = 0; k < s.n; ++k) {
                    S.col.push_back(s.idx[k]);
                    S.w.push_back(s.w[k]);
                }
                S.start.push_back(static_cast<int>(S.col.size()));
            }
        } else {
            for (int m = 0; m < n; ++m) {
                const int ib = carrier_->sub(m, 0), it = carrier_->sub(m, 1);
                const double b = ax[0].value(ib);
                const Stencil1 sb = catmull_rom(ax[0].coord(ib) + la, ax[0].min, ax[0].step, ax[0].count);
                const Stencil1 st =
                    catmull_rom(ax[1].coord(it) + g[1] * std::sqrt(b), ax[1].min, ax[1].step, ax[1].count);
                for (int p = 0; p < sb.n; ++p)
                    for (int q = 0; q < st.n; ++q) {
                        S.col.push_back(carrier_->index(sb.idx[p], st.idx[q]));
                        S.w.push_back(sb.w[p] * st.w[q]);
                    }
                S.start.push_back(static_cast<int>(S.col.size()));
            }
        }
        return S;
    }

    double phase(const GroupPoint& g, int m) const {
        const double sg = desc_.sign_value();
        if (desc_.name == GroupName::Affine) return -sg * 2 * kPi * g[1] * carrier_->value(m, 0);
        const double b = carrier_->value(m, 0), t = carrier_->value(m, 1);
        return -sg * 2 * kPi * (b * g[2] + std::sqrt(b) * t * g[3]);
    }

    void modulation(const GroupPoint& g, VecC& out) const {
        const int n = size();
        out.resize(n);
        for (int m = 0; m < n; ++m) out[m] = std::polar(1.0, phase(g, m));
    }

    // dense matrix acting on sample vectors
    MatC action(const GroupPoint& g) const {
        const SparseRows S = dilation(g);
        VecC mod;
        modulation(g, mod);
        MatC P = MatC::Zero(size(), size());
        for (int m = 0; m < size(); ++m)
            for (int e = S.start[m]; e < S.start[m + 1]; ++e) P(m, S.col[e]) += mod[m] * S.w[e];
        return P;
    }

    KernelOperator pi(const GroupPoint& g) const { return KernelOperator::from_action(carrier_, action(g)); }

    StateVector apply(const GroupPoint& g, const StateVector& psi) const {
        require_same(carrier_, psi.grid);
        const SparseRows S = dilation(g);
        VecC out(size());
        for (int m = 0; m < size(); ++m) {
            cplx s = 0.0;
            for (int e = S.start[m]; e < S.start[m + 1]; ++e) s += S.w[e] * psi.values[S.col[e]];
            out[m] = std::polar(1.0, phase(g, m)) * s;
        }
        return {carrier_, std::move(out)};
    }

    // multiplier of D^p: r^{p/2} (affine), b^p (shearlet)
    Eigen::VectorXd duflo_diag(int power) const {
        if (power == 0 || std::abs(power) > 2) throw GridError("duflo power must be in {-2,-1,1,2}");
        Eigen::VectorXd d(size());
        for (int m = 0; m < size(); ++m) {
            const double r = carrier_->value(m, 0);
            d[m] = desc_.name == GroupName::Affine ? std::pow(r, 0.5 * power) : std::pow(r, power);
        }
        return d;
    }

    KernelOperator duflo(int power) const {
        return KernelOperator::from_action(carrier_, MatC(duflo_diag(power).cast<cplx>().asDiagonal()));
    }

    StateVector apply_duflo(int power, const StateVector& psi) const {
        require_same(carrier_, psi.grid);
        return {carrier_, psi.values.cwiseProduct(duflo_diag(power).cast<cplx>())};
    }

    // pi(g)^* P pi(g) for an action matrix P
    MatC conjugate_action(const GroupPoint& g, const MatC& P) const {
        const SparseRows S = dilation(g);
        VecC mod;
        modulation(g, mod);
        const int n = size();
        MatC Y = MatC::Zero(n, n);
        for (int m = 0; m < n; ++m)
            for (int e = S.start[m]; e < S.start[m + 1]; ++e) Y.col(S.col[e]) += P.col(m) * (mod[m] * S.w[e]);
        MatC Z = MatC::Zero(n, n);
        for (int m = 0; m < n; ++m)
            for (int e = S.start[m]; e < S.start[m + 1]; ++e)
                Z.row(S.col[e]) += Y.row(m) * (std::conj(mod[m]) * S.w[e]);
        return Z;
    }

private:
    GroupDescriptor desc_;
    CarrierPtr carrier_;
};

using RepPtr = std::shared_ptr<const Representation>;

// Lattice points grouped by the dilation part of an arbitrary map of the point.
struct Slices {
    std::vector<std::vector<int>> members;
    std::vector<GroupPoint> anchor;
};

inline Slices slice_points(const Representation& rep, const std::vector<GroupPoint>& pts) {
    std::map<std::pair<double, double>, int> index;
    Slices s;
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
        const auto key = rep.dilation_key(pts[static_cast<std::size_t>(i)]);
        auto it = index.find(key);
        if (it == index.end()) {
            it = index.emplace(key, static_cast<int>(s.members.size())).first;
            s.members.emplace_back();
            s.anchor.push_back(pts[static_cast<std::size_t>(i)]);
        }
        s.members[static_cast<std::size_t>(it->second)].push_back(i);
    }
    return s;
}

inline std::vector<GroupPoint> grid_points(const GroupGrid& G) {
    std::vector<GroupPoint> p(static_cast<std::size_t>(G.size()));
    for (int i = 0; i < G.size(); ++i) p[static_cast<std::size_t>(i)] = G.point(i);
    return p;
}

// W_phi psi(g) = <pi(g) psi, phi>
inline GroupFunction wavelet(const Representation& rep, const StateVector& psi, const StateVector& phi,
                             const GridPtr& grid) {
    require_same(rep.carrier(), psi.grid);
    require_same(rep.carrier(), phi.grid);
    const auto pts = grid_points(*grid);
    const Slices sl = slice_points(rep, pts);
    const int n = rep.size();
    const double w = rep.carrier()->weight();
    VecC out(grid->size());
    parallel_for(sl.members.size(), [&](std::size_t k) {
        const SparseRows S = rep.dilation(sl.anchor[k]);
        VecC p(n);
        for (int m = 0; m < n; ++m) {
            cplx s = 0.0;
            for (int e = S.start[m]; e < S.start[m + 1]; ++e) s += S.w[e] * psi.values[S.col[e]];
            p[m] = s * std::conj(phi.values[m]) * w;
        }
        for (int i : sl.members[k]) {
            cplx s = 0.0;
            for (int m = 0; m < n; ++m)
                if (p[m] != cplx(0.0)) s += std::polar(1.0, rep.phase(pts[static_cast<std::size_t>(i)], m)) * p[m];
            out[i] = s;
        }
    });
    return {grid, std::move(out)};
}

// sum_i f(g_i) pi(g_i) w_i with left (dmu_l) or right (dmu_r) weights
inline KernelOperator integrated(const Representation& rep, const GroupFunction& f, Side side) {
    if (!(f.grid->descriptor() == rep.descriptor())) throw GridError("function and representation differ in group");
    const auto pts = grid_points(*f.grid);
    const Slices sl = slice_points(rep, pts);
    const int n = rep.size();
    MatC total = MatC::Zero(n, n);
    for (std::size_t k = 0; k < sl.members.size(); ++k) {
        std::vector<int> live;
        for (int i : sl.members[k])
            if (f.values[i] != cplx(0.0)) live.push_back(i);
        if (live.empty()) continue;
        VecC c = VecC::Zero(n);
        parallel_for(static_cast<std::size_t>(n), [&](std::size_t mm) {
            const int m = static_cast<int>(mm);
            cplx s = 0.0;
            for (int i : live)
                s += f.values[i] * f.grid->weight(i, side) *
                     std::polar(1.0, rep.phase(pts[static_cast<std::size_t>(i)], m));
            c[m] = s;
        });
        const SparseRows S = rep.dilation(sl.anchor[k]);
        for (int m = 0; m < n; ++m)
            for (int e = S.start[m]; e < S.start[m + 1]; ++e) total(m, S.col[e]) += c[m] * S.w[e];
    }
    return KernelOperator::from_action(rep.carrier(), total);
}

inline KernelOperator integrated_left(const Representation& rep, const GroupFunction& f) {
    return integrated(rep, f, Side::Left);
}
inline KernelOperator integrated_right(const Representation& rep, const GroupFunction& f) {
    return integrated(rep, f, Side::Right);
}

}  // namespace orbitq
