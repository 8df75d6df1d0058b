#pragma once

// Sampled functions on G.  A GroupGrid is a uniform lattice in one of two
// charts:
//   Exponential  lattice of algebra vectors X_i, points exp(X_i), dmu_r = Theta(X) dX
//   Orbit        lattice of covectors Y_i on the chosen orbit, points kappa^-1(Y_i),
//                dmu_r = |Pf| Delta dY
// Off-lattice values are read by separable Catmull-Rom interpolation in chart
// coordinates with zero extension.

#include "groups.hpp"
#include "hilbert.hpp"
#include "interp.hpp"
#include "parallel.hpp"

#include <functional>
#include <limits>
#include <memory>
#include <vector>

namespace orbitq {

enum class Chart { Exponential, Orbit };
enum class Side { Right, Left };

struct LatticeAxis {
    double min = 0.0;
    double step = 1.0;
    int count = 0;

    double coord(int i) const { return min + i * step; }
    bool symmetric() const { return count % 2 == 1 && std::abs(min + (count - 1) / 2 * step) < 1e-12 * step; }
    static LatticeAxis centered(double step, int count) {
        if (count % 2 == 0) throw GridError("centered lattice axis needs an odd count");
        return {-(count - 1) / 2 * step, step, count};
    }
    bool operator==(const LatticeAxis&) const = default;
};

using ChartCoords = std::array<double, 4>;

class GroupGrid {
public:
    static std::shared_ptr<const GroupGrid> exponential(const GroupDescriptor& d, std::vector<LatticeAxis> axes) {
        return std::shared_ptr<const GroupGrid>(new GroupGrid(d, Chart::Exponential, std::move(axes)));
    }
    static std::shared_ptr<const GroupGrid> orbit(const GroupDescriptor& d, std::vector<LatticeAxis> axes) {
        return std::shared_ptr<const GroupGrid>(new GroupGrid(d, Chart::Orbit, std::move(axes)));
    }
    // Frequency lattice of a centered exponential lattice, restricted to the orbit half.
    static std::shared_ptr<const GroupGrid> dual_of(const GroupGrid& e) {
        if (e.chart() != Chart::Exponential || !e.symmetric())
            throw GridError("dual lattice needs a centered exponential lattice");
        const GroupDescriptor& d = e.descriptor();
        std::vector<LatticeAxis> ax;
        const int oa = d.orbit_axis();
        for (int k = 0; k < d.dim; ++k) {
            const auto& a = e.axes()[k];
            const double dy = 1.0 / (a.count * a.step);
            const int half = (a.count - 1) / 2;
            if (k == oa) {
                if (d.sign == OrbitSign::Plus)
                    ax.push_back({dy, dy, half});
                else
                    ax.push_back({-half * dy, dy, half});
            } else {
                ax.push_back({-half * dy, dy, a.count});
            }
        }
        return orbit(d, std::move(ax));
    }

    const GroupDescriptor& descriptor() const { return desc_; }
    Chart chart() const { return chart_; }
    const std::vector<LatticeAxis>& axes() const { return axes_; }
    int dim() const { return desc_.dim; }
    int size() const { return size_; }
    double cell() const { return cell_; }
    bool symmetric() const {
        for (const auto& a : axes_)
            if (!a.symmetric()) return false;
        return true;
    }

    const GroupPoint& point(int i) const { return points_[static_cast<std::size_t>(i)]; }
    const ChartCoords& coords(int i) const { return coords_[static_cast<std::size_t>(i)]; }
    AlgebraVec algebra(int i) const {
        if (chart_ == Chart::Orbit) return orbitq::log(desc_, point(i));
        AlgebraVec X = AlgebraVec::zeros(dim());
        for (int k = 0; k < dim(); ++k) X[k] = coords(i)[k];
        return X;
    }
    double theta(int i) const { return theta_[static_cast<std::size_t>(i)]; }
    double delta(int i) const { return delta_[static_cast<std::size_t>(i)]; }
    double weight_right(int i) const { return wr_[static_cast<std::size_t>(i)]; }
    double weight_left(int i) const { return wr_[static_cast<std::size_t>(i)] * delta_[static_cast<std::size_t>(i)]; }
    double weight(int i, Side s) const { return s == Side::Right ? weight_right(i) : weight_left(i); }

    std::array<int, 4> multi(int i) const {
        std::array<int, 4> m{};
        for (int k = dim() - 1; k >= 0; --k) {
            m[k] = i % axes_[k].count;
            i /= axes_[k].count;
        }
        return m;
    }
    int flat(const std::array<int, 4>& m) const {
        int i = 0;
        for (int k = 0; k < dim(); ++k) i = i * axes_[k].count + m[k];
        return i;
    }
    // index of exp(-X_i); exponential centered lattices only
    int mirror(int i) const {
        auto m = multi(i);
        for (int k = 0; k < dim(); ++k) m[k] = axes_[k].count - 1 - m[k];
        return flat(m);
    }

    ChartCoords locate(const GroupPoint& g) const {
        ChartCoords c{};
        if (chart_ == Chart::Exponential) {
            const AlgebraVec X = orbitq::log(desc_, g);
            for (int k = 0; k < dim(); ++k) c[k] = X[k];
        } else {
            const DualVec Y = kappa(desc_, g);
            for (int k = 0; k < dim(); ++k) c[k] = Y[k];
        }
        return c;
    }

    // interpolation weights at chart coordinates c
    void stencil(const ChartCoords& c, std::vector<std::pair<int, double>>& out) const {
        out.clear();
        std::array<Stencil1, 4> s;
        for (int k = 0; k < dim(); ++k) {
            s[k] = catmull_rom(c[k], axes_[k].min, axes_[k].step, axes_[k].count);
            if (s[k].n == 0) return;
        }
        std::array<int, 4> pos{};
        for (;;) {
            double w = 1.0;
            std::array<int, 4> m{};
            for (int k = 0; k < dim(); ++k) {
                w *= s[k].w[pos[k]];
                m[k] = s[k].idx[pos[k]];
            }
            out.emplace_back(flat(m), w);
            int k = dim() - 1;
            while (k >= 0 && ++pos[k] == s[k].n) pos[k--] = 0;
            if (k < 0) break;
        }
    }

    bool same_lattice(const GroupGrid& o) const {
        return desc_ == o.desc_ && chart_ == o.chart_ && axes_ == o.axes_;
    }

private:
    GroupGrid(const GroupDescriptor& d, Chart chart, std::vector<LatticeAxis> axes)
        : desc_(d), chart_(chart), axes_(std::move(axes)) {
        if (static_cast<int>(axes_.size()) != d.dim) throw GridError("lattice needs one axis per group dimension");
        std::size_t n = 1;
        cell_ = 1.0;
        for (const auto& a : axes_) {
            if (a.count < 1 || !(a.step > 0.0)) throw GridError("invalid lattice axis");
            n *= static_cast<std::size_t>(a.count);
            cell_ *= a.step;
        }
        if (n > 20'000'000) throw GridError("group lattice too large");
        size_ = static_cast<int>(n);
        const double pf = chart == Chart::Orbit ? std::abs(pfaffian(d, d.F)) : 0.0;
        points_.resize(n);
        coords_.resize(n);
        theta_.resize(n);
        delta_.resize(n);
        wr_.resize(n);
        for (int i = 0; i < size_; ++i) {
            const auto m = multi(i);
            ChartCoords c{};
            for (int k = 0; k < d.dim; ++k) c[k] = axes_[k].coord(m[k]);
            coords_[i] = c;
            GroupPoint g;
            AlgebraVec X;
            if (chart == Chart::Exponential) {
                X = AlgebraVec::zeros(d.dim);
                for (int k = 0; k < d.dim; ++k) X[k] = c[k];
                g = orbitq::exp(d, X);
            } else {
                DualVec Y = DualVec::zeros(d.dim);
                for (int k = 0; k < d.dim; ++k) Y[k] = c[k];
                g = kappa_inv(d, Y);
                X = orbitq::log(d, g);
            }
            points_[i] = g;
            theta_[i] = orbitq::theta(d, X);
            delta_[i] = modular(d, g);
            wr_[i] = chart == Chart::Exponential ? theta_[i] * cell_ : pf * delta_[i] * cell_;
        }
    }

    GroupDescriptor desc_;
    Chart chart_;
    std::vector<LatticeAxis> axes_;
    int size_ = 0;
    double cell_ = 1.0;
    std::vector<GroupPoint> points_;
    std::vector<ChartCoords> coords_;
    std::vector<double> theta_, delta_, wr_;
};

using GridPtr = std::shared_ptr<const GroupGrid>;

inline void require_same(const GridPtr& a, const GridPtr& b) {
    if (!a || !b || (a != b && !a->same_lattice(*b))) throw GridError("group grid mismatch");
}

struct GroupFunction {
    GridPtr grid;
    VecC values;

    GroupFunction() = default;
    GroupFunction(GridPtr g, VecC v) : grid(std::move(g)), values(std::move(v)) {
        if (values.size() != grid->size()) throw GridError("group function length does not match grid");
    }
    static GroupFunction zero(GridPtr g) {
        const int n = g->size();
        return {std::move(g), VecC::Zero(n)};
    }
    int size() const { return static_cast<int>(values.size()); }

    cplx at(const GroupPoint& g) const {
        thread_local std::vector<std::pair<int, double>> st;
        grid->stencil(grid->locate(g), st);
        cplx s = 0.0;
        for (const auto& [i, w] : st) s += w * values[i];
        return s;
    }

    GroupFunction operator+(const GroupFunction& o) const {
        require_same(grid, o.grid);
        return {grid, values + o.values};
    }
    GroupFunction operator-(const GroupFunction& o) const {
        require_same(grid, o.grid);
        return {grid, values - o.values};
    }
    GroupFunction operator*(cplx c) const { return {grid, values * c}; }
    GroupFunction conj() const { return {grid, values.conjugate()}; }
};

inline GroupFunction sample(const GridPtr& grid, const std::function<cplx(const GroupPoint&)>& f) {
    VecC v(grid->size());
    for (int i = 0; i < grid->size(); ++i) v[i] = f(grid->point(i));
    return {grid, std::move(v)};
}

inline GroupFunction sample_algebra(const GridPtr& grid, const std::function<cplx(const AlgebraVec&)>& f) {
    VecC v(grid->size());
    for (int i = 0; i < grid->size(); ++i) v[i] = f(grid->algebra(i));
    return {grid, std::move(v)};
}

inline cplx integrate(const GroupFunction& f, Side side = Side::Right) {
    cplx s = 0.0;
    for (int i = 0; i < f.size(); ++i) s += f.values[i] * f.grid->weight(i, side);
    return s;
}
inline cplx integrate_right(const GroupFunction& f) { return integrate(f, Side::Right); }
inline cplx integrate_left(const GroupFunction& f) { return integrate(f, Side::Left); }

inline double lp_norm(const GroupFunction& f, double p, Side side = Side::Right) {
    if (std::isinf(p)) return f.size() ? f.values.cwiseAbs().maxCoeff() : 0.0;
    if (p < 1.0) throw GridError("lp_norm needs p >= 1");
    double s = 0.0;
    for (int i = 0; i < f.size(); ++i) s += std::pow(std::abs(f.values[i]), p) * f.grid->weight(i, side);
    return std::pow(s, 1.0 / p);
}

inline cplx inner(const GroupFunction& f, const GroupFunction& g) {
    require_same(f.grid, g.grid);
    cplx s = 0.0;
    for (int i = 0; i < f.size(); ++i) s += f.values[i] * std::conj(g.values[i]) * f.grid->weight_right(i);
    return s;
}
inline double norm(const GroupFunction& f) { return lp_norm(f, 2.0); }

inline GroupFunction weight_modular(const GroupFunction& f, double p) {
    VecC v = f.values;
    for (int i = 0; i < f.size(); ++i) v[i] *= std::pow(f.grid->delta(i), p);
    return {f.grid, std::move(v)};
}

// values f(T(g_i)) read by interpolation from src, sampled on out
inline GroupFunction resample(const GroupFunction& src, const GridPtr& out,
                              const std::function<GroupPoint(const GroupPoint&)>& T) {
    VecC v(out->size());
    parallel_for(static_cast<std::size_t>(out->size()), [&](std::size_t i) {
        v[static_cast<Eigen::Index>(i)] = src.at(T(out->point(static_cast<int>(i))));
    });
    return {out, std::move(v)};
}

inline GroupFunction involution(const GroupFunction& f) {
    const auto& G = *f.grid;
    if (G.chart() == Chart::Exponential && G.symmetric()) {
        VecC v(f.size());
        for (int i = 0; i < f.size(); ++i) v[i] = f.values[G.mirror(i)];
        return {f.grid, std::move(v)};
    }
    const GroupDescriptor d = G.descriptor();
    return resample(f, f.grid, [&](const GroupPoint& g) { return inv(d, g); });
}

// R: (R_y f)(x) = f(xy);  L: (L_y f)(x) = f(y^-1 x)
inline GroupFunction translate(const GroupFunction& f, const GroupPoint& y, Side side) {
    const GroupDescriptor d = f.grid->descriptor();
    if (side == Side::Right) return resample(f, f.grid, [&](const GroupPoint& x) { return mul(d, x, y); });
    const GroupPoint yi = inv(d, y);
    return resample(f, f.grid, [&](const GroupPoint& x) { return mul(d, yi, x); });
}

// (Psi_x f)(z) = f(x z x^-1)
inline GroupFunction conjugate_by(const GroupFunction& f, const GroupPoint& x) {
    const GroupDescriptor d = f.grid->descriptor();
    const GroupPoint xi = inv(d, x);
    return resample(f, f.grid, [&](const GroupPoint& z) { return mul(d, mul(d, x, z), xi); });
}

namespace detail {

template <class Arg>
GroupFunction convolve_impl(const GroupFunction& f, const GroupFunction& g, const GridPtr& out, Arg arg) {
    const GroupDescriptor d = f.grid->descriptor();
    std::vector<int> support;
    for (int i = 0; i < f.size(); ++i)
        if (f.values[i] != cplx(0.0)) support.push_back(i);
    std::vector<GroupPoint> yinv(static_cast<std::size_t>(f.size()));
    for (int i : support) yinv[i] = inv(d, f.grid->point(i));
    VecC v(out->size());
    parallel_for(static_cast<std::size_t>(out->size()), [&](std::size_t o) {
        const GroupPoint& x = out->point(static_cast<int>(o));
        const GroupPoint xi = inv(d, x);
        cplx s = 0.0;
        for (int i : support)
            s += f.values[i] * g.at(arg(d, x, xi, f.grid->point(i), yinv[i])) * f.grid->weight_right(i);
        v[static_cast<Eigen::Index>(o)] = s;
    });
    return {out, std::move(v)};
}

}  // namespace detail

// (f * g)(x) = int f(y) g(x y^-1) dmu_r(y); g is read by interpolation
inline GroupFunction convolve(const GroupFunction& f, const GroupFunction& g, GridPtr out = nullptr) {
    if (!(f.grid->descriptor() == g.grid->descriptor())) throw GridError("convolution of functions on different groups");
    if (!out) out = g.grid;
    return detail::convolve_impl(f, g, out, [](const GroupDescriptor& d, const GroupPoint& x, const GroupPoint&,
                                               const GroupPoint&, const GroupPoint& yi) { return mul(d, x, yi); });
}

// (f * g^)(x) = int f(y) g(y x^-1) dmu_r(y)
inline GroupFunction convolve_involuted(const GroupFunction& f, const GroupFunction& g, GridPtr out = nullptr) {
    if (!(f.grid->descriptor() == g.grid->descriptor())) throw GridError("convolution of functions on different groups");
    if (!out) out = g.grid;
    return detail::convolve_impl(f, g, out, [](const GroupDescriptor& d, const GroupPoint&, const GroupPoint& xi,
                                               const GroupPoint& y, const GroupPoint&) { return mul(d, y, xi); });
}

}  // namespace orbitq
