#pragma once

// Analytic test signals on the carrier and on the group.

#include "groupfn.hpp"

namespace orbitq {

struct GaussianSpec {
    double center = 0.0;  // in t = ln r
    double width = 0.3;
    double freq = 0.0;    // modulation e^{i freq t}
    double center2 = 0.0; // second (linear) carrier axis
    double width2 = 1.0;
};

inline cplx gaussian_value(const GaussianSpec& s, double t, double t2 = 0.0, bool two_axes = false) {
    const double z = (t - s.center) / s.width;
    cplx v = std::exp(-0.5 * z * z) * std::polar(1.0, s.freq * t);
    if (two_axes) {
        const double z2 = (t2 - s.center2) / s.width2;
        v *= std::exp(-0.5 * z2 * z2);
    }
    return v;
}

inline StateVector gaussian_log(const CarrierPtr& c, const GaussianSpec& s) {
    VecC v(c->size());
    for (int m = 0; m < c->size(); ++m)
        v[m] = gaussian_value(s, c->coord(m, 0), c->rank() > 1 ? c->coord(m, 1) : 0.0, c->rank() > 1);
    return {c, std::move(v)};
}

inline double hermite(int n, double x) {
    double h0 = 1.0, h1 = 2.0 * x;
    if (n == 0) return h0;
    for (int k = 1; k < n; ++k) {
        const double h2 = 2.0 * x * h1 - 2.0 * k * h0;
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

inline StateVector hermite_log(const CarrierPtr& c, int order, double center, double width) {
    VecC v(c->size());
    for (int m = 0; m < c->size(); ++m) {
        const double z = (c->coord(m, 0) - center) / width;
        v[m] = hermite(order, z) * std::exp(-0.5 * z * z);
    }
    return {c, std::move(v)};
}

// first n Hermite functions in ln r, orthonormalized against the carrier weights
inline std::vector<StateVector> hermite_basis(const CarrierPtr& c, int n, double center, double width) {
    MatC B(c->size(), n);
    for (int k = 0; k < n; ++k) B.col(k) = hermite_log(c, k, center, width).values;
    Eigen::HouseholderQR<MatC> qr(B);
    MatC Q = qr.householderQ() * MatC::Identity(c->size(), n);
    // fix signs so the basis is reproducible
    const MatC R = qr.matrixQR().topLeftCorner(n, n).triangularView<Eigen::Upper>();
    std::vector<StateVector> out;
    for (int k = 0; k < n; ++k) {
        const double sg = R(k, k).real() < 0 ? -1.0 : 1.0;
        out.emplace_back(c, VecC(Q.col(k) * (sg / std::sqrt(c->weight()))));
    }
    return out;
}

inline StateVector normalized(const StateVector& v) {
    const double n = norm(v);
    if (n == 0.0) return v;
    return v * cplx(1.0 / n);
}

// smooth bump exp(1 - 1/(1 - rho^2)) in chart coordinates, rho = |c - center| / radius
inline GroupFunction bump(const GridPtr& grid, const std::array<double, 4>& center, double radius) {
    VecC v(grid->size());
    for (int i = 0; i < grid->size(); ++i) {
        double r2 = 0.0;
        for (int k = 0; k < grid->dim(); ++k) {
            const double z = (grid->coords(i)[k] - center[k]) / radius;
            r2 += z * z;
        }
        v[i] = r2 < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - r2)) : 0.0;
    }
    return {grid, std::move(v)};
}

}  // namespace orbitq
