#pragma once

// Catmull-Rom stencils on uniform axes with zero extension.

#include <array>
#include <cmath>

namespace orbitq {

struct Stencil1 {
    std::array<int, 4> idx{};
    std::array<double, 4> w{};
    int n = 0;
};

// Node positions min + i*step, i in [0, count).  Positions within 1e-9 of a
// node snap to it so grid-compatible shifts stay exact.
inline Stencil1 catmull_rom(double pos, double min, double step, int count) {
    Stencil1 s;
    const double p = (pos - min) / step;
    if (!(p > -1.0 && p < count)) return s;
    const double fl = std::floor(p);
    const double f = p - fl;
    const int i0 = static_cast<int>(fl);
    if (f < 1e-9 || f > 1.0 - 1e-9) {
        const int i = f < 0.5 ? i0 : i0 + 1;
        if (i >= 0 && i < count) {
            s.idx[0] = i;
            s.w[0] = 1.0;
            s.n = 1;
        }
        return s;
    }
    const double f2 = f * f, f3 = f2 * f;
    const double w[4] = {(-f3 + 2 * f2 - f) / 2, (3 * f3 - 5 * f2 + 2) / 2, (-3 * f3 + 4 * f2 + f) / 2,
                         (f3 - f2) / 2};
    for (int k = 0; k < 4; ++k) {
        const int i = i0 - 1 + k;
        if (i < 0 || i >= count) continue;
        s.idx[s.n] = i;
        s.w[s.n] = w[k];
        ++s.n;
    }
    return s;
}

}  // namespace orbitq
