#pragma once

// Grid families used by the verification suites.
//
// Transform tier, level L = 0, 1, 2:
//   carrier  t in [-2.8, 1.2), dt = 2^-(3+L)                 (N = 32, 64, 128)
//   lattice  u in [-2, 2] with du = dt, v in [-V, V] with dv = 1/8, V = 2^(1+L)
// Refinement halves dt and doubles V.  The carrier never reaches r = 1/(2 dv),
// so the modulation variable stays resolved by the v-lattice.
//
// Duflo-Moore tier, level L = 0, 1, 2:
//   carrier  t in [-8, 8), dt = 2^-(2+L)                     (N = 64, 128, 256)
//   lattice  u, v in [-4, 4], step 2^-(2+L) = dt            (33^2, 65^2, 129^2)
//
// Shearlet tier: carrier 32 x 32 on [-4,4)^2, lattice 16^4 on [-3,3)^4.

#include "transforms.hpp"

namespace orbitq {

inline CarrierPtr transform_carrier(int level) {
    const double dt = std::ldexp(1.0, -(3 + level));
    return CarrierGrid::log_axis(-2.8, dt, static_cast<int>(std::lround(4.0 / dt)));
}

inline GridPtr transform_lattice(int level, OrbitSign s = OrbitSign::Plus) {
    const double dt = std::ldexp(1.0, -(3 + level));
    const double V = std::ldexp(1.0, 1 + level);
    const int nu = static_cast<int>(std::lround(4.0 / dt)) + 1;
    const int nv = static_cast<int>(std::lround(2.0 * V * 8.0)) + 1;
    return GroupGrid::exponential(GroupDescriptor::affine(s),
                                  {LatticeAxis::centered(dt, nu), LatticeAxis::centered(0.125, nv)});
}

inline TransformContext transform_tier(int level, OrbitSign s = OrbitSign::Plus) {
    auto rep = std::make_shared<const Representation>(GroupDescriptor::affine(s), transform_carrier(level));
    return TransformContext(rep, transform_lattice(level, s));
}

inline CarrierPtr duflo_carrier(int level) {
    const double dt = std::ldexp(1.0, -(2 + level));
    return CarrierGrid::log_axis(-8.0, dt, static_cast<int>(std::lround(16.0 / dt)));
}

inline GridPtr duflo_lattice(int level, OrbitSign s = OrbitSign::Plus) {
    const double h = std::ldexp(1.0, -(2 + level));
    const int n = static_cast<int>(std::lround(8.0 / h)) + 1;
    return GroupGrid::exponential(GroupDescriptor::affine(s), {LatticeAxis::centered(h, n), LatticeAxis::centered(h, n)});
}

inline CarrierPtr shearlet_carrier() { return CarrierGrid::log_linear(-4.0, 0.25, 32, -4.0, 0.25, 32); }

inline GridPtr shearlet_lattice(OrbitSign s = OrbitSign::Plus) {
    const LatticeAxis a{-3.0, 0.375, 16};
    return GroupGrid::exponential(GroupDescriptor::shearlet(s), {a, a, a, a});
}

}  // namespace orbitq
