#pragma once

#include <doctest.h>

#include "orbitq/apps.hpp"
#include "orbitq/tiers.hpp"

#include <random>

namespace orbitq::test {

inline GroupPoint random_point(const GroupDescriptor& d, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    GroupPoint g = GroupPoint::zeros(d.dim);
    for (int k = 0; k < d.dim; ++k) g[k] = U(rng);
    if (d.name != GroupName::Heisenberg) g[0] = std::exp(g[0]);
    return g;
}

inline AlgebraVec random_algebra(const GroupDescriptor& d, std::mt19937_64& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> U(-scale, scale);
    AlgebraVec X = AlgebraVec::zeros(d.dim);
    for (int k = 0; k < d.dim; ++k) X[k] = U(rng);
    return X;
}

inline double rel(const KernelOperator& a, const KernelOperator& b) { return hs_norm(a - b) / hs_norm(b); }
inline double rel(const GroupFunction& a, const GroupFunction& b) { return norm(a - b) / norm(b); }

// level-0 transform tier: carrier 32, lattice 33 x 33
inline std::shared_ptr<const TransformContext> small_context() {
    static const auto ctx = std::make_shared<const TransformContext>(transform_tier(0));
    return ctx;
}

inline std::shared_ptr<const TransformContext> medium_context() {
    static const auto ctx = std::make_shared<const TransformContext>(transform_tier(1));
    return ctx;
}

}  // namespace orbitq::test
