#pragma once

// Exponential Lie groups used by the quantization engine: the affine group,
// the shearlet group and the (non-quantizable) Heisenberg group.
//
// Coordinates follow the usual global charts:
//   affine      (a, x)          a > 0,   algebra uU + vV,              dual uU* + vV*
//   shearlet    (a, s, x1, x2)  a > 0,   algebra aA + sB + x1C + x2D,  dual (a*, b*, c*, d*)
//   heisenberg  (x, y, z),               algebra xX + yY + zZ,         dual (a, b, c)

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbitq {

enum class GroupName { Affine, Shearlet, Heisenberg };
enum class OrbitSign { Plus, Minus };

class GroupError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OrbitError : public GroupError {
public:
    using GroupError::GroupError;
};

template <class Tag>
struct Coords {
    std::array<double, 4> c{};
    int dim = 0;

    Coords() = default;
    Coords(std::initializer_list<double> v) : dim(static_cast<int>(v.size())) {
        if (v.size() > 4) throw GroupError("at most 4 coordinates");
        std::copy(v.begin(), v.end(), c.begin());
    }
    static Coords zeros(int n) {
        Coords r;
        r.dim = n;
        return r;
    }
    double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
    double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
    bool finite() const {
        for (int i = 0; i < dim; ++i)
            if (!std::isfinite(c[i])) return false;
        return true;
    }
    Coords operator-() const {
        Coords r = *this;
        for (int i = 0; i < dim; ++i) r.c[i] = -r.c[i];
        return r;
    }
    double max_abs_diff(const Coords& o) const {
        double m = 0.0;
        for (int i = 0; i < dim; ++i) m = std::max(m, std::abs(c[i] - o.c[i]));
        return m;
    }
};

struct PointTag {};
struct AlgebraTag {};
struct DualTag {};
using GroupPoint = Coords<PointTag>;
using AlgebraVec = Coords<AlgebraTag>;
using DualVec = Coords<DualTag>;

struct GroupDescriptor {
    GroupName name = GroupName::Affine;
    int dim = 2;
    std::vector<std::string> basis_labels;
    DualVec F;
    OrbitSign sign = OrbitSign::Plus;

    bool quantizable() const { return name != GroupName::Heisenberg; }
    double sign_value() const { return sign == OrbitSign::Plus ? 1.0 : -1.0; }

    // index of the dual coordinate whose sign selects the orbit
    int orbit_axis() const {
        switch (name) {
        case GroupName::Affine: return 1;
        case GroupName::Shearlet: return 2;
        default: throw GroupError("heisenberg has no open orbit");
        }
    }

    bool operator==(const GroupDescriptor& o) const { return name == o.name && sign == o.sign; }

    static GroupDescriptor affine(OrbitSign s = OrbitSign::Plus) {
        GroupDescriptor d;
        d.name = GroupName::Affine;
        d.dim = 2;
        d.basis_labels = {"U", "V"};
        d.sign = s;
        d.F = DualVec{0.0, s == OrbitSign::Plus ? 1.0 : -1.0};
        return d;
    }
    static GroupDescriptor shearlet(OrbitSign s = OrbitSign::Plus) {
        GroupDescriptor d;
        d.name = GroupName::Shearlet;
        d.dim = 4;
        d.basis_labels = {"A", "B", "C", "D"};
        d.sign = s;
        d.F = DualVec{0.0, 0.0, s == OrbitSign::Plus ? 1.0 : -1.0, 0.0};
        return d;
    }
    static GroupDescriptor heisenberg() {
        GroupDescriptor d;
        d.name = GroupName::Heisenberg;
        d.dim = 3;
        d.basis_labels = {"X", "Y", "Z"};
        d.F = DualVec{0.0, 0.0, 1.0};
        return d;
    }
};

inline const char* to_string(GroupName n) {
    switch (n) {
    case GroupName::Affine: return "affine";
    case GroupName::Shearlet: return "shearlet";
    case GroupName::Heisenberg: return "heisenberg";
    }
    return "?";
}
inline const char* to_string(OrbitSign s) { return s == OrbitSign::Plus ? "plus" : "minus"; }

// (e^u - 1)/u with a Taylor branch around the removable singularity
inline double lambda(double u) {
    if (std::abs(u) < 1e-3) {
        double term = 1.0, sum = 1.0;
        for (int k = 2; k <= 9; ++k) {
            term *= u / k;
            sum += term;
        }
        return sum;
    }
    return std::expm1(u) / u;
}

namespace detail {

inline void check_point(const GroupDescriptor& d, const GroupPoint& g) {
    if (g.dim != d.dim) throw GroupError("descriptor mismatch: point has wrong dimension");
    if (!g.finite()) throw GroupError("non-finite group coordinate");
    if (d.name != GroupName::Heisenberg && !(g[0] > 0.0)) throw GroupError("non-positive scale coordinate");
}

template <class V>
inline void check_dim(const GroupDescriptor& d, const V& v) {
    if (v.dim != d.dim) throw GroupError("descriptor mismatch: vector has wrong dimension");
}

}  // namespace detail

inline GroupPoint identity(const GroupDescriptor& d) {
    GroupPoint e = GroupPoint::zeros(d.dim);
    if (d.name != GroupName::Heisenberg) e[0] = 1.0;
    return e;
}

inline GroupPoint mul(const GroupDescriptor& d, const GroupPoint& g, const GroupPoint& h) {
    detail::check_point(d, g);
    detail::check_point(d, h);
    switch (d.name) {
    case GroupName::Affine: return GroupPoint{g[0] * h[0], g[0] * h[1] + g[1]};
    case GroupName::Shearlet: {
        const double ra = std::sqrt(g[0]);
        return GroupPoint{g[0] * h[0], g[1] + ra * h[1], g[2] + g[0] * h[2] + ra * g[1] * h[3],
                          g[3] + ra * h[3]};
    }
    case GroupName::Heisenberg: return GroupPoint{g[0] + h[0], g[1] + h[1], g[2] + h[2] + g[0] * h[1]};
    }
    return g;
}

inline GroupPoint inv(const GroupDescriptor& d, const GroupPoint& g) {
    detail::check_point(d, g);
    switch (d.name) {
    case GroupName::Affine: return GroupPoint{1.0 / g[0], -g[1] / g[0]};
    case GroupName::Shearlet: {
        const double a = g[0], ra = std::sqrt(a);
        const double s = -g[1] / ra;
        const double y2 = -g[3] / ra;
        const double y1 = -(g[2] + ra * g[1] * y2) / a;
        return GroupPoint{1.0 / a, s, y1, y2};
    }
    case GroupName::Heisenberg: return GroupPoint{-g[0], -g[1], -g[2] + g[0] * g[1]};
    }
    return g;
}

inline GroupPoint exp(const GroupDescriptor& d, const AlgebraVec& X) {
    detail::check_dim(d, X);
    switch (d.name) {
    case GroupName::Affine: return GroupPoint{std::exp(X[0]), X[1] * lambda(X[0])};
    case GroupName::Shearlet: {
        const double l = lambda(X[0]), lh = lambda(X[0] / 2);
        return GroupPoint{std::exp(X[0]), X[1] * lh, X[2] * l + X[1] * X[3] * lh * lh / 2, X[3] * lh};
    }
    case GroupName::Heisenberg: return GroupPoint{X[0], X[1], X[2] + X[0] * X[1] / 2};
    }
    return GroupPoint{};
}

inline AlgebraVec log(const GroupDescriptor& d, const GroupPoint& g) {
    detail::check_point(d, g);
    switch (d.name) {
    case GroupName::Affine: {
        const double u = std::log(g[0]);
        return AlgebraVec{u, g[1] / lambda(u)};
    }
    case GroupName::Shearlet: {
        const double al = std::log(g[0]);
        const double l = lambda(al), lh = lambda(al / 2);
        const double sig = g[1] / lh, xi2 = g[3] / lh;
        return AlgebraVec{al, sig, (g[2] - sig * xi2 * lh * lh / 2) / l, xi2};
    }
    case GroupName::Heisenberg: return AlgebraVec{g[0], g[1], g[2] - g[0] * g[1] / 2};
    }
    return AlgebraVec{};
}

// Lie bracket from the structure constants of the printed basis
inline AlgebraVec bracket(const GroupDescriptor& d, const AlgebraVec& X, const AlgebraVec& Y) {
    detail::check_dim(d, X);
    detail::check_dim(d, Y);
    switch (d.name) {
    case GroupName::Affine: return AlgebraVec{0.0, X[0] * Y[1] - Y[0] * X[1]};
    case GroupName::Shearlet:
        return AlgebraVec{0.0, (X[0] * Y[1] - Y[0] * X[1]) / 2,
                          X[0] * Y[2] - Y[0] * X[2] + X[1] * Y[3] - Y[1] * X[3], (X[0] * Y[3] - Y[0] * X[3]) / 2};
    case GroupName::Heisenberg: return AlgebraVec{0.0, 0.0, X[0] * Y[1] - Y[0] * X[1]};
    }
    return AlgebraVec{};
}

// matrix of ad_X in the printed basis (column j = [X, e_j])
inline Eigen::MatrixXd ad_matrix(const GroupDescriptor& d, const AlgebraVec& X) {
    Eigen::MatrixXd m(d.dim, d.dim);
    for (int j = 0; j < d.dim; ++j) {
        AlgebraVec e = AlgebraVec::zeros(d.dim);
        e[j] = 1.0;
        const AlgebraVec b = bracket(d, X, e);
        for (int i = 0; i < d.dim; ++i) m(i, j) = b[i];
    }
    return m;
}

inline Eigen::MatrixXd adjoint(const GroupDescriptor& d, const GroupPoint& g) {
    detail::check_point(d, g);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d.dim, d.dim);
    switch (d.name) {
    case GroupName::Affine:
        m << 1.0, 0.0, -g[1], g[0];
        break;
    case GroupName::Shearlet: {
        const double a = g[0], ra = std::sqrt(a), s = g[1], x1 = g[2], x2 = g[3];
        m.row(0) << 1.0, 0.0, 0.0, 0.0;
        m.row(1) << -s / 2, ra, 0.0, 0.0;
        m.row(2) << s * x2 / 2 - x1, -ra * x2, a, ra * s;
        m.row(3) << -x2 / 2, 0.0, 0.0, ra;
        break;
    }
    case GroupName::Heisenberg:
        m.setIdentity();
        m(2, 0) = -g[1];
        m(2, 1) = g[0];
        break;
    }
    return m;
}

inline AlgebraVec apply(const Eigen::MatrixXd& m, const AlgebraVec& X) {
    AlgebraVec r = AlgebraVec::zeros(X.dim);
    for (int i = 0; i < X.dim; ++i)
        for (int j = 0; j < X.dim; ++j) r[i] += m(i, j) * X[j];
    return r;
}

inline double theta(const GroupDescriptor& d, const AlgebraVec& X) {
    detail::check_dim(d, X);
    switch (d.name) {
    case GroupName::Affine: return lambda(X[0]);
    case GroupName::Shearlet: {
        const double lh = lambda(X[0] / 2);
        return lambda(X[0]) * lh * lh;
    }
    case GroupName::Heisenberg: return 1.0;
    }
    return 1.0;
}

// |det((e^{ad X} - 1) / ad X)| from the power series sum_k (ad X)^k / (k+1)!
inline double theta_by_determinant(const GroupDescriptor& d, const AlgebraVec& X) {
    const Eigen::MatrixXd A = ad_matrix(d, X);
    Eigen::MatrixXd term = Eigen::MatrixXd::Identity(d.dim, d.dim);
    Eigen::MatrixXd sum = term;
    for (int k = 1; k < 80; ++k) {
        term = term * A / static_cast<double>(k + 1);
        sum += term;
        if (term.lpNorm<Eigen::Infinity>() < 1e-18 * sum.lpNorm<Eigen::Infinity>()) break;
    }
    return std::abs(sum.determinant());
}

inline double modular(const GroupDescriptor& d, const GroupPoint& g) {
    detail::check_point(d, g);
    switch (d.name) {
    case GroupName::Affine: return 1.0 / g[0];
    case GroupName::Shearlet: return 1.0 / (g[0] * g[0]);
    case GroupName::Heisenberg: return 1.0;
    }
    return 1.0;
}

// K(g)Y = Y o Ad_{g^-1}
inline DualVec coadjoint(const GroupDescriptor& d, const GroupPoint& g, const DualVec& Y) {
    detail::check_point(d, g);
    detail::check_dim(d, Y);
    switch (d.name) {
    case GroupName::Affine: return DualVec{Y[0] + g[1] * Y[1] / g[0], Y[1] / g[0]};
    case GroupName::Shearlet: {
        const double a = g[0], ra = std::sqrt(a), s = g[1], x1 = g[2], x2 = g[3];
        const double al = Y[0], be = Y[1], ga = Y[2], de = Y[3];
        return DualVec{al + be * s / (2 * ra) + ga * (2 * x1 - s * x2) / (2 * a) + de * x2 / (2 * ra),
                       be / ra + ga * x2 / a, ga / a, -(ga * s / a - de / ra)};
    }
    case GroupName::Heisenberg: return DualVec{Y[0] + g[1] * Y[2], Y[1] - g[0] * Y[2], Y[2]};
    }
    return Y;
}

inline double pairing(const DualVec& Y, const AlgebraVec& X) {
    double s = 0.0;
    for (int i = 0; i < X.dim; ++i) s += Y[i] * X[i];
    return s;
}

inline DualVec kappa(const GroupDescriptor& d, const GroupPoint& g) {
    detail::check_point(d, g);
    const double sg = d.sign_value();
    switch (d.name) {
    case GroupName::Affine: return DualVec{-sg * g[1], sg * g[0]};
    case GroupName::Shearlet: {
        const double ra = std::sqrt(g[0]);
        return DualVec{sg * (g[1] * g[3] / 2 - g[2]), -sg * ra * g[3], sg * g[0], sg * ra * g[1]};
    }
    case GroupName::Heisenberg: return coadjoint(d, inv(d, g), d.F);
    }
    return DualVec{};
}

inline bool on_orbit(const GroupDescriptor& d, const DualVec& Y) {
    if (!d.quantizable() || Y.dim != d.dim || !Y.finite()) return false;
    return d.sign_value() * Y[d.orbit_axis()] > 0.0;
}

inline GroupPoint kappa_inv(const GroupDescriptor& d, const DualVec& Y) {
    detail::check_dim(d, Y);
    if (!on_orbit(d, Y)) throw OrbitError("covector is not on the chosen co-adjoint orbit");
    const double sg = d.sign_value();
    switch (d.name) {
    case GroupName::Affine: return GroupPoint{sg * Y[1], -sg * Y[0]};
    case GroupName::Shearlet: {
        const double a = sg * Y[2], ra = std::sqrt(a);
        const double s = sg * Y[3] / ra;
        const double x2 = -sg * Y[1] / ra;
        return GroupPoint{a, s, s * x2 / 2 - sg * Y[0], x2};
    }
    default: throw OrbitError("heisenberg orbits are not open");
    }
}

inline double pfaffian(const GroupDescriptor& d, const DualVec& F) {
    detail::check_dim(d, F);
    if (d.dim % 2 != 0) throw GroupError("pfaffian needs an even-dimensional algebra");
    auto B = [&](int i, int j) {
        AlgebraVec ei = AlgebraVec::zeros(d.dim), ej = AlgebraVec::zeros(d.dim);
        ei[i] = 1.0;
        ej[j] = 1.0;
        return pairing(F, bracket(d, ei, ej));
    };
    if (d.dim == 2) return B(0, 1);
    return B(0, 1) * B(2, 3) - B(0, 2) * B(1, 3) + B(0, 3) * B(1, 2);
}

}  // namespace orbitq
