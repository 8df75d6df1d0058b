#pragma once

// Sampled carrier spaces L^2(R+, dr/r) and L^2(R+ x R, db dt/b) together with
// dense kernel operators.  Log axes store t = ln r, so dr/r becomes dt and every
// grid point carries the same quadrature weight.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <memory>
#include <stdexcept>
#include <vector>

namespace orbitq {

using cplx = std::complex<double>;
using VecC = Eigen::VectorXcd;
using MatC = Eigen::MatrixXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr int kMaxCarrierPoints = 1024;

class GridError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class AxisKind { Log, Linear };

struct CarrierAxis {
    AxisKind kind = AxisKind::Log;
    double min = 0.0;
    double step = 1.0;
    int count = 0;

    double coord(int i) const { return min + i * step; }
    double value(int i) const { return kind == AxisKind::Log ? std::exp(coord(i)) : coord(i); }
    bool operator==(const CarrierAxis&) const = default;
};

class CarrierGrid {
public:
    CarrierGrid() = default;
    explicit CarrierGrid(std::vector<CarrierAxis> axes) : axes_(std::move(axes)) {
        if (axes_.empty() || axes_.size() > 2) throw GridError("carrier grid needs one or two axes");
        std::size_t n = 1;
        weight_ = 1.0;
        for (const auto& a : axes_) {
            if (a.count < 2) throw GridError("carrier axis needs at least 2 points");
            if (!(a.step > 0.0) || !std::isfinite(a.min)) throw GridError("carrier axis step must be positive");
            n *= static_cast<std::size_t>(a.count);
            weight_ *= a.step;
        }
        if (n > static_cast<std::size_t>(kMaxCarrierPoints)) throw GridError("carrier grid exceeds 1024 points");
        size_ = static_cast<int>(n);
    }

    static std::shared_ptr<const CarrierGrid> log_axis(double tmin, double dt, int n) {
        return std::make_shared<const CarrierGrid>(std::vector<CarrierAxis>{{AxisKind::Log, tmin, dt, n}});
    }
    static std::shared_ptr<const CarrierGrid> log_linear(double tmin, double dt, int nb, double smin, double ds, int ns) {
        return std::make_shared<const CarrierGrid>(
            std::vector<CarrierAxis>{{AxisKind::Log, tmin, dt, nb}, {AxisKind::Linear, smin, ds, ns}});
    }

    const std::vector<CarrierAxis>& axes() const { return axes_; }
    int rank() const { return static_cast<int>(axes_.size()); }
    int size() const { return size_; }
    double weight() const { return weight_; }

    // row-major: the last axis varies fastest
    int index(int i0, int i1 = 0) const { return rank() == 1 ? i0 : i0 * axes_[1].count + i1; }
    int sub(int idx, int axis) const {
        if (rank() == 1) return idx;
        return axis == 0 ? idx / axes_[1].count : idx % axes_[1].count;
    }
    double value(int idx, int axis) const { return axes_[axis].value(sub(idx, axis)); }
    double coord(int idx, int axis) const { return axes_[axis].coord(sub(idx, axis)); }

    bool operator==(const CarrierGrid& o) const { return axes_ == o.axes_; }

private:
    std::vector<CarrierAxis> axes_;
    int size_ = 0;
    double weight_ = 1.0;
};

using CarrierPtr = std::shared_ptr<const CarrierGrid>;

inline void require_same(const CarrierPtr& a, const CarrierPtr& b) {
    if (!a || !b || (a != b && !(*a == *b))) throw GridError("carrier grid mismatch");
}

struct StateVector {
    CarrierPtr grid;
    VecC values;

    StateVector() = default;
    StateVector(CarrierPtr g, VecC v) : grid(std::move(g)), values(std::move(v)) {
        if (values.size() != grid->size()) throw GridError("state vector length does not match grid");
    }
    static StateVector zero(CarrierPtr g) {
        const int n = g->size();
        return {std::move(g), VecC::Zero(n)};
    }
    int size() const { return static_cast<int>(values.size()); }

    StateVector operator+(const StateVector& o) const {
        require_same(grid, o.grid);
        return {grid, values + o.values};
    }
    StateVector operator-(const StateVector& o) const {
        require_same(grid, o.grid);
        return {grid, values - o.values};
    }
    StateVector operator*(cplx c) const { return {grid, values * c}; }
};

// (A psi)_j = sum_k matrix(j,k) psi_k w
struct KernelOperator {
    CarrierPtr grid;
    MatC matrix;

    KernelOperator() = default;
    KernelOperator(CarrierPtr g, MatC m) : grid(std::move(g)), matrix(std::move(m)) {
        if (matrix.rows() != grid->size() || matrix.cols() != grid->size())
            throw GridError("kernel matrix shape does not match grid");
    }
    static KernelOperator zero(CarrierPtr g) {
        const int n = g->size();
        return {std::move(g), MatC::Zero(n, n)};
    }
    static KernelOperator identity(CarrierPtr g) {
        const int n = g->size();
        const double w = g->weight();
        return {std::move(g), MatC::Identity(n, n) / w};
    }
    // the matrix acting on plain sample vectors
    static KernelOperator from_action(CarrierPtr g, const MatC& action) {
        const double w = g->weight();
        return {std::move(g), action / w};
    }
    MatC action() const { return matrix * grid->weight(); }

    KernelOperator operator+(const KernelOperator& o) const {
        require_same(grid, o.grid);
        return {grid, matrix + o.matrix};
    }
    KernelOperator operator-(const KernelOperator& o) const {
        require_same(grid, o.grid);
        return {grid, matrix - o.matrix};
    }
    KernelOperator operator*(cplx c) const { return {grid, matrix * c}; }
};

inline cplx inner(const StateVector& psi, const StateVector& phi) {
    require_same(psi.grid, phi.grid);
    return phi.values.dot(psi.values) * psi.grid->weight();
}

inline double norm(const StateVector& psi) { return std::sqrt(std::max(0.0, inner(psi, psi).real())); }

inline StateVector apply(const KernelOperator& A, const StateVector& psi) {
    require_same(A.grid, psi.grid);
    return {psi.grid, A.matrix * psi.values * psi.grid->weight()};
}

inline KernelOperator rank_one(const StateVector& psi, const StateVector& phi) {
    require_same(psi.grid, phi.grid);
    return {psi.grid, psi.values * phi.values.adjoint()};
}

inline KernelOperator compose(const KernelOperator& A, const KernelOperator& B) {
    require_same(A.grid, B.grid);
    return {A.grid, A.matrix * B.matrix * A.grid->weight()};
}

inline KernelOperator adjoint(const KernelOperator& A) { return {A.grid, A.matrix.adjoint()}; }

inline cplx trace(const KernelOperator& A) { return A.matrix.trace() * A.grid->weight(); }

inline cplx hs_inner(const KernelOperator& A, const KernelOperator& B) {
    require_same(A.grid, B.grid);
    const double w = A.grid->weight();
    return (B.matrix.conjugate().cwiseProduct(A.matrix)).sum() * w * w;
}

inline double hs_norm(const KernelOperator& A) { return A.matrix.norm() * A.grid->weight(); }

struct EigenPair {
    double value;
    StateVector vector;
};

inline std::vector<EigenPair> eig_hermitian(const KernelOperator& A, double tol = 1e-8) {
    const MatC act = A.action();
    const double scale = std::max(act.norm(), 1e-300);
    if ((act - act.adjoint()).norm() > tol * scale) throw GridError("operator is not self-adjoint");
    Eigen::SelfAdjointEigenSolver<MatC> es(MatC((act + act.adjoint()) / 2.0));
    const int n = A.grid->size();
    const double rw = 1.0 / std::sqrt(A.grid->weight());
    std::vector<EigenPair> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int k = n - 1; k >= 0; --k)
        out.push_back({es.eigenvalues()(k), StateVector(A.grid, es.eigenvectors().col(k) * rw)});
    return out;
}

}  // namespace orbitq
