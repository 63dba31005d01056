#include "qscatter/evolve.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include <cmath>
#include <vector>

namespace qscatter {

Eigen::VectorXcd evolve_reference(const Eigen::VectorXcd& psi0, const Eigen::VectorXd& potential,
                                  const GridSpec& grid) {
    grid.validate();
    const int n = grid.n_points;
    if (psi0.size() != n || potential.size() != n)
        throw std::invalid_argument("evolve_reference: field sizes must match grid.n_points");
    if (std::max(std::abs(psi0(0)), std::abs(psi0(n - 1))) > 1e-8)
        throw std::invalid_argument("evolve_reference: psi0 not negligible at grid edges");

    const double dx = grid.dx();
    const double dt = grid.t_final / grid.n_steps;

    // H = -1/2 L + V with the symmetric fourth-order Laplacian
    // L f_i = (-f_{i-2} + 16 f_{i-1} - 30 f_i + 16 f_{i+1} - f_{i+2}) / (12 dx^2).
    const double inv12dx2 = 1.0 / (12.0 * dx * dx);
    const Complex half_idt(0.0, 0.5 * dt);

    using Sp = Eigen::SparseMatrix<Complex>;
    std::vector<Eigen::Triplet<Complex>> ta, tb;
    ta.reserve(5 * n);
    tb.reserve(5 * n);
    auto add = [&](int i, int j, double hval) {
        // A = I + i dt/2 H, B = I - i dt/2 H
        const Complex diag = (i == j) ? Complex(1.0) : Complex(0.0);
        ta.emplace_back(i, j, diag + half_idt * hval);
        tb.emplace_back(i, j, diag - half_idt * hval);
    };
    for (int i = 0; i < n; ++i) {
        add(i, i, 0.5 * 30.0 * inv12dx2 + potential(i));
        if (i >= 1) add(i, i - 1, -0.5 * 16.0 * inv12dx2);
        if (i + 1 < n) add(i, i + 1, -0.5 * 16.0 * inv12dx2);
        if (i >= 2) add(i, i - 2, 0.5 * inv12dx2);
        if (i + 2 < n) add(i, i + 2, 0.5 * inv12dx2);
    }
    Sp A(n, n), B(n, n);
    A.setFromTriplets(ta.begin(), ta.end());
    B.setFromTriplets(tb.begin(), tb.end());

    Eigen::SparseLU<Sp> lu;
    lu.compute(A);
    if (lu.info() != Eigen::Success)
        throw std::runtime_error("evolve_reference: factorization failed");

    Eigen::VectorXcd psi = psi0;
    for (int step = 0; step < grid.n_steps; ++step) {
        psi = lu.solve(B * psi);
        const double edge = std::max(std::abs(psi(0)), std::abs(psi(n - 1)));
        if (edge > 1e-4)
            throw BoundaryContamination("evolve_reference: packet reached hard wall",
                                        (step + 1) * dt, edge);
    }
    return psi;
}

double grid_norm(const Eigen::VectorXcd& psi, const GridSpec& grid) {
    return std::sqrt(psi.squaredNorm() * grid.dx());
}

}  // namespace qscatter
