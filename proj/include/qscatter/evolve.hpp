#pragma once

#include <Eigen/Dense>

#include "qscatter/types.hpp"

namespace qscatter {

/// Norm-preserving Crank-Nicolson evolution of i dpsi/dt = (-1/2 d^2/dx^2 + V) psi
/// on a hard-wall grid (fourth-order spatial stencil). Verification oracle only;
/// production paths use the closed forms.
///
/// Throws BoundaryContamination if |psi| at an edge exceeds 1e-4 at any step.
/// Pre: |psi0| < 1e-8 at the grid edges.
Eigen::VectorXcd evolve_reference(const Eigen::VectorXcd& psi0, const Eigen::VectorXd& potential,
                                  const GridSpec& grid);

/// Discrete L2 norm sqrt(sum |psi|^2 dx) on the grid.
double grid_norm(const Eigen::VectorXcd& psi, const GridSpec& grid);

}  // namespace qscatter
