#pragma once

#include <functional>

#include "qscatter/types.hpp"

namespace qscatter {

using VelocityField = std::function<double(double x, double t)>;

/// Adaptive Dormand-Prince 5(4) integration of dx/dt = v(x, t) from t0 to t1.
/// The returned trajectory carries the accepted steps; use resample() for a
/// fixed output cadence. Throws StiffnessFailure when the step underflows.
Trajectory ode_integrate(const VelocityField& v, double x0, double t0, double t1,
                         const OdeSpec& spec);

/// Cubic-Hermite resample of a trajectory onto a uniform grid with step dt.
/// Slopes are recovered from the velocity field at the stored nodes.
Trajectory resample(const Trajectory& traj, const VelocityField& v, double dt);

}  // namespace qscatter
