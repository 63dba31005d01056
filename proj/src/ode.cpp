#include "qscatter/ode.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace qscatter {
namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
// embedded 4th-order weights
constexpr double e1 = 5179.0 / 57600, e3 = 7571.0 / 16695, e4 = 393.0 / 640,
                 e5 = -92097.0 / 339200, e6 = 187.0 / 2100, e7 = 1.0 / 40;

}  // namespace

Trajectory ode_integrate(const VelocityField& v, double x0, double t0, double t1,
                         const OdeSpec& spec) {
    spec.validate();
    if (!(t1 > t0)) throw std::invalid_argument("ode_integrate: t1 must be > t0");

    Trajectory traj;
    traj.x0 = x0;
    traj.samples.push_back({t0, x0});

    const double span = t1 - t0;
    const double h_min = 1e-13 * std::max(1.0, span);
    double t = t0;
    double x = x0;
    double h = std::min(spec.initial_step, spec.max_step);
    double k1 = v(x, t);  // FSAL

    while (t < t1) {
        h = std::min(h, t1 - t);
        if (h < h_min)
            throw StiffnessFailure("ode_integrate: step size underflow (density node near path)", t);

        const double k2 = v(x + h * a21 * k1, t + c2 * h);
        const double k3 = v(x + h * (a31 * k1 + a32 * k2), t + c3 * h);
        const double k4 = v(x + h * (a41 * k1 + a42 * k2 + a43 * k3), t + c4 * h);
        const double k5 = v(x + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4), t + c5 * h);
        const double k6 = v(x + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5), t + h);
        const double x5 = x + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        const double k7 = v(x5, t + h);
        const double x4 = x + h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

        const double sc = spec.abs_tol + spec.rel_tol * std::max(std::abs(x), std::abs(x5));
        const double err = std::abs(x5 - x4) / sc;

        if (err <= 1.0) {
            t += h;
            x = x5;
            k1 = k7;
            traj.samples.push_back({t, x});
        }
        const double factor = (err > 0.0) ? 0.9 * std::pow(err, -0.2) : 5.0;
        h *= std::clamp(factor, 0.2, 5.0);
        h = std::min(h, spec.max_step);
    }
    return traj;
}

Trajectory resample(const Trajectory& traj, const VelocityField& v, double dt) {
    Trajectory out;
    out.x0 = traj.x0;
    out.quantile = traj.quantile;
    if (traj.samples.size() < 2) {
        out.samples = traj.samples;
        return out;
    }
    const double t0 = traj.samples.front().t;
    const double t1 = traj.samples.back().t;
    std::size_t seg = 0;
    const long n = std::lround((t1 - t0) / dt);
    for (long i = 0; i <= n; ++i) {
        const double t = std::min(t0 + i * dt, t1);
        while (seg + 2 < traj.samples.size() && traj.samples[seg + 1].t < t) ++seg;
        const auto& p0 = traj.samples[seg];
        const auto& p1 = traj.samples[seg + 1];
        const double hseg = p1.t - p0.t;
        const double s = std::clamp((t - p0.t) / hseg, 0.0, 1.0);
        const double m0 = v(p0.x, p0.t) * hseg;
        const double m1 = v(p1.x, p1.t) * hseg;
        // cubic Hermite basis
        const double s2 = s * s, s3 = s2 * s;
        const double xval = (2 * s3 - 3 * s2 + 1) * p0.x + (s3 - 2 * s2 + s) * m0 +
                            (-2 * s3 + 3 * s2) * p1.x + (s3 - s2) * m1;
        out.samples.push_back({t, xval});
    }
    return out;
}

}  // namespace qscatter
