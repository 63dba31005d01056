#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace qscatter {

using Complex = std::complex<double>;

// ---------------------------------------------------------------------------
// Packet and grid parameters (scaled units: hbar = m = 1 throughout the core)
// ---------------------------------------------------------------------------

/// The four scaled packet parameters. The group velocity equals k0 in scaled
/// units, so it is derived rather than stored.
struct PacketParams {
    double a_bar = 1.0;       ///< potential range (inverse scaled length)
    double sigma0_bar = 1.0;  ///< initial rms width
    double xc_bar = -10.0;    ///< initial center
    double k0_bar = 1.0;      ///< kick momentum

    double u() const { return k0_bar; }

    void validate() const {
        if (!(a_bar > 0.0)) throw std::invalid_argument("PacketParams: a_bar must be > 0");
        if (!(sigma0_bar > 0.0)) throw std::invalid_argument("PacketParams: sigma0_bar must be > 0");
    }
};

/// Complex width s_t = sigma0 (1 + i t / (2 sigma0^2)) and its modulus.
struct ComplexWidth {
    Complex s_t;
    double sigma_t;

    static ComplexWidth at(const PacketParams& p, double t) {
        const Complex s = p.sigma0_bar * Complex(1.0, t / (2.0 * p.sigma0_bar * p.sigma0_bar));
        return {s, std::abs(s)};
    }
};

struct QuadratureSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    double envelope_cut = 8.0;  ///< truncation radius in units of the envelope width
    int max_subdivisions = 20000;

    void validate() const {
        if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
            throw std::invalid_argument("QuadratureSpec: tolerances must be > 0");
        if (!(envelope_cut >= 6.0))
            throw std::invalid_argument("QuadratureSpec: envelope_cut must be >= 6");
        if (max_subdivisions < 1)
            throw std::invalid_argument("QuadratureSpec: max_subdivisions must be >= 1");
    }
};

struct OdeSpec {
    double initial_step = 1e-3;
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    double max_step = 0.25;

    void validate() const {
        if (!(initial_step > 0.0) || !(abs_tol > 0.0) || !(rel_tol > 0.0) || !(max_step > 0.0))
            throw std::invalid_argument("OdeSpec: all fields must be > 0");
        if (max_step < initial_step)
            throw std::invalid_argument("OdeSpec: max_step must be >= initial_step");
    }
};

struct GridSpec {
    double x_min = -60.0;
    double x_max = 60.0;
    int n_points = 4096;
    double t_final = 8.0;
    int n_steps = 4000;

    void validate() const {
        if (!(x_min < x_max)) throw std::invalid_argument("GridSpec: x_min must be < x_max");
        if (n_points < 16) throw std::invalid_argument("GridSpec: n_points must be >= 16");
        if (n_steps < 1) throw std::invalid_argument("GridSpec: n_steps must be >= 1");
    }

    double dx() const { return (x_max - x_min) / (n_points - 1); }
    double x_at(int i) const { return x_min + i * dx(); }
};

// ---------------------------------------------------------------------------
// Trajectories
// ---------------------------------------------------------------------------

struct TrajectoryPoint {
    double t;
    double x;
};

/// Time-stamped Bohmian path with its launch position and CDF label.
struct Trajectory {
    double x0 = 0.0;
    double quantile = -1.0;  ///< in (0,1) when launched from a quantile, else -1
    std::vector<TrajectoryPoint> samples;
};

// ---------------------------------------------------------------------------
// Error types
// ---------------------------------------------------------------------------

/// Quadrature ran out of subdivisions before meeting tolerance. Carries the
/// best estimate and its error bound so callers can decide what to do.
class NonConvergence : public std::runtime_error {
public:
    NonConvergence(const std::string& what, Complex best, double bound)
        : std::runtime_error(what), best_estimate(best), error_bound(bound) {}
    Complex best_estimate;
    double error_bound;
};

/// ODE step size underflowed; in this problem that signals a density node
/// close to the path.
class StiffnessFailure : public std::runtime_error {
public:
    StiffnessFailure(const std::string& what, double t) : std::runtime_error(what), t_fail(t) {}
    double t_fail;
};

/// Reference evolver detected non-negligible amplitude at a hard-wall edge.
class BoundaryContamination : public std::runtime_error {
public:
    BoundaryContamination(const std::string& what, double t, double amp)
        : std::runtime_error(what), t_fail(t), edge_amplitude(amp) {}
    double t_fail;
    double edge_amplitude;
};

/// Arrival-time horizon cuts off too much envelope mass.
class TruncationTooTight : public std::runtime_error {
public:
    TruncationTooTight(const std::string& what, double bound)
        : std::runtime_error(what), tail_bound(bound) {}
    double tail_bound;
};

/// Velocity requested where rho is below the node guard floor.
class NodeProximity : public std::runtime_error {
public:
    NodeProximity(const std::string& what, double x, double t, double rho)
        : std::runtime_error(what), x(x), t(t), rho(rho) {}
    double x, t, rho;
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qscatter
