#pragma once

#include <string>

#include "qscatter/quadrature.hpp"
#include "qscatter/types.hpp"

namespace qscatter {

/// Below this time the integral-representation families switch to their
/// short-time closed forms (the integral prefactors are ~1/sqrt(t)).
inline constexpr double kTimeSwitch = 1e-3;

/// Scaled sech^2 well, -a^2 sech^2(a x).
double potential(double x, const PacketParams& p);

/// Scattering eigenstate (ik - a tanh(ax)) / (ik + a) e^{ikx}; reduces to a
/// plane wave as x -> -inf and carries unit transmission magnitude.
Complex eigenstate(double k, double x, const PacketParams& p);

/// Spectral weight (ik + a) phi0(k) with phi0 the Fourier transform of the
/// initial Gaussian.
Complex spectral_amplitude(double k, const PacketParams& p);
Complex gaussian_spectrum(double k, const PacketParams& p);  // phi0 alone

/// Dispersing free Gaussian packet.
Complex free_gaussian(double x, double t, const PacketParams& p);
Complex free_gaussian_dx(double x, double t, const PacketParams& p);

/// Closed-form packet built from the scattering eigenstates; exact solution
/// of the scaled equation of motion with the sech^2 well.
Complex interacting_nonreflecting(double x, double t, const PacketParams& p, double norm_constant);
Complex interacting_nonreflecting_dx(double x, double t, const PacketParams& p,
                                     double norm_constant);

/// Free evolution of the same initial packet; needs one oscillatory line
/// integral per evaluation for t >= kTimeSwitch.
Complex free_nonreflecting(double x, double t, const PacketParams& p, double norm_constant,
                           const QuadratureSpec& quad);

/// Gaussian packet evolved in the sech^2 well via the closed-form propagator
/// (free part in closed form + an erf-kernel correction integral).
Complex interacting_gaussian(double x, double t, const PacketParams& p,
                             const QuadratureSpec& quad);

enum class Family {
    FreeGaussian,
    InteractingNonreflecting,
    FreeNonreflecting,
    InteractingGaussian,
};

std::string family_name(Family f);
std::string family_tag(Family f);  ///< short tag used in CSV column names

/// Immutable wavefunction evaluator. norm_constant is the multiplicative
/// constant fixed at construction (1 for the Gaussian families).
class WaveField {
public:
    WaveField(Family family, PacketParams params, double norm_constant,
              QuadratureSpec quad = {});

    Complex value(double x, double t) const;

    /// d/dx of the field: analytic for the closed-form families, Richardson
    /// finite differences otherwise.
    Complex dx(double x, double t) const;
    bool has_analytic_dx() const;

    Family family() const { return family_; }
    const PacketParams& params() const { return params_; }
    double norm_constant() const { return norm_constant_; }
    const QuadratureSpec& quad() const { return quad_; }

private:
    Family family_;
    PacketParams params_;
    double norm_constant_;
    QuadratureSpec quad_;
};

}  // namespace qscatter
