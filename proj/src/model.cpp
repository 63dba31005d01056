#include "qscatter/model.hpp"

#include <cmath>

#include "qscatter/erf.hpp"
#include "qscatter/finite_diff.hpp"

namespace qscatter {
namespace {

const Complex kI(0.0, 1.0);

double sech(double y) { return 1.0 / std::cosh(y); }

}  // namespace

double potential(double x, const PacketParams& p) {
    const double s = sech(p.a_bar * x);
    return -p.a_bar * p.a_bar * s * s;
}

Complex eigenstate(double k, double x, const PacketParams& p) {
    const Complex ik(0.0, k);
    return (ik - p.a_bar * std::tanh(p.a_bar * x)) / (ik + p.a_bar) * std::exp(kI * k * x);
}

Complex gaussian_spectrum(double k, const PacketParams& p) {
    const double s0 = p.sigma0_bar;
    const double dk = k - p.k0_bar;
    const double amp = std::pow(2.0 * s0 * s0 / kPi, 0.25);
    return amp * std::exp(-s0 * s0 * dk * dk) * std::exp(-kI * dk * p.xc_bar);
}

Complex spectral_amplitude(double k, const PacketParams& p) {
    return (Complex(0.0, k) + p.a_bar) * gaussian_spectrum(k, p);
}

Complex free_gaussian(double x, double t, const PacketParams& p) {
    const auto w = ComplexWidth::at(p, t);
    const double xi = x - p.xc_bar - p.u() * t;
    const Complex pref = std::pow(2.0 * kPi, -0.25) / std::sqrt(w.s_t);
    return pref * std::exp(-xi * xi / (4.0 * w.s_t * p.sigma0_bar) +
                           kI * p.k0_bar * (x - 0.5 * p.u() * t));
}

Complex free_gaussian_dx(double x, double t, const PacketParams& p) {
    const auto w = ComplexWidth::at(p, t);
    const double xi = x - p.xc_bar - p.u() * t;
    const Complex dlog = kI * p.k0_bar - xi / (2.0 * p.sigma0_bar * w.s_t);
    return dlog * free_gaussian(x, t, p);
}

Complex interacting_nonreflecting(double x, double t, const PacketParams& p,
                                  double norm_constant) {
    const auto w = ComplexWidth::at(p, t);
    const double xi = x - p.xc_bar - p.u() * t;
    const Complex bracket =
        kI * p.k0_bar - xi / (2.0 * p.sigma0_bar * w.s_t) - p.a_bar * std::tanh(p.a_bar * x);
    return norm_constant * bracket * free_gaussian(x, t, p);
}

Complex interacting_nonreflecting_dx(double x, double t, const PacketParams& p,
                                     double norm_constant) {
    const auto w = ComplexWidth::at(p, t);
    const double xi = x - p.xc_bar - p.u() * t;
    const double sh = sech(p.a_bar * x);
    const Complex dlog = kI * p.k0_bar - xi / (2.0 * p.sigma0_bar * w.s_t);
    const Complex bracket = dlog - p.a_bar * std::tanh(p.a_bar * x);
    const Complex bracket_dx =
        -1.0 / (2.0 * p.sigma0_bar * w.s_t) - p.a_bar * p.a_bar * sh * sh;
    return norm_constant * (bracket_dx + bracket * dlog) * free_gaussian(x, t, p);
}

namespace {

// Initial packet psi_nr(x) = N [i k0 - (x - xc)/(2 s0^2) - a tanh(ax)] psi_G(x, 0)
// together with its second derivative; the short-time branch of the free
// evolution uses psi(t) ~ psi(0) + (i t / 2) psi''(0).
Complex initial_nr_short_time(double x, double t, const PacketParams& p, double norm_constant) {
    const double s02 = p.sigma0_bar * p.sigma0_bar;
    const double a = p.a_bar;
    const double th = std::tanh(a * x);
    const double sh2 = sech(a * x) * sech(a * x);
    const Complex G = free_gaussian(x, 0.0, p);
    const Complex d0 = kI * p.k0_bar - (x - p.xc_bar) / (2.0 * s02);
    const Complex b = d0 - a * th;
    const Complex bp = -1.0 / (2.0 * s02) - a * a * sh2;
    const Complex bpp = 2.0 * a * a * a * sh2 * th;
    const Complex psi0 = norm_constant * b * G;
    if (t == 0.0) return psi0;
    const Complex psi0_xx =
        norm_constant * G * (bpp + 2.0 * bp * d0 + b * (d0 * d0 - 1.0 / (2.0 * s02)));
    return psi0 + t * (kI / 2.0) * psi0_xx;
}

}  // namespace

Complex free_nonreflecting(double x, double t, const PacketParams& p, double norm_constant,
                           const QuadratureSpec& quad) {
    if (t < kTimeSwitch) return initial_nr_short_time(x, t, p, norm_constant);

    const auto w = ComplexWidth::at(p, t);
    const double s0 = p.sigma0_bar;
    const double xi = x - p.xc_bar - p.u() * t;

    // quadratic exponent alpha (x' - c)^2 with Re(alpha) = -1/(4 s0^2);
    // the envelope on the real axis is exp(-(x' - xc)^2 / (4 s0^2)).
    const Complex alpha = (kI / (2.0 * t)) * (w.s_t / s0);
    const Complex c = (s0 / w.s_t) * (x - p.u() * t + kI * t * p.xc_bar / (2.0 * s0 * s0));
    const double cr = c.real(), ci = c.imag();

    auto integrand = [&](double xp) {
        const Complex d = xp - c;
        return Complex(std::tanh(p.a_bar * xp)) * std::exp(alpha * d * d);
    };
    FrequencyFn freq = [cr, ci, t, s0](double xp) {
        return std::abs((xp - cr) / t + ci / (2.0 * s0 * s0));
    };
    const auto g = integrate_complex_line(integrand, p.xc_bar, std::sqrt(2.0) * s0, quad, freq);

    const Complex pref =
        p.a_bar * std::sqrt(1.0 / (2.0 * kPi * kI * t)) * std::sqrt(w.s_t / s0);
    const Complex bracket = kI * p.k0_bar - xi / (2.0 * s0 * w.s_t) - pref * g.value;
    return norm_constant * bracket * free_gaussian(x, t, p);
}

Complex interacting_gaussian(double x, double t, const PacketParams& p,
                             const QuadratureSpec& quad) {
    if (t < kTimeSwitch) return free_gaussian(x, 0.0, p);

    const double a = p.a_bar;
    const Complex A = a * std::sqrt(kI * t / 2.0);
    const Complex B = std::sqrt(1.0 / (2.0 * kI * t));

    auto integrand = [&](double xp) {
        const double d = x - xp;
        const Complex kernel = erf_complex(A - d * B) + erf_complex(A + d * B);
        return free_gaussian(xp, 0.0, p) / std::cosh(a * xp) * kernel;
    };
    FrequencyFn freq = [&](double xp) { return std::abs(p.k0_bar) + std::abs(x - xp) / t; };
    const auto corr =
        integrate_complex_line(integrand, p.xc_bar, std::sqrt(2.0) * p.sigma0_bar, quad, freq);

    const Complex pref = 0.5 * a * std::exp(kI * a * a * t / 2.0) / (2.0 * std::cosh(a * x));
    return free_gaussian(x, t, p) + pref * corr.value;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::FreeGaussian: return "free-gaussian";
        case Family::InteractingNonreflecting: return "interacting-nonreflecting";
        case Family::FreeNonreflecting: return "free-nonreflecting";
        case Family::InteractingGaussian: return "interacting-gaussian";
    }
    return "?";
}

std::string family_tag(Family f) {
    switch (f) {
        case Family::FreeGaussian: return "f_G";
        case Family::InteractingNonreflecting: return "i_nr";
        case Family::FreeNonreflecting: return "f_nr";
        case Family::InteractingGaussian: return "i_G";
    }
    return "?";
}

WaveField::WaveField(Family family, PacketParams params, double norm_constant, QuadratureSpec quad)
    : family_(family), params_(params), norm_constant_(norm_constant), quad_(quad) {
    params_.validate();
    quad_.validate();
}

Complex WaveField::value(double x, double t) const {
    switch (family_) {
        case Family::FreeGaussian: return free_gaussian(x, t, params_);
        case Family::InteractingNonreflecting:
            return interacting_nonreflecting(x, t, params_, norm_constant_);
        case Family::FreeNonreflecting:
            return free_nonreflecting(x, t, params_, norm_constant_, quad_);
        case Family::InteractingGaussian: return interacting_gaussian(x, t, params_, quad_);
    }
    return {};
}

bool WaveField::has_analytic_dx() const {
    return family_ == Family::FreeGaussian || family_ == Family::InteractingNonreflecting;
}

Complex WaveField::dx(double x, double t) const {
    switch (family_) {
        case Family::FreeGaussian: return free_gaussian_dx(x, t, params_);
        case Family::InteractingNonreflecting:
            return interacting_nonreflecting_dx(x, t, params_, norm_constant_);
        default: {
            auto f = [&](double xx) { return value(xx, t); };
            return fd_derivative(f, x, 1, 1e-3).value;
        }
    }
}

}  // namespace qscatter
