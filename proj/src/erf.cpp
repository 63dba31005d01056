#include "qscatter/erf.hpp"

#include <cmath>
#include <limits>

namespace qscatter {
namespace {

constexpr double kInvSqrtPi = 0.5641895835477562869;  // 1/sqrt(pi)

// Maclaurin series. Cancellation grows like exp(2 Re(z)^2), so this is only
// used for |Re z| <= 1.8 where at most ~3 digits are lost.
Complex erf_series(Complex z) {
    const Complex zz = z * z;
    Complex term = z;
    Complex sum = z;
    for (int n = 1; n < 400; ++n) {
        term *= -zz / static_cast<double>(n);
        const Complex c = term / static_cast<double>(2 * n + 1);
        sum += c;
        if (std::abs(c) < 1e-18 * std::abs(sum)) break;
    }
    return 2.0 * kInvSqrtPi * sum;
}

// Laplace continued fraction for sqrt(pi) e^{z^2} erfc(z), evaluated with
// the modified Lentz scheme. Requires Re z > 0; used off the imaginary axis
// in the mid annulus where neither the series nor the asymptotics are safe.
Complex erfcx_cf(Complex z) {
    const double tiny = 1e-300;
    Complex f = z;
    if (std::abs(f) == 0.0) f = tiny;
    Complex C = f;
    Complex D = 0.0;
    for (int k = 1; k < 400; ++k) {
        const double an = 0.5 * k;
        D = z + an * D;
        if (std::abs(D) < tiny) D = tiny;
        C = z + an / C;
        if (std::abs(C) < tiny) C = tiny;
        D = 1.0 / D;
        const Complex delta = C * D;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-17) break;
    }
    return kInvSqrtPi / f;  // = e^{z^2} erfc(z)
}

// Asymptotic series for e^{z^2} erfc(z), |z| >= 6, Re z > 0. Terms are added
// while they shrink; the smallest term is ~e^{-|z|^2} relative.
Complex erfcx_asymptotic(Complex z) {
    const Complex zz2 = 2.0 * z * z;
    Complex term = 1.0;
    Complex sum = 1.0;
    double prev = 1.0;
    for (int n = 1; n < 60; ++n) {
        term *= -static_cast<double>(2 * n - 1) / zz2;
        const double mag = std::abs(term);
        if (mag > prev) break;  // series started diverging
        prev = mag;
        sum += term;
        if (mag < 1e-18 * std::abs(sum)) break;
    }
    return kInvSqrtPi / z * sum;
}

// e^{z^2} erfc(z) for Re z >= 0.
Complex erfcx_right_half(Complex z) {
    const double ax = std::abs(z.real());
    const double r = std::abs(z);
    if (ax <= 1.8 || r <= 1.8) {
        return std::exp(z * z) * (1.0 - erf_series(z));
    }
    if (r >= 6.0) return erfcx_asymptotic(z);
    return erfcx_cf(z);
}

}  // namespace

Complex erf_complex(Complex z) {
    // erf(-z) = -erf(z) and erf(conj z) = conj(erf z): reduce to the first
    // quadrant so each branch is only tuned there.
    bool neg = false, conj = false;
    if (z.real() < 0.0) { z = -z; neg = true; }
    if (z.imag() < 0.0) { z = std::conj(z); conj = true; }

    Complex result;
    if (z.imag() == 0.0) {
        result = std::erf(z.real());
    } else if (std::abs(z.real()) <= 1.8 || std::abs(z) <= 1.8) {
        result = erf_series(z);
    } else {
        // 1 - e^{-z^2} erfcx(z); |e^{-z^2}| may be large near the imaginary
        // axis, but that region is handled by the series branch above.
        result = 1.0 - std::exp(-z * z) * erfcx_right_half(z);
    }

    if (conj) result = std::conj(result);
    if (neg) result = -result;
    return result;
}

Complex erfc_complex(Complex z) {
    if (z.real() >= 0.0) {
        bool conj = false;
        Complex w = z;
        if (w.imag() < 0.0) { w = std::conj(w); conj = true; }
        Complex r = (w.imag() == 0.0) ? Complex(std::erfc(w.real()))
                                      : std::exp(-w * w) * erfcx_right_half(w);
        return conj ? std::conj(r) : r;
    }
    return 2.0 - erfc_complex(-z);
}

}  // namespace qscatter
