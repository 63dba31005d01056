#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <vector>

#include "qscatter/types.hpp"

namespace qscatter {

inline constexpr double kPi = 3.14159265358979323846;

// Norm and zero helpers so the panel machinery works for real, complex and
// small fixed-size Eigen integrands alike.
template <class V>
double value_norm(const V& v) {
    if constexpr (requires { v.cwiseAbs().maxCoeff(); })
        return v.cwiseAbs().maxCoeff();
    else
        return std::abs(v);
}

template <class V>
V zero_value() {
    if constexpr (requires { V::Zero(); })
        return V::Zero();
    else
        return V{};
}

namespace detail {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1] (positive half; node 0
// listed first). Column order: abscissa, Gauss weight, Kronrod weight.
inline constexpr double kGK15[8][3] = {
    {0.000000000000000000, 0.417959183673469388, 0.209482141084727828},
    {0.405845151377397167, 0.381830050505118945, 0.190350578064785410},
    {0.741531185599394440, 0.279705391489276668, 0.140653259715525919},
    {0.949107912342758525, 0.129484966168869693, 0.063092092629978553},
    {0.207784955007898468, 0.0,                  0.204432940075298892},
    {0.586087235467691130, 0.0,                  0.169004726639267903},
    {0.864864423359769073, 0.0,                  0.104790010322250184},
    {0.991455371120812639, 0.0,                  0.022935322010529225},
};

}  // namespace detail

template <class Value>
struct Panel {
    double a, b;
    Value integral;
    double error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

template <class Value, class F>
Panel<Value> gauss_kronrod_15(F&& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double hl = 0.5 * (b - a);
    const Value f0 = f(mid);
    Value g7 = detail::kGK15[0][1] * f0;
    Value k15 = detail::kGK15[0][2] * f0;
    for (int i = 1; i < 8; ++i) {
        const double dx = hl * detail::kGK15[i][0];
        const Value fi = f(mid + dx) + f(mid - dx);
        g7 += detail::kGK15[i][1] * fi;
        k15 += detail::kGK15[i][2] * fi;
    }
    g7 *= hl;
    k15 *= hl;
    return {a, b, k15, value_norm(Value(k15 - g7))};
}

/// Local angular frequency of the integrand (rad per unit x); used to seed
/// panels no wider than a quarter wavelength before adaptivity takes over.
using FrequencyFn = std::function<double(double)>;

template <class Value>
struct AdaptiveResult {
    Value integral;
    double error;
    int panels;
};

/// Adaptive Gauss-Kronrod integration of f over [a, b]. Converges when the
/// summed panel error is below max(abs_tol, rel_tol * |integral|); otherwise
/// throws NonConvergence carrying the best estimate.
template <class Value, class F>
AdaptiveResult<Value> integrate_adaptive(F&& f, double a, double b, const QuadratureSpec& spec,
                                         const FrequencyFn& frequency = {}) {
    spec.validate();
    std::priority_queue<Panel<Value>> queue;
    Value total = zero_value<Value>();
    double total_err = 0.0;
    int panels = 0;

    auto push = [&](double lo, double hi) {
        Panel<Value> p = gauss_kronrod_15<Value>(f, lo, hi);
        total += p.integral;
        total_err += p.error;
        ++panels;
        queue.push(std::move(p));
    };

    // Seed panels: cap width at a quarter of the local oscillation
    // wavelength when a frequency model is supplied.
    if (frequency) {
        const double min_width = (b - a) / 4.0e6;
        double lo = a;
        while (lo < b - min_width * 1e-6) {
            const double w0 = std::abs(frequency(lo));
            double width = (w0 > 0.0) ? (0.5 * kPi / w0) : (b - lo);
            width = std::clamp(width, min_width, b - lo);
            const double wm = std::abs(frequency(lo + 0.5 * width));
            if (wm > 0.0) width = std::clamp(std::min(width, 0.5 * kPi / wm), min_width, b - lo);
            if (panels >= spec.max_subdivisions)
                throw NonConvergence("quadrature: oscillation too fast for panel budget",
                                     Complex(value_norm(total)), total_err);
            push(lo, lo + width);
            lo += width;
        }
    } else {
        push(a, b);
    }

    auto converged = [&]() {
        return total_err <= std::max(spec.abs_tol, spec.rel_tol * value_norm(total));
    };

    while (!converged()) {
        if (panels >= spec.max_subdivisions || queue.empty()) {
            throw NonConvergence("quadrature: subdivision budget exhausted",
                                 Complex(value_norm(total)), total_err);
        }
        Panel<Value> worst = queue.top();
        queue.pop();
        total -= worst.integral;
        total_err -= worst.error;
        const double mid = 0.5 * (worst.a + worst.b);
        push(worst.a, mid);
        push(mid, worst.b);
    }
    return {total, total_err, panels};
}

struct LineIntegral {
    Complex value;
    double error;
    int panels;
};

/// Integral over the real line of a complex integrand that decays under a
/// Gaussian envelope of scale `width` around `center`. The domain is
/// truncated at envelope_cut * width on both sides.
template <class F>
LineIntegral integrate_complex_line(F&& f, double center, double width, const QuadratureSpec& spec,
                                    const FrequencyFn& frequency = {}) {
    if (!(width > 0.0)) throw std::invalid_argument("integrate_complex_line: width must be > 0");
    const double a = center - spec.envelope_cut * width;
    const double b = center + spec.envelope_cut * width;
    auto r = integrate_adaptive<Complex>(std::forward<F>(f), a, b, spec, frequency);
    return {r.integral, r.error, r.panels};
}

}  // namespace qscatter
