#pragma once

#include <cmath>

#include "qscatter/types.hpp"

namespace qscatter {

template <class Value>
struct FdResult {
    Value value;
    double error;  ///< Richardson-based estimate
};

/// Central finite difference of order 1 or 2 with one Richardson refinement.
/// Works for real- or complex-valued callables of a real argument.
template <class F>
auto fd_derivative(F&& f, double x, int order, double h) -> FdResult<decltype(f(x))> {
    using Value = decltype(f(x));
    auto stencil = [&](double step) -> Value {
        if (order == 1) return (f(x + step) - f(x - step)) / (2.0 * step);
        return (f(x + step) - 2.0 * f(x) + f(x - step)) / (step * step);
    };
    if (!(h > 0.0)) throw std::invalid_argument("fd_derivative: h must be > 0");
    if (order != 1 && order != 2) throw std::invalid_argument("fd_derivative: order must be 1 or 2");
    const Value coarse = stencil(h);
    const Value fine = stencil(0.5 * h);
    // both stencils are O(h^2); one Richardson step gives O(h^4)
    const Value refined = (4.0 * fine - coarse) / 3.0;
    return {refined, std::abs(fine - coarse) / 3.0};
}

/// Time derivative helper with the same refinement (used by residual checks).
template <class F>
auto fd_time_derivative(F&& f, double t, double h) -> FdResult<decltype(f(t))> {
    return fd_derivative(std::forward<F>(f), t, 1, h);
}

}  // namespace qscatter
