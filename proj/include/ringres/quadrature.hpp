#pragma once

#include "ringres/core.hpp"

#include <cmath>
#include <utility>

namespace ringres {

namespace detail {

// Gauss 7 / Kronrod 15 rule on [-1, 1].
// Rows: abscissa, Gauss weight (zero at Kronrod-only nodes), Kronrod weight.
inline constexpr double kG7K15[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.000000000000000, 0.204432940075298},
    {0.586087235467691, 0.000000000000000, 0.169004726639267},
    {0.864864423359769, 0.000000000000000, 0.104790010322250},
    {0.991455371120813, 0.000000000000000, 0.022935322010529},
};

template <class F>
std::pair<double, double> g7k15(const F& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double f0 = f(mid);
    double gauss = kG7K15[0][1] * f0;
    double kronrod = kG7K15[0][2] * f0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kG7K15[i][0];
        const double fi = f(mid + dx) + f(mid - dx);
        gauss += kG7K15[i][1] * fi;
        kronrod += kG7K15[i][2] * fi;
    }
    gauss *= half;
    kronrod *= half;

    double err = std::abs(kronrod - gauss);
    err = 200.0 * err * std::sqrt(200.0 * err);
    return {kronrod, err};
}

} // namespace detail

/// Adaptive Gauss-Kronrod integration of f over [a, b].
///
/// Bisects until every panel satisfies the relative (or absolute)
/// tolerance against the running total. Throws NumericalError when the
/// panel budget is exhausted before convergence.
template <class F>
double integrate(const F& f, double a, double b, double rel_tol = 1e-10,
                 double abs_tol = 1e-300) {
    constexpr int kMaxPanels = 4000;
    struct Panel {
        double a, b;
    };
    Panel stack[256];
    int top = 0;
    stack[top++] = {a, b};

    double total = 0.0;
    // first sweep to seed the magnitude used by the relative test
    double magnitude = std::abs(detail::g7k15(f, a, b).first);

    int panels = 0;
    while (top > 0) {
        const Panel p = stack[--top];
        if (++panels > kMaxPanels)
            throw NumericalError("adaptive quadrature failed to converge");

        auto [value, err] = detail::g7k15(f, p.a, p.b);
        if (err <= rel_tol * magnitude || err <= abs_tol ||
            (p.b - p.a) <= 1e-15 * std::abs(b - a)) {
            total += value;
            magnitude = std::max(magnitude, std::abs(total));
            continue;
        }
        if (top + 2 > 256)
            throw NumericalError("adaptive quadrature stack overflow");
        const double mid = 0.5 * (p.a + p.b);
        stack[top++] = {p.a, mid};
        stack[top++] = {mid, p.b};
    }
    return total;
}

} // namespace ringres
