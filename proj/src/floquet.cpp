#include "ringres/floquet.hpp"

#include "ringres/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace ringres {

namespace {

// Margin above which |trace| - 2 sqrt(det) counts as genuine instability.
// Sits above the roundoff floor of the fixed-step integration while
// leaving growth rates of order 1e-7 per period detectable.
constexpr double kInstabilityMargin = 5e-14;

double coefficient_value(const HillCoefficient& coeff, double nu, double t) {
    double mod = 1.0;
    for (std::size_t n = 0; n < coeff.harmonics.size(); ++n)
        mod += coeff.harmonics[n] * std::cos((n + 1) * nu * t);
    return coeff.omega0_sq * mod;
}

struct Mat2 {
    double a = 1.0, b = 0.0; // row 1: position parts
    double c = 0.0, d = 1.0; // row 2: velocity parts
};

// derivative of the fundamental matrix: rows swap under A = [[0,1],[-w2,0]]
inline Mat2 apply_system(double w2, const Mat2& m) {
    return Mat2{m.c, m.d, -w2 * m.a, -w2 * m.b};
}

inline Mat2 axpy(const Mat2& m, double s, const Mat2& k) {
    return Mat2{m.a + s * k.a, m.b + s * k.b, m.c + s * k.c, m.d + s * k.d};
}

} // namespace

MonodromyResult monodromy(const HillCoefficient& coeff, int steps_per_period,
                          double phase) {
    if (steps_per_period < 256)
        throw ValidationError("monodromy needs at least 256 steps per period");
    if (coeff.forcing_freq == 0.0)
        throw ValidationError("coefficient is not periodic: zero forcing frequency");

    const double nu = std::abs(coeff.forcing_freq);
    const double period = 2.0 * std::numbers::pi / nu;
    const double dt = period / steps_per_period;

    // coefficient sampled once on the half-step grid
    std::vector<double> w2(2 * steps_per_period + 1);
    for (std::size_t k = 0; k < w2.size(); ++k)
        w2[k] = coefficient_value(coeff, nu, phase + 0.5 * dt * k);

    Mat2 m;
    for (int i = 0; i < steps_per_period; ++i) {
        const double wa = w2[2 * i], wm = w2[2 * i + 1], wb = w2[2 * i + 2];
        const Mat2 k1 = apply_system(wa, m);
        const Mat2 k2 = apply_system(wm, axpy(m, 0.5 * dt, k1));
        const Mat2 k3 = apply_system(wm, axpy(m, 0.5 * dt, k2));
        const Mat2 k4 = apply_system(wb, axpy(m, dt, k3));
        m.a += dt / 6.0 * (k1.a + 2.0 * k2.a + 2.0 * k3.a + k4.a);
        m.b += dt / 6.0 * (k1.b + 2.0 * k2.b + 2.0 * k3.b + k4.b);
        m.c += dt / 6.0 * (k1.c + 2.0 * k2.c + 2.0 * k3.c + k4.c);
        m.d += dt / 6.0 * (k1.d + 2.0 * k2.d + 2.0 * k3.d + k4.d);
    }

    MonodromyResult out;
    out.trace = m.a + m.d;
    out.determinant = m.a * m.d - m.b * m.c;
    out.margin = std::abs(out.trace) -
                 2.0 * std::sqrt(std::max(out.determinant, 0.0));

    const double disc = out.trace * out.trace - 4.0 * out.determinant;
    if (disc >= 0.0) {
        const double root = std::sqrt(disc);
        const double l1 = 0.5 * (out.trace + std::copysign(root, out.trace));
        const double l2 = (l1 != 0.0) ? out.determinant / l1 : 0.0;
        out.multiplier_a = l1;
        out.multiplier_b = l2;
    } else {
        const double im = 0.5 * std::sqrt(-disc);
        out.multiplier_a = {0.5 * out.trace, im};
        out.multiplier_b = {0.5 * out.trace, -im};
    }

    out.stable = out.margin <= kInstabilityMargin;
    if (!out.stable) {
        const double biggest =
            std::max(std::abs(out.multiplier_a), std::abs(out.multiplier_b));
        out.growth_exponent = std::log(biggest) / period;
    }
    return out;
}

namespace {

HillCoefficient harmonic_set_coefficient(
    double omega0, const std::vector<std::pair<int, double>>& harmonics,
    double nu) {
    HillCoefficient coeff;
    coeff.omega0_sq = omega0 * omega0;
    coeff.forcing_freq = nu;
    int top = 0;
    for (const auto& [n, h] : harmonics) {
        if (n < 1)
            throw ValidationError("harmonic indices start at 1");
        top = std::max(top, n);
    }
    coeff.harmonics.assign(top, 0.0);
    for (const auto& [n, h] : harmonics)
        coeff.harmonics[n - 1] += h;
    return coeff;
}

} // namespace

std::vector<TongueInterval>
tongue_scan(double omega0, const std::vector<std::pair<int, double>>& harmonics,
            double nu_lo, double nu_hi, int resolution, int steps_per_period) {
    if (!(omega0 > 0.0))
        throw ValidationError("tongue scan needs omega0 > 0");
    if (resolution < 100)
        throw ValidationError("tongue scan needs resolution >= 100");
    if (!(nu_lo > 0.0) || !(nu_lo < nu_hi))
        throw ValidationError("tongue scan needs 0 < nu_lo < nu_hi");

    bool all_zero = true;
    for (const auto& [n, h] : harmonics)
        if (h != 0.0)
            all_zero = false;
    if (harmonics.empty() || all_zero)
        return {};

    auto classify = [&](double nu) {
        return monodromy(harmonic_set_coefficient(omega0, harmonics, nu),
                         steps_per_period);
    };

    const int points = resolution + 1;
    std::vector<MonodromyResult> grid(points);
    std::vector<double> nus(points);
    for (int i = 0; i < points; ++i)
        nus[i] = nu_lo + (nu_hi - nu_lo) * i / resolution;
    parallel_for(points, [&](int i) { grid[i] = classify(nus[i]); });

    auto refine = [&](double stable_nu, double unstable_nu) {
        while (std::abs(stable_nu - unstable_nu) >
               1e-6 * 0.5 * (stable_nu + unstable_nu)) {
            const double mid = 0.5 * (stable_nu + unstable_nu);
            if (classify(mid).stable)
                stable_nu = mid;
            else
                unstable_nu = mid;
        }
        return 0.5 * (stable_nu + unstable_nu);
    };

    std::vector<TongueInterval> out;
    int i = 0;
    while (i < points) {
        if (grid[i].stable) {
            ++i;
            continue;
        }
        int j = i;
        double growth = 0.0;
        while (j < points && !grid[j].stable) {
            growth = std::max(growth, grid[j].growth_exponent);
            ++j;
        }
        TongueInterval tongue;
        tongue.nu_lo = (i == 0) ? nus[0] : refine(nus[i - 1], nus[i]);
        tongue.nu_hi = (j == points) ? nus[points - 1] : refine(nus[j], nus[j - 1]);
        tongue.max_growth_exponent = growth;
        out.push_back(tongue);
        i = j;
    }
    return out;
}

std::vector<TongueInterval> tongue_scan(double omega0, double h, double nu_lo,
                                        double nu_hi, int resolution,
                                        int steps_per_period) {
    if (std::abs(h) >= 1.0)
        throw ValidationError("tongue scan expects |h| < 1");
    if (h == 0.0)
        return {};
    return tongue_scan(omega0, {{1, h}}, nu_lo, nu_hi, resolution,
                       steps_per_period);
}

ZoneVerification verify_zone(const InstabilityZone& zone,
                             const VerifyContext& ctx) {
    validate(ctx.primary);
    validate(ctx.satellite);
    if (!(zone.center > 0.0))
        throw ValidationError("zone center must be positive");
    if (ctx.grid_points < 9)
        throw ValidationError("verification grid needs at least 9 points");

    ZoneVerification out;
    out.analytic_lo = zone.center - zone.half_width;
    out.analytic_hi = zone.center + zone.half_width;
    out.analytic_empty = !(zone.half_width > 0.0);

    const double span = zone.half_width > 0.0 ? 3.0 * zone.half_width
                                              : 1e-3 * zone.center;
    const double lo = zone.center - span;
    const double hi = zone.center + span;

    auto classify = [&](double radius) {
        const HillCoefficient coeff =
            build_hill_coefficient(radius, ctx.alpha, ctx.primary,
                                   ctx.satellite, ctx.harmonic_count);
        return !monodromy(coeff, ctx.steps_per_period).stable;
    };

    const int points = ctx.grid_points;
    std::vector<char> unstable(points, 0);
    std::vector<double> radii(points);
    for (int i = 0; i < points; ++i)
        radii[i] = lo + (hi - lo) * i / (points - 1);
    parallel_for(points, [&](int i) { unstable[i] = classify(radii[i]) ? 1 : 0; });

    // pick the unstable run closest to the analytic center
    int best_lo = -1, best_hi = -1;
    double best_dist = std::numeric_limits<double>::infinity();
    int i = 0;
    while (i < points) {
        if (!unstable[i]) {
            ++i;
            continue;
        }
        int j = i;
        while (j < points && unstable[j])
            ++j;
        const double mid = 0.5 * (radii[i] + radii[j - 1]);
        const double dist = std::abs(mid - zone.center);
        if (dist < best_dist) {
            best_dist = dist;
            best_lo = i;
            best_hi = j - 1;
        }
        i = j;
    }

    if (best_lo < 0) {
        out.measured_empty = true;
        out.overlap_ratio = out.analytic_empty ? 1.0 : 0.0;
        return out;
    }

    auto refine = [&](double stable_r, double unstable_r) {
        for (int it = 0; it < 64; ++it) {
            if (std::abs(stable_r - unstable_r) <= 1e-12 * zone.center)
                break;
            const double mid = 0.5 * (stable_r + unstable_r);
            if (classify(mid))
                unstable_r = mid;
            else
                stable_r = mid;
        }
        return 0.5 * (stable_r + unstable_r);
    };

    out.measured_empty = false;
    out.measured_lo = (best_lo == 0) ? radii[0]
                                     : refine(radii[best_lo - 1], radii[best_lo]);
    out.measured_hi = (best_hi == points - 1)
                          ? radii[points - 1]
                          : refine(radii[best_hi + 1], radii[best_hi]);
    out.measured_center = 0.5 * (out.measured_lo + out.measured_hi);

    if (out.analytic_empty) {
        out.overlap_ratio = 0.0;
        return out;
    }
    const double cap = std::min(out.measured_hi, out.analytic_hi);
    const double cup = std::max(out.measured_lo, out.analytic_lo);
    const double overlap = std::max(0.0, cap - cup);
    const double shorter = std::min(out.measured_hi - out.measured_lo,
                                    out.analytic_hi - out.analytic_lo);
    out.overlap_ratio = shorter > 0.0 ? overlap / shorter : 0.0;
    return out;
}

} // namespace ringres
