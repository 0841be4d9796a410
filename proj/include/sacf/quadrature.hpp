#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "sacf/acc.hpp"

namespace sacf {

// Oriented circle/line condition in doubles; membership side*h <= 0 where
// h(z) = a|z|^2 - 2(b1 x + b2 y) + c0.
struct CircleCond {
    double c0, a, b1, b2;
    int side;  // +1: region where h < 0

    double h(double x, double y) const {
        return a * (x * x + y * y) - 2.0 * (b1 * x + b2 * y) + c0;
    }
    bool is_line() const { return a == 0.0; }
    std::complex<double> center() const { return {b1 / a, b2 / a}; }
    double radius() const { return 1.0 / std::abs(a); }
};

CircleCond to_cond(const AccCircle& c, int side);

using Region = std::vector<CircleCond>;

// Adaptive Gauss-Kronrod 7-15 on [lo, hi].
double integrate_1d(const std::function<double(double)>& f, double lo, double hi, double abs_tol);

// Integral over the region of the |z-w|^-4 kernel attached to an oriented
// circle region K (disk, complement of a disk, or half-plane); the region
// must be disjoint from K. Inner radial/slice integrals are analytic.
double region_kernel_integral(const Region& region, const CircleCond& kernel, double abs_tol);

// Direct evaluation of int_region |z-w|^-4 dudv for a point z outside the
// region (used as the density oracle).
double region_point_integral(const Region& region, std::complex<double> z, double abs_tol);

// Nested polar integration of a smooth f over the region around the given
// centre (vertex singularities of f on the boundary are integrable).
double region_function_integral(const Region& region, std::complex<double> center,
                                const std::function<double(double, double)>& f, double abs_tol);

// Plain 2D integral over a rectangle (nested adaptive Gauss-Kronrod).
double integrate_2d(const std::function<double(double, double)>& f, double x0, double y0, double x1,
                    double y1, double abs_tol);

}  // namespace sacf
