#pragma once

#include <complex>
#include <vector>

#include "sacf/dynamics.hpp"
#include "sacf/quadrature.hpp"

namespace sacf {

// Invariant densities f_B and f_A (closed forms; +infinity at the six fixed
// points, triangular-side limits on boundaries).
double f_B(std::complex<double> z);
double f_A(std::complex<double> w);
double invariant_density(Side side, std::complex<double> z);

// Independent evaluation by direct numerical integration of |z-w|^-4 over
// the opposite-side component regions (the implicit definition).
double invariant_density_by_integration(Side side, std::complex<double> z, double abs_tol = 1e-9);

// The region of the base partition as circle conditions (doubles).
Region base_region_conditions(Side side, bool circle, int index);

// mu-measure of a base region (expected pi^2/4 each).
double region_measure(const RegionLabel& label, double abs_tol = 1e-8);

// mu_B (side B) or mu_A (side A) of a Farey region.
double farey_measure(Side side, const Word& w, double abs_tol = 1e-7);

// Hyperbolic-area helpers: I(alpha) = 2 pi (alpha/sqrt(alpha^2-1) - 1) for
// alpha > 1; J(alpha) = int_0^1 dx/(alpha + sqrt(x(1-x))).
double closed_form_I(double alpha);
double closed_form_J(double alpha);
double closed_form_J_by_quadrature(double alpha, double abs_tol = 1e-12);

struct PredictedFrequencies {
    double two_swaps;     // = two inversions
    double three_swaps;   // = three inversions
    double schmidt[3];    // exactly-n alternating strings, n = 1, 2, 3
    double first_inversion, first_swap;
};
PredictedFrequencies predicted_frequencies();
double alt_run_frequency(int n);  // J(n-1)/(8 pi)

std::pair<double, double> first_digit_distribution();  // (p_inversion, p_swap)

}  // namespace sacf
