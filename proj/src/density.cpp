#include "sacf/density.hpp"

#include <cmath>
#include <stdexcept>

namespace sacf {

namespace {

// h(x,y) = arctan(x/y)/(4x^2) - 1/(4xy) = (arctan(t) - t)/(4x^2), t = x/y.
// The two terms cancel for small t; switch to the series there.
double h_aux(double x, double y) {
    const double t = x / y;
    if (std::abs(t) < 0.1) {
        const double t2 = t * t;
        // (arctan t - t)/t^3 = -1/3 + t^2/5 - t^4/7 + ...
        const double p = -1.0 / 3 + t2 * (1.0 / 5 - t2 * (1.0 / 7 - t2 * (1.0 / 9 - t2 / 11)));
        return x * p / (4.0 * y * y * y);
    }
    return std::atan(t) / (4.0 * x * x) - 1.0 / (4.0 * x * y);
}

double H_aux(double x, double y) {
    return h_aux(x, y) + h_aux(1.0 - x, y) + h_aux(x * x - x + y * y, y);
}

double G_aux(double x, double y) {
    const double s = y * y - y + x * x;
    return h_aux(x, s) + h_aux(x * x - x + y * y, s) + h_aux(x * x - x + (1.0 - y) * (1.0 - y), s);
}

double triangle_density(double d2, double quarter = 0.25) {
    const double den = quarter - d2;
    return M_PI / (4.0 * den * den);
}

}  // namespace

double f_B(std::complex<double> z) {
    const ClassifyResult c = classify(Side::B, z);
    if (c.fixed) return std::numeric_limits<double>::infinity();
    const double x = z.real(), y = z.imag();
    if (c.region.circle) {
        switch (c.region.index) {
            case 1: return H_aux(x, y);
            case 2: return H_aux(x, 1.0 - y);
            case 3: return G_aux(x, y);
            case 4: return G_aux(1.0 - x, y);
        }
    } else {
        switch (c.region.index) {
            case 1: return triangle_density((x - 0.5) * (x - 0.5) + (y - 1.0) * (y - 1.0));
            case 2: return triangle_density((x - 0.5) * (x - 0.5) + y * y);
            case 3: return M_PI / (4.0 * (1.0 - x) * (1.0 - x));
            case 4: return M_PI / (4.0 * x * x);
        }
    }
    throw std::logic_error("f_B: unreachable");
}

double f_A(std::complex<double> w) {
    // f_A(w) = f_B(rho w) with rho the rotation by pi/2 about 1/(1-i),
    // i.e. rho(w) = i w + 1 (a Euclidean isometry, so no conformal factor)
    return f_B(std::complex<double>(1.0, 0.0) + std::complex<double>(0.0, 1.0) * w);
}

double invariant_density(Side side, std::complex<double> z) {
    return side == Side::B ? f_B(z) : f_A(z);
}

Region base_region_conditions(Side side, bool circle, int index) {
    const AccQuadruple& primary = (side == Side::B) ? base_quadruple_B() : base_quadruple_A();
    const AccQuadruple& dual = (side == Side::B) ? base_quadruple_A() : base_quadruple_B();
    Region r;
    if (circle) {
        r.push_back(to_cond(primary.rows[index - 1], +1));
        return r;
    }
    for (int k = 0; k < 4; ++k) r.push_back(to_cond(primary.rows[k], -1));  // outside the circles
    r.push_back(to_cond(dual.rows[index - 1], +1));                          // inside the dual disk
    return r;
}

namespace {

// components of the opposite-coordinate set attached to a circular region:
// script-B_i = A_i u (union of A_j', j != i), and the A-side mirror
std::vector<Region> opposite_components(Side side, int index) {
    const Side other = (side == Side::B) ? Side::A : Side::B;
    std::vector<Region> comps;
    comps.push_back(base_region_conditions(other, true, index));
    for (int j = 1; j <= 4; ++j)
        if (j != index) comps.push_back(base_region_conditions(other, false, j));
    return comps;
}

CircleCond primary_circle(Side side, int index, int sign_side) {
    const AccQuadruple& q = (side == Side::B) ? base_quadruple_B() : base_quadruple_A();
    return to_cond(q.rows[index - 1], sign_side);
}

CircleCond dual_circle(Side side, int index, int sign_side) {
    const AccQuadruple& q = (side == Side::B) ? base_quadruple_A() : base_quadruple_B();
    return to_cond(q.rows[index - 1], sign_side);
}

}  // namespace

double invariant_density_by_integration(Side side, std::complex<double> z, double abs_tol) {
    const ClassifyResult c = classify(side, z);
    if (c.fixed) return std::numeric_limits<double>::infinity();
    if (c.region.circle) {
        double s = 0;
        for (const Region& comp : opposite_components(side, c.region.index))
            s += region_point_integral(comp, z, abs_tol / 4);
        return s;
    }
    // triangular region: the opposite set is the complement of the dual disk
    const Region comp{dual_circle(side, c.region.index, -1)};
    return region_point_integral(comp, z, abs_tol);
}

double region_measure(const RegionLabel& label, double abs_tol) {
    if (label.circle) {
        // mu(B_i) = sum over components C of script-B_i of int_C kernel_{B_i}
        const CircleCond kernel = primary_circle(label.side, label.index, +1);
        double s = 0;
        for (const Region& comp : opposite_components(label.side, label.index))
            s += region_kernel_integral(comp, kernel, abs_tol / 4);
        return s;
    }
    // mu(B_i') = int over the triangle of the complement-of-dual-disk kernel
    const Region tri = base_region_conditions(label.side, false, label.index);
    return region_kernel_integral(tri, dual_circle(label.side, label.index, -1), abs_tol);
}

double farey_measure(Side side, const Word& w, double abs_tol) {
    if (w.empty()) throw std::domain_error("farey_measure: empty word");
    const FareyRegion fr = farey_region(side, w);

    // containing base region, from the first letter
    const Letter first = w.front();
    const bool in_circle_region = (side == Side::B) ? first.is_inversion() : first.is_swap();
    const int j = first.index();

    if (fr.kind == FareyRegion::Kind::Circle) {
        const CircleCond kernel = to_cond(fr.boundary[0], fr.circle_side);
        if (in_circle_region) {
            double s = 0;
            for (const Region& comp : opposite_components(side, j))
                s += region_kernel_integral(comp, kernel, abs_tol / 4);
            return s;
        }
        // F sits inside the triangle region whose opposite set is the
        // complement of the dual disk: integrate that kernel over F
        const Region freg{kernel};
        return region_kernel_integral(freg, dual_circle(side, j, -1), abs_tol);
    }

    // triangular F: conditions = 3 edges + circumscribed dual (side flags
    // already follow the membership convention side*h <= 0)
    Region freg;
    for (int k = 0; k < 3; ++k) freg.push_back(to_cond(fr.boundary[k], fr.edge_side[k]));
    freg.push_back(to_cond(fr.dual, fr.dual_side));
    if (!in_circle_region)
        return region_kernel_integral(freg, dual_circle(side, j, -1), abs_tol);
    // F inside a circle region: integrate the closed-form density over F
    // around an interior centre
    const std::complex<double> p = fr.interior.to_complex();
    return region_function_integral(
        freg, p, [&](double x, double y) { return invariant_density(side, {x, y}); }, abs_tol);
}

double closed_form_I(double alpha) {
    if (!(alpha > 1.0)) throw std::domain_error("closed_form_I: alpha must exceed 1");
    return 2.0 * M_PI * (alpha / std::sqrt(alpha * alpha - 1.0) - 1.0);
}

double closed_form_J(double alpha) {
    if (alpha < 0) throw std::domain_error("closed_form_J: alpha must be nonnegative");
    if (alpha == 0.0) return M_PI;
    const double t = 1.0 / (2.0 * alpha);
    if (t > 1.0) {
        // arccos continues to arccosh below alpha = 1/2
        return M_PI - 2.0 * std::acosh(t) / std::sqrt(t * t - 1.0);
    }
    if (t == 1.0) return M_PI - 2.0;
    return M_PI - 2.0 * std::acos(t) / std::sqrt(1.0 - t * t);
}

double closed_form_J_by_quadrature(double alpha, double abs_tol) {
    // x = (1 + sin s)/2 turns the defining integral into a smooth one:
    // J = int_{-pi/2}^{pi/2} (cos s / 2) / (alpha + cos s / 2) ds
    return integrate_1d(
        [&](double s) {
            const double c = 0.5 * std::cos(s);
            return c / (alpha + c);
        },
        -M_PI / 2, M_PI / 2, abs_tol);
}

PredictedFrequencies predicted_frequencies() {
    PredictedFrequencies p{};
    const double J0 = closed_form_J(0), J1 = closed_form_J(1), J2 = closed_form_J(2),
                 J3 = closed_form_J(3), J4 = closed_form_J(4);
    p.two_swaps = 12.0 * (M_PI / 4.0) * J1 / (2.0 * M_PI * M_PI);
    p.three_swaps = 12.0 / (8.0 * M_PI) * (J1 - closed_form_I(4));
    p.schmidt[0] = (J0 - 2 * J1 + J2) / (8.0 * M_PI);
    p.schmidt[1] = (J1 - 2 * J2 + J3) / (8.0 * M_PI);
    p.schmidt[2] = (J2 - 2 * J3 + J4) / (8.0 * M_PI);
    const auto [pi_inv, pi_swap] = first_digit_distribution();
    p.first_inversion = pi_inv;
    p.first_swap = pi_swap;
    return p;
}

double alt_run_frequency(int n) {
    if (n < 1) throw std::domain_error("alt_run_frequency: n >= 1");
    return closed_form_J(n - 1.0) / (8.0 * M_PI);
}

std::pair<double, double> first_digit_distribution() {
    const double inv = 2.0 * (1.0 - 1.0 / std::sqrt(3.0));
    return {inv, 2.0 / std::sqrt(3.0) - 1.0};
}

}  // namespace sacf
