#include "sacf/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sacf {

CircleCond to_cond(const AccCircle& c, int side) {
    return {to_double(c.cocurvature), to_double(c.curvature), to_double(c.b1), to_double(c.b2),
            side};
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Gauss-Kronrod 7-15: nonnegative Kronrod nodes; odd indices and the centre
// are the embedded Gauss-7 nodes.
constexpr double kXgk[8] = {0.991455371120813, 0.949107912342759, 0.864864423359769,
                            0.741531185599394, 0.586087235467691, 0.405845151377397,
                            0.207784955007898, 0.0};
constexpr double kWgk[8] = {0.022935322010529, 0.063092092629979, 0.104790010322250,
                            0.140653259715525, 0.169004726639267, 0.190350578064785,
                            0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                           0.417959183673469};

struct GkResult {
    double value;
    double error;
};

GkResult gk15(const std::function<double(double)>& f, double lo, double hi) {
    const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
    double resk = 0, resg = 0;
    for (int j = 0; j < 8; ++j) {
        const double x = h * kXgk[j];
        const double fsum = (j == 7) ? f(c) : f(c - x) + f(c + x);
        resk += kWgk[j] * fsum;
        if (j % 2 == 1 || j == 7) resg += kWg[j / 2] * fsum;
    }
    const double fk = resk * h, fg = resg * h;
    return {fk, std::abs(fk - fg)};
}

double adaptive_gk(const std::function<double(double)>& f, double lo, double hi, double tol,
                   int depth) {
    const GkResult r = gk15(f, lo, hi);
    if (r.error <= tol || depth >= 48 || hi - lo < 1e-15 * (std::abs(lo) + std::abs(hi) + 1.0))
        return r.value;
    const double mid = 0.5 * (lo + hi);
    return adaptive_gk(f, lo, mid, 0.5 * tol, depth + 1) +
           adaptive_gk(f, mid, hi, 0.5 * tol, depth + 1);
}

// Panel integration with a sqrt substitution at both endpoints: integrable
// algebraic endpoint singularities (the tangency kind) become bounded.
double panel_sqrt_ends(const std::function<double(double)>& f, double a, double b, double tol) {
    const double m = 0.5 * (a + b), hl = m - a, hr = b - m;
    auto left = [&](double s) { return f(a + hl * s * s) * 2.0 * hl * s; };
    auto right = [&](double s) { return f(b - hr * s * s) * 2.0 * hr * s; };
    return adaptive_gk(left, 0.0, 1.0, 0.5 * tol, 0) + adaptive_gk(right, 0.0, 1.0, 0.5 * tol, 0);
}

}  // namespace

double integrate_1d(const std::function<double(double)>& f, double lo, double hi, double abs_tol) {
    if (!(lo < hi)) return 0.0;
    return adaptive_gk(f, lo, hi, abs_tol, 0);
}

namespace {

using Intervals = std::vector<std::pair<double, double>>;

void intersect_with(Intervals& acc, const Intervals& add) {
    Intervals out;
    for (const auto& [a1, b1] : acc)
        for (const auto& [a2, b2] : add) {
            const double lo = std::max(a1, a2), hi = std::min(b1, b2);
            if (lo < hi) out.emplace_back(lo, hi);
        }
    acc = std::move(out);
}

// {t : side*(alpha t^2 + beta t + gamma) <= 0} intersected with [tmin, inf)
Intervals quadratic_sublevel(double alpha, double beta, double gamma, int side, double tmin) {
    const double a = side * alpha, b = side * beta, g = side * gamma;
    Intervals out;
    auto push = [&](double lo, double hi) {
        lo = std::max(lo, tmin);
        if (lo < hi) out.emplace_back(lo, hi);
    };
    if (a == 0.0) {
        if (b == 0.0) {
            if (g <= 0.0) push(-kInf, kInf);
        } else if (b > 0) {
            push(-kInf, -g / b);
        } else {
            push(-g / b, kInf);
        }
        return out;
    }
    const double disc = b * b - 4.0 * a * g;
    if (disc <= 0.0) {
        if (a < 0) push(-kInf, kInf);
        return out;
    }
    const double sq = std::sqrt(disc);
    double r1 = (-b - sq) / (2 * a), r2 = (-b + sq) / (2 * a);
    if (r1 > r2) std::swap(r1, r2);
    if (a > 0) {
        push(r1, r2);
    } else {
        push(-kInf, r1);
        push(r2, kInf);
    }
    return out;
}

// parameter intervals of the region along w0 + t*(ux, uy)
Intervals param_intervals(const Region& region, double wx, double wy, double ux, double uy,
                          double tmin) {
    Intervals acc{{std::max(tmin, -kInf), kInf}};
    if (acc.front().first > acc.front().second) return {};
    for (const CircleCond& c : region) {
        const double alpha = c.a;
        const double beta = 2.0 * (c.a * (wx * ux + wy * uy) - (c.b1 * ux + c.b2 * uy));
        const double gamma = c.h(wx, wy);
        intersect_with(acc, quadratic_sublevel(alpha, beta, gamma, c.side, tmin));
        if (acc.empty()) break;
    }
    return acc;
}

void add_angle(std::vector<double>& v, double th) {
    th = std::fmod(th, 2 * M_PI);
    if (th < 0) th += 2 * M_PI;
    v.push_back(th);
}

// intersection points of two condition circles/lines (at most two)
std::vector<std::complex<double>> cond_intersections(const CircleCond& c1, const CircleCond& c2) {
    std::vector<std::complex<double>> out;
    auto line_line = [&](const CircleCond& l1, const CircleCond& l2) {
        const double det = l1.b1 * l2.b2 - l1.b2 * l2.b1;
        if (std::abs(det) < 1e-14) return;
        const double r1 = 0.5 * l1.c0, r2 = 0.5 * l2.c0;
        out.emplace_back((r1 * l2.b2 - r2 * l1.b2) / det, (l1.b1 * r2 - l2.b1 * r1) / det);
    };
    auto circle_line = [&](const CircleCond& c, const CircleCond& l) {
        const std::complex<double> q = c.center();
        const double t = c.radius();
        const double d = l.b1 * q.real() + l.b2 * q.imag() - 0.5 * l.c0;
        const double h2 = t * t - d * d;
        if (h2 < 0) return;
        const double h = std::sqrt(h2);
        const std::complex<double> foot = q - d * std::complex<double>(l.b1, l.b2);
        const std::complex<double> tang(-l.b2, l.b1);
        out.push_back(foot + h * tang);
        out.push_back(foot - h * tang);
    };
    if (c1.is_line() && c2.is_line()) {
        line_line(c1, c2);
    } else if (c1.is_line()) {
        circle_line(c2, c1);
    } else if (c2.is_line()) {
        circle_line(c1, c2);
    } else {
        const std::complex<double> q1 = c1.center(), q2 = c2.center();
        const double t1 = c1.radius(), t2 = c2.radius();
        const double d = std::abs(q2 - q1);
        if (d < 1e-14) return out;
        const double x = (d * d - t2 * t2 + t1 * t1) / (2 * d);
        const double y2 = t1 * t1 - x * x;
        if (y2 < 0) return out;
        const double y = std::sqrt(y2);
        const std::complex<double> e = (q2 - q1) / d, n(-e.imag(), e.real());
        out.push_back(q1 + x * e + y * n);
        out.push_back(q1 + x * e - y * n);
    }
    return out;
}

// breakpoint angles around P: tangent directions to every condition and the
// directions of intersections between each condition and the circle (P, r)
// (where the kernel's radial singularity can meet the region)
std::vector<double> polar_breakpoints(const Region& region, double px, double py, double r) {
    std::vector<double> brk{0.0, 2 * M_PI};
    for (const CircleCond& c : region) {
        if (c.is_line()) {
            const double th = std::atan2(c.b1, -c.b2);  // direction of i*b
            add_angle(brk, th);
            add_angle(brk, th + M_PI);
            if (r > 0 && std::isfinite(r)) {
                const double d = c.b1 * px + c.b2 * py - 0.5 * c.c0;  // signed distance of P
                if (std::abs(d) < r) {
                    const double half = std::sqrt(r * r - d * d);
                    const double fx = -d * c.b1, fy = -d * c.b2;       // foot relative to P
                    const double tx = -c.b2, ty = c.b1;
                    add_angle(brk, std::atan2(fy + half * ty, fx + half * tx));
                    add_angle(brk, std::atan2(fy - half * ty, fx - half * tx));
                }
            }
            continue;
        }
        const double qx = c.b1 / c.a, qy = c.b2 / c.a, t = 1.0 / std::abs(c.a);
        const double dx = qx - px, dy = qy - py, d = std::hypot(dx, dy);
        if (d > t) {
            const double base = std::atan2(dy, dx), delta = std::asin(std::min(1.0, t / d));
            add_angle(brk, base + delta);
            add_angle(brk, base - delta);
        }
        if (r > 0 && std::isfinite(r) && d > 1e-15) {
            // intersections of circle (q, t) with circle (P, r)
            const double x = (d * d - t * t + r * r) / (2 * d);
            const double y2 = r * r - x * x;
            if (y2 >= 0) {
                const double y = std::sqrt(y2);
                const double ex = dx / d, ey = dy / d;
                add_angle(brk, std::atan2(x * ey + y * ex, x * ex - y * ey));
                add_angle(brk, std::atan2(x * ey - y * ex, x * ex + y * ey));
            }
        }
    }
    // pairwise intersections of the conditions (region corners)
    for (std::size_t i = 0; i < region.size(); ++i)
        for (std::size_t j = i + 1; j < region.size(); ++j)
            for (const std::complex<double>& x : cond_intersections(region[i], region[j]))
                add_angle(brk, std::atan2(x.imag() - py, x.real() - px));
    std::sort(brk.begin(), brk.end());
    brk.erase(std::unique(brk.begin(), brk.end(),
                          [](double a, double b) { return std::abs(a - b) < 1e-13; }),
              brk.end());
    if (brk.front() > 0.0) brk.insert(brk.begin(), 0.0);
    if (brk.back() < 2 * M_PI) brk.push_back(2 * M_PI);
    return brk;
}

struct RadialKernel {
    // disk:        K = pi r^2/(rho^2-r^2)^2, Phi = -pi r^2/(2(rho^2-r^2))
    // complement:  K = pi r^2/(r^2-rho^2)^2, Phi = +pi r^2/(2(r^2-rho^2))
    // point:       K = rho^-4,               Phi = -1/(2 rho^2)
    enum class Kind { Disk, Complement, Point } kind = Kind::Point;
    double r = 0;

    double phi(double rho) const {
        switch (kind) {
            case Kind::Disk: {
                const double den = rho * rho - r * r;
                return -0.5 * M_PI * r * r / std::max(den, 1e-14 * r * r);
            }
            case Kind::Complement: {
                const double den = r * r - rho * rho;
                return 0.5 * M_PI * r * r / std::max(den, 1e-14 * r * r);
            }
            case Kind::Point: {
                const double d = std::max(rho, 1e-150);
                return -0.5 / (d * d);
            }
        }
        return 0;
    }
};

double polar_integral(const Region& region, double px, double py, const RadialKernel& kernel,
                      double abs_tol) {
    auto inner = [&](double th) {
        double s = 0;
        for (const auto& [lo, hi] : param_intervals(region, px, py, std::cos(th), std::sin(th), 0.0))
            s += (std::isinf(hi) ? 0.0 : kernel.phi(hi)) - kernel.phi(lo);
        return s;
    };
    const std::vector<double> brk = polar_breakpoints(region, px, py, kernel.r);
    double total = 0;
    const double tol = abs_tol / static_cast<double>(brk.size());
    for (std::size_t k = 0; k + 1 < brk.size(); ++k)
        if (brk[k] < brk[k + 1]) total += panel_sqrt_ends(inner, brk[k], brk[k + 1], tol);
    return total;
}

// kernel = half-plane at the line {<b,z> = c0/2}: integrates pi/(4 v^2) over
// the region, slicing parallel to the line at distance v
double halfplane_integral(const Region& region, const CircleCond& kernel, double abs_tol) {
    const double bx = kernel.b1, by = kernel.b2;
    const double sigma = kernel.side > 0 ? 1.0 : -1.0;
    const double ox = 0.5 * kernel.c0 * bx, oy = 0.5 * kernel.c0 * by;  // foot on the line
    const double tx = -by, ty = bx;
    auto slice_len = [&](double v) {
        const double wx = ox - sigma * v * bx, wy = oy - sigma * v * by;
        double len = 0;
        for (const auto& [lo, hi] : param_intervals(region, wx, wy, tx, ty, -kInf)) {
            const double l = std::max(lo, -1e7), h = std::min(hi, 1e7);
            if (l < h) len += h - l;
        }
        return len;
    };
    auto integrand = [&](double v) { return slice_len(v) * M_PI / (4.0 * v * v); };

    std::vector<double> brk{0.0};
    double vmax_interest = 4.0;
    for (const CircleCond& c : region) {
        if (c.is_line()) {
            const double dot = c.b1 * bx + c.b2 * by;
            if (std::abs(std::abs(dot) - 1.0) < 1e-12) {
                const double v = sigma * (0.5 * kernel.c0 - 0.5 * c.c0 * dot);
                if (v > 0) brk.push_back(v);
            }
            continue;
        }
        const double qx = c.b1 / c.a, qy = c.b2 / c.a, t = 1.0 / std::abs(c.a);
        const double vq = sigma * (0.5 * kernel.c0 - (bx * qx + by * qy));
        for (double v : {vq - t, vq + t})
            if (v > 0) brk.push_back(v);
        vmax_interest = std::max(vmax_interest, std::abs(vq) + t + 1.0);
    }
    std::sort(brk.begin(), brk.end());
    brk.erase(std::unique(brk.begin(), brk.end()), brk.end());
    brk.push_back(std::max(vmax_interest, brk.back() + 1.0));

    double total = 0;
    const double tol = abs_tol / static_cast<double>(brk.size() + 1);
    for (std::size_t k = 0; k + 1 < brk.size(); ++k)
        if (brk[k] < brk[k + 1]) total += panel_sqrt_ends(integrand, brk[k], brk[k + 1], tol);
    const double vmax = brk.back();  // tail, v = 1/s
    total += integrate_1d([&](double s) { return slice_len(1.0 / s) * M_PI / 4.0; }, 0.0,
                          1.0 / vmax, tol);
    return total;
}

}  // namespace

double region_kernel_integral(const Region& region, const CircleCond& kernel, double abs_tol) {
    if (kernel.is_line()) return halfplane_integral(region, kernel, abs_tol);
    RadialKernel rk;
    rk.r = kernel.radius();
    const bool disk = (kernel.a > 0) == (kernel.side > 0);
    rk.kind = disk ? RadialKernel::Kind::Disk : RadialKernel::Kind::Complement;
    const std::complex<double> c = kernel.center();
    return polar_integral(region, c.real(), c.imag(), rk, abs_tol);
}

double region_point_integral(const Region& region, std::complex<double> z, double abs_tol) {
    RadialKernel rk;
    rk.kind = RadialKernel::Kind::Point;
    rk.r = 0;
    return polar_integral(region, z.real(), z.imag(), rk, abs_tol);
}

double region_function_integral(const Region& region, std::complex<double> center,
                                const std::function<double(double, double)>& f, double abs_tol) {
    const double px = center.real(), py = center.imag();
    auto inner = [&](double th) {
        const double ux = std::cos(th), uy = std::sin(th);
        auto g = [&](double rho) { return f(px + rho * ux, py + rho * uy) * rho; };
        double s = 0;
        for (const auto& [lo, hi] : param_intervals(region, px, py, ux, uy, 0.0)) {
            const double cut = std::max(2.0 * lo + 1.0, 8.0);
            if (hi <= cut) {
                s += integrate_1d(g, lo, hi, abs_tol * 2e-3);
            } else {
                s += integrate_1d(g, lo, cut, abs_tol * 2e-3);
                // rho = 1/t tail: integrand f * rho drho = f(1/t)/t^3 dt
                const double t_lo = std::isinf(hi) ? 0.0 : 1.0 / hi;
                s += integrate_1d(
                    [&](double t) {
                        const double rho = 1.0 / t;
                        return f(px + rho * ux, py + rho * uy) * rho * rho * rho;
                    },
                    t_lo, 1.0 / cut, abs_tol * 2e-3);
            }
        }
        return s;
    };
    const std::vector<double> brk = polar_breakpoints(region, px, py, 0.0);
    double total = 0;
    const double tol = abs_tol / static_cast<double>(brk.size());
    for (std::size_t k = 0; k + 1 < brk.size(); ++k)
        if (brk[k] < brk[k + 1]) total += panel_sqrt_ends(inner, brk[k], brk[k + 1], tol);
    return total;
}

namespace {

double integrate_2d_impl(const std::function<double(double, double)>& f, double x0, double y0,
                         double x1, double y1, double abs_tol, int depth) {
    auto row = [&](double y) {
        return integrate_1d([&](double x) { return f(x, y); }, x0, x1, abs_tol * 0.02);
    };
    const GkResult r = gk15(row, y0, y1);
    if (r.error <= abs_tol || depth >= 22) return r.value;
    const double ym = 0.5 * (y0 + y1);
    return integrate_2d_impl(f, x0, y0, x1, ym, 0.5 * abs_tol, depth + 1) +
           integrate_2d_impl(f, x0, ym, x1, y1, 0.5 * abs_tol, depth + 1);
}

}  // namespace

double integrate_2d(const std::function<double(double, double)>& f, double x0, double y0, double x1,
                    double y1, double abs_tol) {
    return integrate_2d_impl(f, x0, y0, x1, y1, abs_tol, 0);
}

}  // namespace sacf
