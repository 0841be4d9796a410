#include "sacf/sphere.hpp"

#include "sacf/group.hpp"

#include <cmath>
#include <stdexcept>

namespace sacf {

namespace {

// sign patterns of the branch conditions 1 + s1 X + s2 Y + s3 Z < 0 in the
// T_L priority order; entry order matches Letter codes via kCodes
constexpr int kSigns[8][3] = {
    {+1, +1, +1},  // L1P
    {+1, -1, -1},  // L2P
    {-1, +1, -1},  // L3P
    {-1, -1, +1},  // L4P
    {-1, -1, -1},  // L1
    {-1, +1, +1},  // L2
    {+1, -1, +1},  // L3
    {+1, +1, -1},  // L4
};
constexpr int kCodes[8] = {4, 5, 6, 7, 0, 1, 2, 3};

int priority_of_code(int code) {
    for (int k = 0; k < 8; ++k)
        if (kCodes[k] == code) return k;
    throw std::logic_error("bad code");
}

double branch_condition(int priority, const Vec3& p) {
    return 1.0 + kSigns[priority][0] * p[0] + kSigns[priority][1] * p[1] +
           kSigns[priority][2] * p[2];
}

}  // namespace

int sphere_branch(const Vec3& p) {
    for (int k = 0; k < 8; ++k)
        if (branch_condition(k, p) < 0) return kCodes[k];
    return -1;
}

Vec3 sphere_apply(int code, const Vec3& p) {
    // homogeneous action of the Lorentz generator on (1, X, Y, Z), rescaled
    const IntMatrix4& m = letter_to_lorentz(Letter{code});
    double v[4] = {1.0, p[0], p[1], p[2]}, w[4] = {0, 0, 0, 0};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) w[i] += to_double(m(i, j)) * v[j];
    return {w[1] / w[0], w[2] / w[0], w[3] / w[0]};
}

Vec3 t_sph(const Vec3& p) {
    const int code = sphere_branch(p);
    if (code < 0) throw std::domain_error("t_sph: terminal region");
    return sphere_apply(code, p);
}

std::vector<Vec3> fibonacci_sphere(int n) {
    std::vector<Vec3> pts;
    pts.reserve(n);
    const double ga = M_PI * (3.0 - std::sqrt(5.0));
    for (int k = 0; k < n; ++k) {
        const double z = 1.0 - (2.0 * k + 1.0) / n;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double th = ga * k;
        pts.push_back({r * std::cos(th), r * std::sin(th), z});
    }
    return pts;
}

double transfer_apply(const std::function<double(const Vec3&)>& f, const Vec3& x) {
    double s = 0;
    for (int code = 0; code < 8; ++code) {
        const Vec3 y = sphere_apply(code, x);
        if (sphere_branch(y) != code) continue;  // not an actual preimage
        const double den = branch_condition(priority_of_code(code), x) + 1.0;  // 2 +- X +- Y +- Z
        s += f(y) / (den * den * den * den);
    }
    return s;
}

std::vector<double> transfer_iterate_grid(const std::vector<Vec3>& grid, int k) {
    std::function<double(const Vec3&)> fk = [](const Vec3&) { return 1.0; };
    for (int i = 0; i < k; ++i) {
        auto prev = fk;
        fk = [prev](const Vec3& x) { return transfer_apply(prev, x); };
    }
    std::vector<double> out;
    out.reserve(grid.size());
    for (const Vec3& p : grid) out.push_back(fk(p));
    return out;
}

double sphere_integral(const std::vector<Vec3>& grid, const std::function<double(const Vec3&)>& g) {
    double s = 0;
    for (const Vec3& p : grid) s += g(p);
    return s / static_cast<double>(grid.size());
}

double swap_region_fraction(const std::vector<Vec3>& grid) {
    double s = 0;
    for (const Vec3& p : grid) {
        const int code = sphere_branch(p);
        if (code >= 0 && Letter{code}.is_swap()) s += 1.0;
    }
    return s / static_cast<double>(grid.size());
}

double swap_region_transfer_mass(const std::vector<Vec3>& grid, int k) {
    const std::vector<double> vals = transfer_iterate_grid(grid, k);
    double s = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const int code = sphere_branch(grid[i]);
        if (code >= 0 && Letter{code}.is_swap()) s += vals[i];
    }
    return s / static_cast<double>(grid.size());
}

}  // namespace sacf
