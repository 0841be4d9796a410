#pragma once

#include <array>
#include <functional>
#include <vector>

#include "sacf/group.hpp"
#include "sacf/letters.hpp"

namespace sacf {

using Vec3 = std::array<double, 3>;

// Branch selection of T_sph at a point (priority order of T_L); returns the
// generator code 0..7 (Letter::code) or -1 on the terminal set.
int sphere_branch(const Vec3& p);

// The branch maps (involutive reflections); branch(code) applied to p.
Vec3 sphere_apply(int code, const Vec3& p);

Vec3 t_sph(const Vec3& p);  // the dynamical system itself

// Quasi-uniform Fibonacci lattice of n points on S^2.
std::vector<Vec3> fibonacci_sphere(int n);

// Transfer operator of T_sph: (F f)(x) = sum over branch preimages y of
// f(y)/(2 +- X +- Y +- Z)^4, with the branch-membership indicator.
double transfer_apply(const std::function<double(const Vec3&)>& f, const Vec3& x);

// Grid values of F^k(1) on the lattice.
std::vector<double> transfer_iterate_grid(const std::vector<Vec3>& grid, int k);

// int g dmu by lattice average (mu = normalized area measure).
double sphere_integral(const std::vector<Vec3>& grid, const std::function<double(const Vec3&)>& g);

// mu of the swap region (branches L_1..L_4) on the lattice.
double swap_region_fraction(const std::vector<Vec3>& grid);
// int_{swap region} F^k(1) dmu on the lattice.
double swap_region_transfer_mass(const std::vector<Vec3>& grid, int k);

}  // namespace sacf
