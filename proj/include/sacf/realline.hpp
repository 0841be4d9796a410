#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sacf/integer.hpp"

namespace sacf {

// Reduced fraction p/q with q >= 0 (q = 0 means the infinite point, p > 0).
struct RatPair {
    Integer p, q;

    RatPair() : p(0), q(1) {}
    RatPair(Integer pp, Integer qq);

    bool is_infinity() const { return q == 0; }
    double value() const { return to_double(p) / to_double(q); }
    std::string str() const;

    friend bool operator==(const RatPair& a, const RatPair& b) { return a.p == b.p && a.q == b.q; }
};

enum class TripleLetter { A, B, C };
char triple_letter_char(TripleLetter l);

// The three-branch reflection map t on P^1(R): a(x) = -x on [-inf,0],
// b(x) = x/(2x-1) on [0,1], c(x) = 2-x on [1,inf]. Fixed points 0, 1, inf.
std::optional<std::pair<TripleLetter, RatPair>> t_real(const RatPair& x);
std::optional<std::pair<TripleLetter, double>> t_real(double x, double eps = 1e-14);

// Word of a float input (stops at fixed points or after max_steps).
std::vector<TripleLetter> real_expand(double x, int max_steps);

// Reflective Euclidean algorithm on integer pairs.
struct EuclidTrace {
    std::vector<std::pair<Integer, Integer>> states;  // includes start and halt
    std::vector<TripleLetter> letters;
    Integer gcd;
    Integer bezout_x, bezout_y;  // gcd = x*p + y*q
    std::string to_json() const;
};
EuclidTrace euclid_reduce(const Integer& p, const Integer& q);

// Convergent triples from (1/1, +-1/0, 0/1) by mediant updates: letter a/b/c
// replaces entry 1/2/3 with the mediant of the other two.
using ConvergentTriple = std::array<RatPair, 3>;
std::vector<ConvergentTriple> mediant_convergents(const std::vector<TripleLetter>& word,
                                                  bool negative_start);

// Invariant density: 1/(-x), 1/(x(1-x)), 1/(x-1) on the three pieces.
double real_density(double x);

// Billiard return time r(y, x) on (-inf,0) x (1,inf) and its integral
// against (x-y)^-2 (equal to pi^2/6).
double return_time(double y, double x);
double return_time_integral(double abs_tol = 1e-6);

// Pythagorean triple system (a^2 = b^2 + c^2, a > 0) and the conjugate
// circle map; terminals (g,-g,0), (g,0,+-g) resp. (-1,0), (0,+-1).
std::optional<std::array<Integer, 3>> triple_system_step(const std::array<Integer, 3>& t);
std::optional<std::pair<double, double>> pyth_circle_step(double x, double y, double eps = 1e-12);
std::optional<std::pair<RatPair, RatPair>> pyth_circle_step_exact(const RatPair& x,
                                                                  const RatPair& y);

// Conjugacy to the real system: phi(x, y) = (1 + x + y)/(2(1 + x)).
RatPair pyth_to_real(const RatPair& x, const RatPair& y);

// Romik's Euclidean algorithm (comparison reference), p > q >= 0.
std::vector<std::pair<Integer, Integer>> romik_euclid(Integer p, Integer q);

}  // namespace sacf
