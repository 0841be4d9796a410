#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "sacf/acc.hpp"
#include "sacf/gaussian.hpp"
#include "sacf/letters.hpp"

namespace sacf {

// Region of the T_A/T_B partition: circle index i <-> B_i (A_i), triangle
// index i <-> B_i' (A_i').
struct RegionLabel {
    Side side;
    bool circle;
    int index;  // 1..4

    std::string str() const;
};

struct ClassifyResult {
    bool fixed = false;                 // one of the six tangency points
    ParityClass fixed_point{};          // valid when fixed
    RegionLabel region{};               // valid when !fixed
    Letter letter{};                    // generator the dynamics applies there
    bool boundary = false;              // float only: within eps of a boundary
};

// Exact classification of a canonical point (sign predicates only).
ClassifyResult classify(Side side, const GaussianProjectivePoint& z);
// Float classification; ties within eps go to the closed triangles and set
// the boundary flag.
ClassifyResult classify(Side side, std::complex<double> z, double eps = 1e-12);

// One step of T_B (side B) or T_A (side A). Throws std::domain_error on a
// fixed point.
std::pair<Letter, GaussianProjectivePoint> step(Side side, const GaussianProjectivePoint& z);
struct FloatStep {
    Letter letter;
    std::complex<double> z;
    bool boundary;
};
FloatStep step(Side side, std::complex<double> z, double eps = 1e-12);

struct ExpansionResult {
    Word word;
    std::optional<ParityClass> terminal;  // rational case
    long long steps = 0;
    bool truncated = false;
    bool boundary_hit = false;
    long long boundary_step = -1;  // first flagged step (float), -1 if none

    std::string to_json() const;
};

// Rational expansion: terminates at the parity-class fixed point.
ExpansionResult expand(Side side, const GaussianProjectivePoint& z, long long max_steps = 1 << 20);
// Float expansion: emits max_steps letters (or halts at a fixed point).
ExpansionResult expand(Side side, std::complex<double> z, long long max_steps = 256,
                       double eps = 1e-12);

// Reconstruction m1(m2(...mn(b))) of a word applied to a base point.
GaussianProjectivePoint apply_word(const Word& w, const GaussianProjectivePoint& b);

// For each of the six base points alpha and each k <= n, the image of alpha
// under the length-k prefix. convergents[alpha][k], k = 0..n.
std::vector<std::vector<GaussianProjectivePoint>> convergents(const Word& word, std::size_t n);

// Approximation capture report (Theorem of section 3.3).
struct CaptureReport {
    bool conclusive = false;
    long long candidates = 0;
    long long misses = 0;
    std::vector<GaussianProjectivePoint> missed;
    double constant_used = 0;
};

// Enumerates all canonical p/q with norm(q) <= qmax_norm and
// |z - p/q| < C/|q|^2, and checks that each appears among the six convergent
// sequences of the expansion of z.
CaptureReport capture_check(std::complex<double> z, long long qmax_norm, double capture_constant,
                            long long max_steps = 200, double eps = 1e-12);

double ford_constant();     // 1/sqrt(3)
double capture_constant();  // sqrt(2)/(1+sqrt(2))

// ---- invertible extension on geodesic pairs ----

// Pair (w, z) with w in A coordinates and z in B coordinates, lying in the
// geodesic domain G (disjoint A/B regions).
struct GeodesicPair {
    std::complex<double> w, z;
};

bool in_geodesic_domain(const GeodesicPair& g, double eps = 1e-12);

// T: applies the first letter of z's T_B expansion diagonally.
GeodesicPair extension_step(const GeodesicPair& g, double eps = 1e-12);
// T^{-1}: applies the first letter of w's T_A expansion diagonally.
GeodesicPair extension_step_inverse(const GeodesicPair& g, double eps = 1e-12);

}  // namespace sacf
