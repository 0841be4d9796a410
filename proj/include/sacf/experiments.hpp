#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "sacf/dynamics.hpp"
#include "sacf/quadruples.hpp"

namespace sacf {

// Counter-based splitmix64 stream; the seed is recorded in every report.
class CounterRng {
  public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}
    std::uint64_t next();
    double uniform();  // [0, 1)

  private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

// Observed vs. predicted digit/substring frequencies.
struct FrequencyReport {
    std::map<std::string, double> observed;
    std::map<std::string, double> predicted;
    std::map<std::string, long long> counts;
    long long sample_size = 0;
    std::uint64_t seed = 0;
    double tolerance = 0;
    long long boundary_excluded = 0;

    std::string to_json() const;
    std::string to_csv() const;
};

// Experiment 1: enumerate X_N = {a^2=b^2+c^2+d^2, 0<a<=N, gcd(b,c,d)=1},
// expand every quadruple with T_L and tabulate first/second-digit and
// substring frequencies (2/3 swaps and inversions in a row).
FrequencyReport experiment_bounded_quadruples(long long max_a);

// Experiment 2: seeded uniform points in the unit square, T_B float
// expansions of the given length, substring frequencies. Boundary-flagged
// expansions are excluded and counted.
FrequencyReport experiment_random_points(int count, int steps, std::uint64_t seed);

}  // namespace sacf
