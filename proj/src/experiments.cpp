#include "sacf/experiments.hpp"

#include <sstream>

#include <json.hpp>

#include "sacf/density.hpp"

namespace sacf {

std::uint64_t CounterRng::next() {
    std::uint64_t z = seed_ + (++counter_) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double CounterRng::uniform() { return (next() >> 11) * 0x1.0p-53; }

std::string FrequencyReport::to_json() const {
    nlohmann::json j;
    j["observed"] = observed;
    j["predicted"] = predicted;
    j["counts"] = counts;
    j["sample_size"] = sample_size;
    j["seed"] = seed;
    j["tolerance"] = tolerance;
    j["boundary_excluded"] = boundary_excluded;
    return j.dump(2);
}

std::string FrequencyReport::to_csv() const {
    std::ostringstream os;
    os << "key,observed,predicted\n";
    os.setf(std::ios::fixed);
    os.precision(12);
    for (const auto& [k, v] : observed) {
        os << k << "," << v << ",";
        auto it = predicted.find(k);
        if (it != predicted.end()) os << it->second;
        os << "\n";
    }
    return os.str();
}

namespace {

struct SubstringCounts {
    long long pairs = 0, two_swaps = 0, two_inversions = 0;
    long long triples = 0, three_swaps = 0, three_inversions = 0;
    long long first_letters = 0, first_swap = 0;
    long long second_letters = 0, second_swap = 0;

    void add(const Word& w) {
        if (!w.empty()) {
            ++first_letters;
            if (w[0].is_swap()) ++first_swap;
        }
        if (w.size() >= 2) {
            ++second_letters;
            if (w[1].is_swap()) ++second_swap;
        }
        for (std::size_t k = 0; k + 1 < w.size(); ++k) {
            ++pairs;
            if (w[k].is_swap() && w[k + 1].is_swap()) ++two_swaps;
            if (w[k].is_inversion() && w[k + 1].is_inversion()) ++two_inversions;
        }
        for (std::size_t k = 0; k + 2 < w.size(); ++k) {
            ++triples;
            if (w[k].is_swap() && w[k + 1].is_swap() && w[k + 2].is_swap()) ++three_swaps;
            if (w[k].is_inversion() && w[k + 1].is_inversion() && w[k + 2].is_inversion())
                ++three_inversions;
        }
    }

    void fill(FrequencyReport& rep) const {
        auto rate = [](long long n, long long d) { return d ? double(n) / double(d) : 0.0; };
        rep.observed["two_swaps"] = rate(two_swaps, pairs);
        rep.observed["two_inversions"] = rate(two_inversions, pairs);
        rep.observed["three_swaps"] = rate(three_swaps, triples);
        rep.observed["three_inversions"] = rate(three_inversions, triples);
        rep.observed["first_swap"] = rate(first_swap, first_letters);
        rep.observed["first_inversion"] = rate(first_letters - first_swap, first_letters);
        rep.observed["second_swap"] = rate(second_swap, second_letters);
        rep.observed["second_inversion"] = rate(second_letters - second_swap, second_letters);
        rep.counts["pairs"] = pairs;
        rep.counts["triples"] = triples;
        rep.counts["words"] = first_letters;
        const PredictedFrequencies p = predicted_frequencies();
        rep.predicted["two_swaps"] = p.two_swaps;
        rep.predicted["two_inversions"] = p.two_swaps;
        rep.predicted["three_swaps"] = p.three_swaps;
        rep.predicted["three_inversions"] = p.three_swaps;
        rep.predicted["first_swap"] = p.first_swap;
        rep.predicted["first_inversion"] = p.first_inversion;
    }
};

}  // namespace

FrequencyReport experiment_bounded_quadruples(long long max_a) {
    FrequencyReport rep;
    SubstringCounts counts;
    long long n = 0;
    for (const Quad& q : enumerate_lorentz(max_a, false)) {
        ++n;
        const ReductionTrace tr = t_l_reduce(LorentzQuadruple{q});
        counts.add(tr.word);
    }
    rep.sample_size = n;
    counts.fill(rep);
    return rep;
}

FrequencyReport experiment_random_points(int count, int steps, std::uint64_t seed) {
    FrequencyReport rep;
    rep.seed = seed;
    CounterRng rng(seed);
    SubstringCounts counts;
    for (int k = 0; k < count; ++k) {
        const std::complex<double> z{rng.uniform(), rng.uniform()};
        const ExpansionResult r = expand(Side::B, z, steps);
        if (r.boundary_hit) {
            ++rep.boundary_excluded;
            continue;
        }
        ++rep.sample_size;
        counts.add(r.word);
    }
    counts.fill(rep);
    return rep;
}

}  // namespace sacf
