#include "sacf/dynamics.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace sacf {

namespace {

// Integer h-form coefficients (cocurv, curv, b1, b2) of the base circles.
constexpr int kCircB[4][4] = {{0, 0, 0, -1}, {2, 0, 0, 1}, {0, 2, 0, 1}, {2, 2, 2, 1}};
constexpr int kCircA[4][4] = {{2, 2, 1, 2}, {0, 2, 1, 0}, {2, 0, 1, 0}, {0, 0, -1, 0}};

// h = curv*N(p) - 2*(b1*Re(p qbar) + b2*Im(p qbar)) + cocurv*N(q); the region
// interior is h < 0.
Integer h_exact(const int (&c)[4], const Integer& np, const Integer& nq, const Integer& u,
                const Integer& v) {
    return c[1] * np - 2 * (Integer(c[2]) * u + Integer(c[3]) * v) + c[0] * nq;
}

double h_float(const int (&c)[4], double x, double y) {
    return c[1] * (x * x + y * y) - 2.0 * (c[2] * x + c[3] * y) + c[0];
}

Letter region_letter(Side side, bool circle, int index) {
    // T_B: s_i on triangles B_i', s_i^perp on circles B_i.
    // T_A: s_i on circles A_i, s_i^perp on triangles A_i'.
    const bool inversion = (side == Side::B) ? circle : !circle;
    return inversion ? Letter::inversion(index) : Letter::swap(index);
}

const std::array<std::complex<double>, 6>& fixed_points_complex() {
    static const std::array<std::complex<double>, 6> pts = {
        std::complex<double>{0, 0}, {1, 0}, {INFINITY, 0}, {0, 1}, {1, 1}, {0.5, 0.5}};
    return pts;
}

}  // namespace

std::string RegionLabel::str() const {
    std::string s(1, side == Side::A ? 'A' : 'B');
    s += static_cast<char>('0' + index);
    if (!circle) s += '\'';
    return s;
}

ClassifyResult classify(Side side, const GaussianProjectivePoint& z) {
    ClassifyResult r;
    if (is_tangency_point(z)) {
        r.fixed = true;
        r.fixed_point = parity_class(z);
        return r;
    }
    const GaussianInteger w = z.p * z.q.conj();
    const Integer np = z.p.norm(), nq = z.q.norm();
    const auto& primary = (side == Side::B) ? kCircB : kCircA;
    const auto& dual = (side == Side::B) ? kCircA : kCircB;
    for (int i = 0; i < 4; ++i)
        if (h_exact(primary[i], np, nq, w.re, w.im) < 0) {
            r.region = {side, true, i + 1};
            r.letter = region_letter(side, true, i + 1);
            return r;
        }
    int found = -1;
    for (int i = 0; i < 4; ++i)
        if (h_exact(dual[i], np, nq, w.re, w.im) < 0) {
            if (found >= 0) throw std::logic_error("classify: point in two triangles");
            found = i;
        }
    if (found < 0) throw std::logic_error("classify: point in no region");
    r.region = {side, false, found + 1};
    r.letter = region_letter(side, false, found + 1);
    return r;
}

ClassifyResult classify(Side side, std::complex<double> z, double eps) {
    ClassifyResult r;
    // fixed-point proximity (infinity as huge modulus)
    if (std::abs(z) > 1.0 / eps || std::isinf(z.real()) || std::isinf(z.imag())) {
        r.fixed = true;
        r.fixed_point = ParityClass::Infinity;
        return r;
    }
    static const ParityClass classes[6] = {ParityClass::Zero,     ParityClass::One,
                                           ParityClass::Infinity, ParityClass::I,
                                           ParityClass::OnePlusI, ParityClass::OneOverOneMinusI};
    for (int k = 0; k < 6; ++k) {
        if (k == 2) continue;
        if (std::abs(z - fixed_points_complex()[k]) <= eps) {
            r.fixed = true;
            r.fixed_point = classes[k];
            return r;
        }
    }
    const auto& primary = (side == Side::B) ? kCircB : kCircA;
    const auto& dual = (side == Side::B) ? kCircA : kCircB;
    const double x = z.real(), y = z.imag();
    double hp[4];
    for (int i = 0; i < 4; ++i) {
        hp[i] = h_float(primary[i], x, y);
        if (std::abs(hp[i]) <= eps) r.boundary = true;
    }
    for (int i = 0; i < 4; ++i)
        if (hp[i] < -eps) {  // triangles win ties
            r.region = {side, true, i + 1};
            r.letter = region_letter(side, true, i + 1);
            return r;
        }
    int best = 0;
    double hbest = h_float(dual[0], x, y);
    int negatives = hbest < 0 ? 1 : 0;
    for (int i = 1; i < 4; ++i) {
        const double h = h_float(dual[i], x, y);
        if (h < 0) ++negatives;
        if (h < hbest) {
            hbest = h;
            best = i;
        }
    }
    if (negatives != 1 || std::abs(hbest) <= eps) r.boundary = true;
    r.region = {side, false, best + 1};
    r.letter = region_letter(side, false, best + 1);
    return r;
}

std::pair<Letter, GaussianProjectivePoint> step(Side side, const GaussianProjectivePoint& z) {
    const ClassifyResult c = classify(side, z);
    if (c.fixed) throw std::domain_error("step: fixed point");
    return {c.letter, letter_to_mobius(c.letter)(z)};
}

FloatStep step(Side side, std::complex<double> z, double eps) {
    const ClassifyResult c = classify(side, z, eps);
    if (c.fixed) throw std::domain_error("step: fixed point");
    return {c.letter, letter_to_mobius(c.letter)(z), c.boundary};
}

ExpansionResult expand(Side side, const GaussianProjectivePoint& z, long long max_steps) {
    ExpansionResult r;
    GaussianProjectivePoint cur = z;
    while (r.steps < max_steps) {
        const ClassifyResult c = classify(side, cur);
        if (c.fixed) {
            r.terminal = c.fixed_point;
            return r;
        }
        r.word.push_back(c.letter);
        cur = letter_to_mobius(c.letter)(cur);
        ++r.steps;
    }
    r.truncated = true;
    return r;
}

ExpansionResult expand(Side side, std::complex<double> z, long long max_steps, double eps) {
    ExpansionResult r;
    std::complex<double> cur = z;
    while (r.steps < max_steps) {
        const ClassifyResult c = classify(side, cur, eps);
        if (c.fixed) {
            r.terminal = c.fixed_point;
            return r;
        }
        if (c.boundary && !r.boundary_hit) {
            r.boundary_hit = true;
            r.boundary_step = r.steps;
        }
        r.word.push_back(c.letter);
        cur = letter_to_mobius(c.letter)(cur);
        ++r.steps;
    }
    r.truncated = true;
    return r;
}

std::string ExpansionResult::to_json() const {
    nlohmann::json j;
    j["word"] = nlohmann::json::array();
    for (Letter l : word) j["word"].push_back(letter_token(l));
    if (terminal)
        j["terminal"] = parity_label(*terminal);
    else
        j["terminal"] = nullptr;
    j["steps"] = steps;
    j["truncated"] = truncated;
    j["boundary_hit"] = boundary_hit;
    return j.dump();
}

GaussianProjectivePoint apply_word(const Word& w, const GaussianProjectivePoint& b) {
    GaussianProjectivePoint z = b;
    for (auto it = w.rbegin(); it != w.rend(); ++it) z = letter_to_mobius(*it)(z);
    return z;
}

std::vector<std::vector<GaussianProjectivePoint>> convergents(const Word& word, std::size_t n) {
    if (n > word.size()) throw std::domain_error("convergents: prefix longer than word");
    std::vector<std::vector<GaussianProjectivePoint>> out(6);
    ExtendedMobius prefix;
    for (std::size_t k = 0; k <= n; ++k) {
        if (k > 0) prefix = prefix * letter_to_mobius(word[k - 1]);
        for (int a = 0; a < 6; ++a)
            out[a].push_back(prefix(parity_point(static_cast<ParityClass>(a))));
    }
    return out;
}

double ford_constant() { return 1.0 / std::sqrt(3.0); }
double capture_constant() { return std::sqrt(2.0) / (1.0 + std::sqrt(2.0)); }

CaptureReport capture_check(std::complex<double> z, long long qmax_norm, double C,
                            long long max_steps, double eps) {
    CaptureReport rep;
    rep.constant_used = C;
    const ExpansionResult ex = expand(Side::B, z, max_steps, eps);
    const std::size_t horizon =
        ex.boundary_hit ? static_cast<std::size_t>(ex.boundary_step) : ex.word.size();

    std::set<GaussianProjectivePoint> seen;
    std::array<Integer, 6> max_qnorm{};
    ExtendedMobius prefix;
    for (std::size_t k = 0; k <= horizon; ++k) {
        if (k > 0) prefix = prefix * letter_to_mobius(ex.word[k - 1]);
        for (int a = 0; a < 6; ++a) {
            const GaussianProjectivePoint c = prefix(parity_point(static_cast<ParityClass>(a)));
            seen.insert(c);
            const Integer nq = c.q.norm();
            if (nq > max_qnorm[a]) max_qnorm[a] = nq;
        }
    }
    rep.conclusive = true;
    for (int a = 0; a < 6; ++a)
        if (max_qnorm[a] < 16 * Integer(qmax_norm)) rep.conclusive = false;

    // enumerate canonical q (re > 0, or re = 0 with im > 0), nearby lattice p,
    // test the capture inequality
    const long long qr_max = static_cast<long long>(std::sqrt((double)qmax_norm)) + 1;
    for (long long qr = 0; qr <= qr_max; ++qr)
        for (long long qi = (qr == 0 ? 1 : -qr_max); qi <= qr_max; ++qi) {
            const long long nq = qr * qr + qi * qi;
            if (nq == 0 || nq > qmax_norm) continue;
            const std::complex<double> q{(double)qr, (double)qi};
            const std::complex<double> p0 = z * q;
            const double radius = C / std::sqrt((double)nq) + 1e-9;
            for (long long pr = (long long)std::floor(p0.real() - radius);
                 pr <= (long long)std::ceil(p0.real() + radius); ++pr)
                for (long long pi = (long long)std::floor(p0.imag() - radius);
                     pi <= (long long)std::ceil(p0.imag() + radius); ++pi) {
                    const std::complex<double> p{(double)pr, (double)pi};
                    if (std::abs(z - p / q) >= C / (double)nq) continue;
                    const GaussianProjectivePoint cand{GaussianInteger{pr, pi},
                                                       GaussianInteger{qr, qi}};
                    if (cand.q.norm() != nq) continue;  // not in lowest terms; counted at its own q
                    ++rep.candidates;
                    if (!seen.count(cand)) {
                        ++rep.misses;
                        rep.missed.push_back(cand);
                    }
                }
        }
    return rep;
}

// ---- invertible extension ----

bool in_geodesic_domain(const GeodesicPair& g, double eps) {
    const ClassifyResult ca = classify(Side::A, g.w, eps);
    const ClassifyResult cb = classify(Side::B, g.z, eps);
    if (ca.fixed || cb.fixed) return false;
    const bool wc = ca.region.circle, zc = cb.region.circle;
    const int i = ca.region.index, j = cb.region.index;
    if (wc && zc) return i == j;    // A_i x B_i
    if (!wc && zc) return i != j;   // A_i' x B_j, i != j
    if (wc && !zc) return i != j;   // A_i x B_j', i != j
    return true;                    // A_i' x B_j'
}

GeodesicPair extension_step(const GeodesicPair& g, double eps) {
    if (!in_geodesic_domain(g, eps)) throw std::domain_error("extension_step: pair not in G");
    const ClassifyResult cb = classify(Side::B, g.z, eps);
    const ExtendedMobius& m = letter_to_mobius(cb.letter);
    return {m(g.w), m(g.z)};
}

GeodesicPair extension_step_inverse(const GeodesicPair& g, double eps) {
    if (!in_geodesic_domain(g, eps)) throw std::domain_error("extension_step_inverse: pair not in G");
    const ClassifyResult ca = classify(Side::A, g.w, eps);
    const ExtendedMobius& m = letter_to_mobius(ca.letter);
    return {m(g.w), m(g.z)};
}

}  // namespace sacf
