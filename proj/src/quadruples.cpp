#include "sacf/quadruples.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

namespace sacf {

Integer quad_gcd(const Quad& q) {
    Integer g = 0;
    for (const Integer& x : q) g = boost::multiprecision::gcd(g, x);
    return g;
}

bool quad_primitive(const Quad& q) { return quad_gcd(q) == 1; }

std::string quad_str(const Quad& q) {
    std::ostringstream os;
    os << "(" << q[0] << "," << q[1] << "," << q[2] << "," << q[3] << ")";
    return os.str();
}

LorentzQuadruple::LorentzQuadruple(Quad q) : v(std::move(q)) {
    if (lorentz_form(v) != 0 || v[0] <= 0)
        throw std::domain_error("not a Lorentz quadruple: " + quad_str(v));
}

bool LorentzQuadruple::is_terminal() const {
    return v[0] >= abs_int(v[1]) + abs_int(v[2]) + abs_int(v[3]);
}

DescartesQuadruple::DescartesQuadruple(Quad q) : v(std::move(q)) {
    if (descartes_form(v) != 0) throw std::domain_error("not a Descartes quadruple: " + quad_str(v));
}

bool DescartesQuadruple::is_simplest() const {
    Quad s = v;
    std::sort(s.begin(), s.end());
    const Integer g = quad_gcd(v);
    if (g == 0) return false;
    return s[0] == 0 && s[1] == 0 && s[2] == g && s[3] == g;
}

std::string ReductionTrace::to_json(TokenAlphabet alphabet) const {
    nlohmann::json j;
    j["input"] = nlohmann::json::array();
    for (const Integer& x : states.empty() ? terminal : states.front())
        j["input"].push_back(x.convert_to<long long>());
    j["gcd"] = gcd.convert_to<long long>();
    j["word"] = nlohmann::json::array();
    for (Letter l : word) j["word"].push_back(letter_token(l, alphabet));
    j["states"] = nlohmann::json::array();
    for (const Quad& s : states) {
        nlohmann::json row = nlohmann::json::array();
        for (const Integer& x : s) row.push_back(x.convert_to<long long>());
        j["states"].push_back(row);
    }
    j["terminal"] = nlohmann::json::array();
    for (const Integer& x : terminal) j["terminal"].push_back(x.convert_to<long long>());
    return j.dump();
}

// ---- T_L ----

std::pair<Letter, LorentzQuadruple> t_l_step(const LorentzQuadruple& q) {
    if (q.is_terminal()) throw std::domain_error("t_l_step: terminal quadruple");
    const Integer &a = q.v[0], &b = q.v[1], &c = q.v[2], &d = q.v[3];
    // paper order: inversions first, then swaps; strict inequalities
    const Integer cond[8] = {
        a + b + c + d,  // L1P
        a + b - c - d,  // L2P
        a - b + c - d,  // L3P
        a - b - c + d,  // L4P
        a - b - c - d,  // L1
        a - b + c + d,  // L2
        a + b - c + d,  // L3
        a + b + c - d,  // L4
    };
    static const int codes[8] = {4, 5, 6, 7, 0, 1, 2, 3};
    for (int k = 0; k < 8; ++k)
        if (cond[k] < 0) {
            const Letter l{codes[k]};
            return {l, LorentzQuadruple{letter_to_lorentz(l).apply(q.v)}};
        }
    throw std::logic_error("t_l_step: no applicable generator on non-terminal input");
}

namespace {

template <typename State, typename StepFn, typename TerminalFn>
ReductionTrace reduce_generic(Quad start, StepFn step_fn, TerminalFn terminal_fn) {
    ReductionTrace tr;
    tr.gcd = quad_gcd(start);
    if (tr.gcd > 1)
        for (Integer& x : start) x /= tr.gcd;
    State cur{start};
    tr.states.push_back(cur.v);
    while (!terminal_fn(cur)) {
        auto [letter, next] = step_fn(cur);
        tr.word.push_back(letter);
        cur = next;
        tr.states.push_back(cur.v);
    }
    tr.terminal = cur.v;
    return tr;
}

}  // namespace

ReductionTrace t_l_reduce(const LorentzQuadruple& q) {
    return reduce_generic<LorentzQuadruple>(
        q.v, [](const LorentzQuadruple& s) { return t_l_step(s); },
        [](const LorentzQuadruple& s) { return s.is_terminal(); });
}

// ---- sphere system ----

SpherePoint sphere_project(const LorentzQuadruple& q) {
    return {Rational(q.v[1]) / q.v[0], Rational(q.v[2]) / q.v[0], Rational(q.v[3]) / q.v[0]};
}

std::pair<Letter, SpherePoint> t_sph_step(const SpherePoint& p) {
    const Rational &X = p[0], &Y = p[1], &Z = p[2];
    const Rational cond[8] = {
        1 + X + Y + Z,  // L1P
        1 + X - Y - Z,  // L2P
        1 - X + Y - Z,  // L3P
        1 - X - Y + Z,  // L4P
        1 - X - Y - Z,  // L1
        1 - X + Y + Z,  // L2
        1 + X - Y + Z,  // L3
        1 + X + Y - Z,  // L4
    };
    static const int codes[8] = {4, 5, 6, 7, 0, 1, 2, 3};
    for (int k = 0; k < 8; ++k)
        if (cond[k] < 0) {
            const Letter l{codes[k]};
            const IntMatrix4& m = letter_to_lorentz(l);
            // apply the homogeneous Lorentz matrix to (1, X, Y, Z) and rescale
            std::array<Rational, 4> v{1, X, Y, Z}, w{};
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) w[i] += Rational(m(i, j)) * v[j];
            return {l, SpherePoint{w[1] / w[0], w[2] / w[0], w[3] / w[0]}};
        }
    throw std::domain_error("t_sph_step: fixed region (image of a terminal)");
}

GaussianProjectivePoint phi_map(const LorentzQuadruple& q) {
    const Integer &a = q.v[0], &b = q.v[1], &c = q.v[2], &d = q.v[3];
    const GaussianInteger num{a + c - d, b}, den{a + b - d, -c};
    if (num.is_zero() && den.is_zero()) {
        // only the terminal family (a, 0, 0, a); fixed-point table sends it to i
        if (!(b == 0 && c == 0 && a == d))
            throw std::logic_error("phi_map: unexpected 0/0");
        return GaussianProjectivePoint{GI_I, GI_ONE};
    }
    return GaussianProjectivePoint{num, den};
}

// ---- J change of variables ----

namespace {

Quad j_apply(const Quad& x) {
    Quad y = two_j().apply(x);
    for (Integer& t : y) {
        if (t % 2 != 0) throw std::domain_error("J image not integral (half-integer entries)");
        t /= 2;
    }
    return y;
}

}  // namespace

DescartesQuadruple lorentz_to_descartes(const LorentzQuadruple& q) {
    return DescartesQuadruple{j_apply(q.v)};
}

LorentzQuadruple descartes_to_lorentz(const DescartesQuadruple& q) {
    return LorentzQuadruple{j_apply(q.v)};
}

// ---- T_S / T_I ----

namespace {

std::pair<Letter, DescartesQuadruple> descartes_step(const DescartesQuadruple& q, bool invert_first) {
    if (q.is_simplest()) throw std::domain_error("descartes step: simplest quadruple");
    const Integer &a = q.v[0], &b = q.v[1], &c = q.v[2], &d = q.v[3];
    const bool inv[4] = {a < 0, b < 0, c < 0, d < 0};
    const bool swp[4] = {b + c + d < a, a + c + d < b, a + b + d < c, a + b + c < d};
    auto apply = [&](Letter l) -> std::pair<Letter, DescartesQuadruple> {
        return {l, DescartesQuadruple{letter_to_descartes(l).apply(q.v)}};
    };
    const bool* first = invert_first ? inv : swp;
    const bool* second = invert_first ? swp : inv;
    for (int i = 0; i < 4; ++i)
        if (first[i]) return apply(invert_first ? Letter::inversion(i + 1) : Letter::swap(i + 1));
    for (int i = 0; i < 4; ++i)
        if (second[i]) return apply(invert_first ? Letter::swap(i + 1) : Letter::inversion(i + 1));
    throw std::logic_error("descartes step: stuck on non-simplest input " + quad_str(q.v));
}

}  // namespace

std::pair<Letter, DescartesQuadruple> t_s_step(const DescartesQuadruple& q) {
    return descartes_step(q, true);
}

std::pair<Letter, DescartesQuadruple> t_i_step(const DescartesQuadruple& q) {
    return descartes_step(q, false);
}

ReductionTrace t_s_reduce(const DescartesQuadruple& q) {
    return reduce_generic<DescartesQuadruple>(
        q.v, [](const DescartesQuadruple& s) { return t_s_step(s); },
        [](const DescartesQuadruple& s) { return s.is_simplest(); });
}

ReductionTrace t_i_reduce(const DescartesQuadruple& q) {
    return reduce_generic<DescartesQuadruple>(
        q.v, [](const DescartesQuadruple& s) { return t_i_step(s); },
        [](const DescartesQuadruple& s) { return s.is_simplest(); });
}

bool is_root(const DescartesQuadruple& q) {
    Quad s = q.v;
    std::sort(s.begin(), s.end());
    return s[0] <= 0 && 0 <= s[1] && s[0] + s[1] + s[2] >= s[3];
}

bool swap_run_root_check(const DescartesQuadruple& q) {
    DescartesQuadruple cur = q;
    while (!cur.is_simplest()) {
        auto [letter, next] = t_i_step(cur);
        if (letter.is_inversion()) return is_root(cur);
        cur = next;
    }
    return is_root(cur);
}

// ---- T_D ----

namespace {

const std::array<IntMatrix4, 7>& d_table() {
    static const std::array<IntMatrix4, 7> t = {
        IntMatrix4::from({{2, 1, -1, -1}, {-1, 0, 1, 1}, {-1, -1, 0, 1}, {-1, -1, 1, 0}}),  // D1
        IntMatrix4::from({{2, -1, 1, -1}, {-1, 0, -1, 1}, {-1, 1, 0, 1}, {-1, 1, -1, 0}}),  // D2
        IntMatrix4::from({{2, -1, -1, 1}, {-1, 0, 1, -1}, {-1, 1, 0, -1}, {-1, 1, 1, 0}}),  // D3
        IntMatrix4::from({{2, -1, -1, -1}, {-1, 0, 1, 1}, {-1, 1, 0, 1}, {-1, 1, 1, 0}}),   // D4
        IntMatrix4::from({{2, -1, 1, 1}, {-1, 0, -1, -1}, {-1, 1, 0, -1}, {-1, 1, -1, 0}}), // D5
        IntMatrix4::from({{2, 1, -1, 1}, {-1, 0, 1, -1}, {-1, -1, 0, -1}, {-1, -1, 1, 0}}), // D6
        IntMatrix4::from({{2, 1, 1, -1}, {-1, 0, -1, 1}, {-1, -1, 0, 1}, {-1, -1, -1, 0}}), // D7
    };
    return t;
}

Quad quad_abs(Quad q) {
    for (Integer& x : q) x = abs_int(x);
    return q;
}

void check_nonneg_lorentz(const Quad& q) {
    for (const Integer& x : q)
        if (x < 0) throw std::domain_error("negative entry in nonneg quadruple " + quad_str(q));
    if (lorentz_form(q) != 0 || q[0] <= 0)
        throw std::domain_error("not a Lorentz quadruple: " + quad_str(q));
}

}  // namespace

const IntMatrix4& dletter_matrix(DLetter l) { return d_table()[l.index - 1]; }

bool is_height_origin(const Quad& q) {
    Quad s = q;
    std::sort(s.begin(), s.end());
    const Integer g = quad_gcd(q);
    return g > 0 && s[0] == 0 && s[1] == 0 && s[2] == g && s[3] == g && q[0] == g;
}

std::pair<DLetter, Quad> t_d_step(const Quad& q) {
    check_nonneg_lorentz(q);
    if (is_height_origin(q)) throw std::domain_error("t_d_step: origin quadruple");
    const Integer &a = q[0], &b = q[1], &c = q[2], &d = q[3];
    const Quad signed_next{2 * a - b - c - d, a - c - d, a - b - d, a - b - c};
    const Quad next = quad_abs(signed_next);
    // least-index D_i recovering q from the new state; when none works on the
    // componentwise-abs state (the all-positive sign pattern has no D matrix)
    // fall back to the signed state, where D_4 always reconstructs
    for (int i = 1; i <= 7; ++i)
        if (quad_abs(d_table()[i - 1].apply(next)) == q) return {DLetter{i}, next};
    for (int i = 1; i <= 7; ++i)
        if (quad_abs(d_table()[i - 1].apply(signed_next)) == q) return {DLetter{i}, next};
    throw std::logic_error("t_d_step: no D letter reconstructs " + quad_str(q));
}

std::string HeightTrace::to_json() const {
    nlohmann::json j;
    j["input"] = nlohmann::json::array();
    for (const Integer& x : states.front()) j["input"].push_back(x.convert_to<long long>());
    j["gcd"] = gcd.convert_to<long long>();
    j["word"] = nlohmann::json::array();
    for (DLetter l : word) j["word"].push_back("D" + std::to_string(l.index));
    j["states"] = nlohmann::json::array();
    for (const Quad& s : states) {
        nlohmann::json row = nlohmann::json::array();
        for (const Integer& x : s) row.push_back(x.convert_to<long long>());
        j["states"].push_back(row);
    }
    j["terminal"] = nlohmann::json::array();
    for (const Integer& x : terminal) j["terminal"].push_back(x.convert_to<long long>());
    j["path_length"] = word.size();
    return j.dump();
}

HeightTrace t_d_reduce(const Quad& q0) {
    HeightTrace tr;
    Quad q = q0;
    tr.gcd = quad_gcd(q);
    if (tr.gcd > 1)
        for (Integer& x : q) x /= tr.gcd;
    check_nonneg_lorentz(q);
    tr.states.push_back(q);
    while (!is_height_origin(q)) {
        auto [letter, next] = t_d_step(q);
        tr.word.push_back(letter);
        q = next;
        tr.states.push_back(q);
    }
    tr.terminal = q;
    return tr;
}

std::vector<Quad> height_neighbors(const Quad& q) {
    std::vector<Quad> out;
    for (int code = 0; code < 8; ++code) {
        Quad n = quad_abs(letter_to_lorentz(Letter{code}).apply(q));
        if (n == q) continue;  // self-loops are not edges
        if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(std::move(n));
    }
    return out;
}

Quad height_normalize(const Quad& q) {
    Quad s = quad_abs(q);
    std::sort(s.begin(), s.end(), [](const Integer& x, const Integer& y) { return x > y; });
    return s;
}

bool height_less(const Quad& a, const Quad& b) { return height_normalize(a) < height_normalize(b); }

std::optional<int> bfs_oracle(const Quad& q0, long long cap) {
    Quad q = q0;
    const Integer g = quad_gcd(q);
    if (g > 1)
        for (Integer& x : q) x /= g;
    check_nonneg_lorentz(q);
    if (is_height_origin(q)) return 0;

    auto key = [](const Quad& v) {
        std::uint64_t k = 0;
        for (const Integer& x : v) k = k * 2000003ULL + x.convert_to<std::uint64_t>();
        return k;
    };
    std::unordered_map<std::uint64_t, int> dist;
    std::deque<Quad> frontier;
    for (const Quad& origin : {Quad{1, 1, 0, 0}, Quad{1, 0, 1, 0}, Quad{1, 0, 0, 1}}) {
        dist[key(origin)] = 0;
        frontier.push_back(origin);
    }
    const std::uint64_t target = key(q);
    while (!frontier.empty()) {
        const Quad cur = frontier.front();
        frontier.pop_front();
        const int d = dist[key(cur)];
        for (const Quad& n : height_neighbors(cur)) {
            if (n[0] > cap) continue;
            const std::uint64_t k = key(n);
            if (dist.count(k)) continue;
            dist[k] = d + 1;
            if (k == target && n == q) return d + 1;
            frontier.push_back(n);
        }
    }
    return std::nullopt;
}

TableDiagnostic t_d_table_agreement(long long max_a) {
    // the paper's sign table: sign pattern of (B, C, D) -> D_i
    auto table_letter = [](const Quad& q) -> int {
        const Integer &a = q[0], &b = q[1], &c = q[2], &d = q[3];
        const int sb = sign(Integer(a - c - d)), sc = sign(Integer(a - b - d)),
                  sd = sign(Integer(a - b - c));
        if (sd < 0 && sc < 0 && sb > 0) return 1;
        if (sd < 0 && sb < 0 && sc > 0) return 2;
        if (sc < 0 && sb < 0 && sd > 0) return 3;
        if (sb < 0 && sc < 0 && sd < 0) return 4;
        if (sd > 0 && sc > 0 && sb < 0) return 5;
        if (sd > 0 && sb > 0 && sc < 0) return 6;
        if (sb > 0 && sc > 0 && sd < 0) return 7;
        return 0;  // zeros / all-positive: undefined in the table
    };
    TableDiagnostic diag;
    for (const Quad& q : enumerate_lorentz(max_a, true)) {
        Quad cur = q;
        while (!is_height_origin(cur)) {
            const int want = table_letter(cur);
            auto [letter, next] = t_d_step(cur);
            ++diag.steps;
            if (want == 0)
                ++diag.table_undefined;
            else if (want != letter.index)
                ++diag.mismatches;
            cur = next;
        }
    }
    return diag;
}

std::vector<Quad> enumerate_lorentz(long long max_a, bool nonneg_only) {
    std::vector<Quad> out;
    const long long a2max = max_a * max_a;
    auto isqrt = [](long long n) {
        long long r = static_cast<long long>(std::llround(std::sqrt((double)n)));
        while (r * r > n) --r;
        while ((r + 1) * (r + 1) <= n) ++r;
        return r;
    };
    for (long long b = nonneg_only ? 0 : -max_a; b <= max_a; ++b)
        for (long long c = nonneg_only ? 0 : -max_a; c <= max_a; ++c) {
            const long long bc = b * b + c * c;
            if (bc > a2max) continue;
            const long long dmax = isqrt(a2max - bc);
            for (long long d = nonneg_only ? 0 : -dmax; d <= dmax; ++d) {
                const long long n = bc + d * d;
                const long long a = isqrt(n);
                if (a > 0 && a * a == n) {
                    Quad q{a, b, c, d};
                    if (quad_primitive(q)) out.push_back(std::move(q));
                }
            }
        }
    return out;
}

}  // namespace sacf
