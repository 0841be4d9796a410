#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sacf/gaussian.hpp"
#include "sacf/group.hpp"
#include "sacf/integer.hpp"
#include "sacf/letters.hpp"

namespace sacf {

using Quad = std::array<Integer, 4>;

Integer quad_gcd(const Quad& q);
bool quad_primitive(const Quad& q);
std::string quad_str(const Quad& q);

// Integer solution of a^2 = b^2 + c^2 + d^2 with a > 0.
struct LorentzQuadruple {
    Quad v;
    explicit LorentzQuadruple(Quad q);
    const Integer& a() const { return v[0]; }
    bool is_terminal() const;  // a >= |b|+|c|+|d|, i.e. two of b,c,d vanish
};

// Integer solution of (a+b+c+d)^2 = 2(a^2+b^2+c^2+d^2).
struct DescartesQuadruple {
    Quad v;
    explicit DescartesQuadruple(Quad q);
    bool is_simplest() const;  // permutation of g*(1,1,0,0)
};

struct ReductionTrace {
    Word word;                      // emission order; reconstruction is
                                    // mat(w1)*...*mat(wn) * terminal
    std::vector<Quad> states;       // states[0] = primitive input, ..., terminal
    Quad terminal;
    Integer gcd;                    // divided out up front, reattached in reports
    std::string to_json(TokenAlphabet alphabet) const;
};

// ---- T_L (Lorentz, strict inequalities) ----
std::pair<Letter, LorentzQuadruple> t_l_step(const LorentzQuadruple& q);
ReductionTrace t_l_reduce(const LorentzQuadruple& q);

// ---- sphere system ----
using SpherePoint = std::array<Rational, 3>;  // X^2+Y^2+Z^2 = 1
SpherePoint sphere_project(const LorentzQuadruple& q);            // (b/a, c/a, d/a)
std::pair<Letter, SpherePoint> t_sph_step(const SpherePoint& p);  // exact; halts like T_L

// phi ∘ pi: (a,b,c,d) -> (a+c-d+bi) / (a+b-d-ci); the degenerate family
// (a,0,0,a) maps to i per the fixed-point correspondence.
GaussianProjectivePoint phi_map(const LorentzQuadruple& q);

// ---- J change of variables ----
DescartesQuadruple lorentz_to_descartes(const LorentzQuadruple& q);
LorentzQuadruple descartes_to_lorentz(const DescartesQuadruple& q);

// ---- T_S / T_I (Descartes) ----
std::pair<Letter, DescartesQuadruple> t_s_step(const DescartesQuadruple& q);
std::pair<Letter, DescartesQuadruple> t_i_step(const DescartesQuadruple& q);
ReductionTrace t_s_reduce(const DescartesQuadruple& q);
ReductionTrace t_i_reduce(const DescartesQuadruple& q);

// Root quadruple test: sorted a <= 0 <= b <= c <= d with a+b+c >= d.
bool is_root(const DescartesQuadruple& q);

// Theorem 4.4 property: the T_I swap run ends at a root quadruple (up to
// reordering) before the first inversion (vacuous for pure-swap-free traces).
bool swap_run_root_check(const DescartesQuadruple& q);

// ---- T_D (height system, nonnegative Lorentz quadruples) ----
struct DLetter {
    int index = 1;  // 1..7
    friend bool operator==(DLetter a, DLetter b) { return a.index == b.index; }
};
const IntMatrix4& dletter_matrix(DLetter l);

bool is_height_origin(const Quad& q);  // g*(1,1,0,0)/(1,0,1,0)/(1,0,0,1)

// One step: next = (A,|B|,|C|,|D|) with A=2a-b-c-d, B=a-c-d, C=a-b-d, D=a-b-c;
// the letter is the least-index D_i with abs(D_i * next) = current.
std::pair<DLetter, Quad> t_d_step(const Quad& q);

struct HeightTrace {
    std::vector<DLetter> word;
    std::vector<Quad> states;
    Quad terminal;
    Integer gcd;
    std::string to_json() const;
};
HeightTrace t_d_reduce(const Quad& q);

// Neighbours in the graph L_+: componentwise abs of the eight generator
// images. Deduplicated.
std::vector<Quad> height_neighbors(const Quad& q);

// Normalized form (nonnegative entries sorted descending) and height order.
Quad height_normalize(const Quad& q);
bool height_less(const Quad& a, const Quad& b);  // lexicographic on normalized

// Breadth-first graph distance to the origin set, exploring vertices with
// first entry <= cap. Returns nullopt when the search is exhausted without
// reaching q (radius/cap inconclusive).
std::optional<int> bfs_oracle(const Quad& q, long long cap);

// Diagnostic for the sign-table letter selection: fraction of steps (over
// all primitive nonneg quadruples with a <= max_a) where the table's letter
// differs from the operational one.
struct TableDiagnostic {
    long long steps = 0;
    long long mismatches = 0;
    long long table_undefined = 0;
};
TableDiagnostic t_d_table_agreement(long long max_a);

// All primitive Lorentz quadruples with 0 < a <= max_a, optionally restricted
// to nonnegative entries. gcd(b,c,d) = 1 variant used by the experiments.
std::vector<Quad> enumerate_lorentz(long long max_a, bool nonneg_only);

}  // namespace sacf
