#include <doctest.h>

#include <set>

#include "sacf/dynamics.hpp"
#include "sacf/quadruples.hpp"
#include "test_util.hpp"

using namespace sacf;
using testutil::Rng;

namespace {

Quad q4(long long a, long long b, long long c, long long d) {
    return {Integer(a), Integer(b), Integer(c), Integer(d)};
}

// Random primitive Lorentz quadruple via the quaternion parametrization,
// with randomized signs and a permutation of (b, c, d).
Quad random_lorentz(Rng& rng, long long bound) {
    while (true) {
        const long long m = rng.range(0, 60), n = rng.range(0, 60), p = rng.range(0, 60),
                        q = rng.range(0, 60);
        long long a = m * m + n * n + p * p + q * q;
        if (a == 0 || a > bound) continue;
        long long b = m * m + n * n - p * p - q * q, c = 2 * (n * p + m * q),
                  d = 2 * (n * q - m * p);
        if (b == 0 && c == 0 && d == 0) continue;
        Quad v = q4(a, b, c, d);
        const Integer g = quad_gcd(v);
        for (Integer& x : v) x /= g;
        std::array<int, 3> perm{1, 2, 3};
        for (int i = 2; i >= 1; --i) std::swap(perm[i], perm[(int)rng.range(0, i)]);
        Quad w{v[0], v[perm[0]], v[perm[1]], v[perm[2]]};
        for (int i = 1; i < 4; ++i)
            if (rng.next() & 1) w[i] = -w[i];
        return w;
    }
}

}  // namespace

TEST_CASE("t_l_step follows the figure-2 red path") {
    LorentzQuadruple q{q4(5, -3, 0, -4)};
    auto [l1, q1] = t_l_step(q);
    CHECK(letter_token(l1, TokenAlphabet::L) == "L1P");
    CHECK(q1.v == q4(3, -1, 2, -2));
    auto [l2, q2] = t_l_step(q1);
    CHECK(letter_token(l2, TokenAlphabet::L) == "L3");
    CHECK(q2.v == q4(1, 1, 0, 0));
    CHECK(q2.is_terminal());
    CHECK_THROWS_AS(t_l_step(q2), std::domain_error);
}

TEST_CASE("t_l_reduce reconstruction and normal form") {
    const ReductionTrace tr = t_l_reduce(LorentzQuadruple{q4(5, -3, 0, -4)});
    CHECK(format_word(tr.word, TokenAlphabet::L) == "L1P L3");
    CHECK(tr.terminal == q4(1, 1, 0, 0));
    CHECK(word_matrix_lorentz(tr.word).apply(tr.terminal) == q4(5, -3, 0, -4));
    CHECK(is_swap_normal(tr.word));

    CHECK(t_l_reduce(LorentzQuadruple{q4(1, 0, 0, -1)}).word.empty());
    const ReductionTrace tr2 = t_l_reduce(LorentzQuadruple{q4(3, -1, -2, -2)});
    CHECK(format_word(tr2.word, TokenAlphabet::L) == "L1P");
    CHECK(tr2.terminal == q4(1, 1, 0, 0));
}

TEST_CASE("random lorentz reductions: reconstruction, no revisits") {
    Rng rng(51);
    for (int t = 0; t < 300; ++t) {
        const Quad q = random_lorentz(rng, 5000);
        const ReductionTrace tr = t_l_reduce(LorentzQuadruple{q});
        Quad scaled = tr.terminal;
        for (Integer& x : scaled) x *= tr.gcd;
        CHECK(word_matrix_lorentz(tr.word).apply(scaled) == q);
        CHECK(is_swap_normal(tr.word));
        std::set<Quad> seen(tr.states.begin(), tr.states.end());
        CHECK(seen.size() == tr.states.size());
        // a strictly decreases
        for (std::size_t k = 0; k + 1 < tr.states.size(); ++k)
            CHECK(tr.states[k + 1][0] < tr.states[k][0]);
    }
}

TEST_CASE("sphere conjugacy pi ∘ T_L = T_sph ∘ pi") {
    // spec example: pi(5,-3,0,-4) = (-3/5, 0, -4/5) -> letter L1P
    const LorentzQuadruple q{q4(5, -3, 0, -4)};
    auto [l, s] = t_sph_step(sphere_project(q));
    CHECK(letter_token(l, TokenAlphabet::L) == "L1P");
    CHECK(s == sphere_project(t_l_step(q).second));

    Rng rng(52);
    for (int t = 0; t < 300; ++t) {
        const Quad v = random_lorentz(rng, 5000);
        const LorentzQuadruple lq{v};
        if (lq.is_terminal()) continue;
        auto [la, qa] = t_l_step(lq);
        auto [lb, sb] = t_sph_step(sphere_project(lq));
        CHECK(la == lb);
        CHECK(sb == sphere_project(qa));
    }
    CHECK_THROWS_AS(t_sph_step(SpherePoint{1, 0, 0}), std::domain_error);
}

TEST_CASE("phi map fixed-point correspondence") {
    CHECK(phi_map(LorentzQuadruple{q4(1, 1, 0, 0)}) ==
          GaussianProjectivePoint{GaussianInteger{1, 1}, GaussianInteger{2, 0}});
    CHECK(phi_map(LorentzQuadruple{q4(1, 0, 1, 0)}) ==
          GaussianProjectivePoint{GaussianInteger{1, 1}, GaussianInteger{1, 0}});
    CHECK(phi_map(LorentzQuadruple{q4(1, 0, 0, 1)}) ==
          GaussianProjectivePoint{GaussianInteger{0, 1}, GaussianInteger{1, 0}});
    CHECK(phi_map(LorentzQuadruple{q4(5, -3, 0, -4)}) ==
          GaussianProjectivePoint{GaussianInteger{3, -1}, GaussianInteger{2, 0}});
}

TEST_CASE("intertwining T_B ∘ phi = phi ∘ T_L, letter for letter") {
    Rng rng(53);
    for (int t = 0; t < 300; ++t) {
        const Quad v = random_lorentz(rng, 3000);
        LorentzQuadruple lq{v};
        GaussianProjectivePoint z = phi_map(lq);
        while (!lq.is_terminal()) {
            auto [ll, lnext] = t_l_step(lq);
            auto [lz, znext] = step(Side::B, z);
            CHECK(ll == lz);
            CHECK(znext == phi_map(lnext));
            lq = lnext;
            z = znext;
        }
        CHECK(classify(Side::B, z).fixed);
    }
}

TEST_CASE("J change of variables") {
    CHECK(lorentz_to_descartes(LorentzQuadruple{q4(1, 1, 0, 0)}).v == q4(1, 1, 0, 0));
    const DescartesQuadruple dq = lorentz_to_descartes(LorentzQuadruple{q4(3, -1, 2, -2)});
    CHECK(descartes_form(dq.v) == 0);
    CHECK(dq.v == q4(1, 1, 4, 0));
    CHECK(descartes_to_lorentz(dq).v == q4(3, -1, 2, -2));
    Rng rng(54);
    for (int t = 0; t < 500; ++t) {
        const Quad v = random_lorentz(rng, 10000);
        const LorentzQuadruple lq{v};
        CHECK(descartes_to_lorentz(lorentz_to_descartes(lq)).v == v);
    }
}

TEST_CASE("T_S and T_I spec examples") {
    auto [l, r] = t_s_step(DescartesQuadruple{q4(-1, 2, 2, 3)});
    CHECK(letter_token(l) == "S1P");
    CHECK(r.v == q4(1, 0, 0, 1));

    DescartesQuadruple q{q4(2, 3, 6, 23)};
    const ReductionTrace tr = t_i_reduce(q);
    CHECK(format_word(tr.word) == "S4 S3 S4P");
    CHECK(tr.terminal == q4(0, 1, 0, 1));
    CHECK(word_matrix_descartes(tr.word).apply(tr.terminal) == q4(2, 3, 6, 23));
    CHECK(is_invert_normal(tr.word));
    CHECK_THROWS_AS(t_s_step(DescartesQuadruple{q4(1, 0, 1, 0)}), std::domain_error);
}

TEST_CASE("J-conjugacy: descartes reduction of Jx matches lorentz reduction of x") {
    Rng rng(55);
    for (int t = 0; t < 300; ++t) {
        const Quad v = random_lorentz(rng, 3000);
        const LorentzQuadruple lq{v};
        const ReductionTrace trl = t_l_reduce(lq);
        const ReductionTrace trs = t_s_reduce(lorentz_to_descartes(lq));
        CHECK(trl.word == trs.word);
    }
}

TEST_CASE("root quadruples") {
    CHECK(is_root(DescartesQuadruple{q4(-1, 2, 2, 3)}));
    CHECK_FALSE(is_root(DescartesQuadruple{q4(2, 3, 6, -1)}));
    CHECK(is_root(DescartesQuadruple{q4(0, 0, 1, 1)}));
}

TEST_CASE("T_I reaches the root via swaps (theorem 4.4)") {
    CHECK(swap_run_root_check(DescartesQuadruple{q4(2, 3, 6, 23)}));
    CHECK(swap_run_root_check(DescartesQuadruple{q4(-1, 2, 2, 3)}));
    Rng rng(56);
    for (int t = 0; t < 500; ++t) {
        const Quad v = random_lorentz(rng, 5000);
        const DescartesQuadruple dq = lorentz_to_descartes(LorentzQuadruple{v});
        if (dq.is_simplest()) continue;
        CHECK(swap_run_root_check(dq));
    }
}

TEST_CASE("fliptoroot and roottoroot lemmas") {
    Rng rng(57);
    int done = 0;
    for (int t = 0; t < 3000 && done < 1000; ++t) {
        const Quad v = random_lorentz(rng, 5000);
        const DescartesQuadruple dq = lorentz_to_descartes(LorentzQuadruple{v});
        // pick i with non-maximal entry
        int i = -1;
        for (int k = 0; k < 4; ++k) {
            bool maximal = true;
            for (int j = 0; j < 4; ++j)
                if (dq.v[j] > dq.v[k]) maximal = false;
            if (!maximal) {
                i = k;
                break;
            }
        }
        if (i < 0) continue;
        ++done;
        const Letter si = Letter::swap(i + 1), sip = Letter::inversion(i + 1);
        const Quad flipped =
            letter_to_descartes(sip).apply(letter_to_descartes(si).apply(dq.v));
        CHECK(is_root(DescartesQuadruple{flipped}));
    }
    // roottoroot: S_i^perp of a root with positive i-th entry is a root
    for (int t = 0; t < 2000; ++t) {
        const Quad v = random_lorentz(rng, 5000);
        const DescartesQuadruple dq = lorentz_to_descartes(LorentzQuadruple{v});
        if (!is_root(dq)) continue;
        for (int i = 0; i < 4; ++i) {
            if (dq.v[i] <= 0) continue;
            const Quad img = letter_to_descartes(Letter::inversion(i + 1)).apply(dq.v);
            CHECK(is_root(DescartesQuadruple{img}));
        }
    }
}

TEST_CASE("T_D spec examples") {
    auto [l1, n1] = t_d_step(q4(9, 7, 4, 4));
    CHECK(l1.index == 5);
    CHECK(n1 == q4(3, 1, 2, 2));
    auto [l2, n2] = t_d_step(q4(3, 1, 2, 2));
    CHECK(l2.index == 1);
    CHECK(n2 == q4(1, 1, 0, 0));
    CHECK_THROWS_AS(t_d_step(q4(1, 0, 1, 0)), std::domain_error);

    const HeightTrace tr = t_d_reduce(q4(9, 7, 4, 4));
    CHECK(tr.word.size() == 2);
    CHECK(tr.terminal == q4(1, 1, 0, 0));
    // normalized reconstruction: abs(D_i * state_{k+1}) = state_k
    for (std::size_t k = 0; k < tr.word.size(); ++k) {
        Quad img = dletter_matrix(tr.word[k]).apply(tr.states[k + 1]);
        for (Integer& x : img) x = abs_int(x);
        CHECK(img == tr.states[k]);
    }
}

TEST_CASE("height graph: BFS distance equals T_D path length (small sweep)") {
    for (const Quad& q : enumerate_lorentz(30, true)) {
        const HeightTrace tr = t_d_reduce(q);
        const auto dist = bfs_oracle(q, 600);
        REQUIRE(dist.has_value());
        CHECK((int)tr.word.size() == *dist);
        // every step moves to the minimum-height neighbour
        for (std::size_t k = 0; k + 1 < tr.states.size(); ++k) {
            const Quad& next = tr.states[k + 1];
            for (const Quad& n : height_neighbors(tr.states[k]))
                CHECK_FALSE(height_less(n, next));
        }
    }
}

TEST_CASE("height neighbor relation is symmetric") {
    Rng rng(58);
    for (const Quad& q : enumerate_lorentz(25, true))
        for (const Quad& n : height_neighbors(q)) {
            const auto back = height_neighbors(n);
            CHECK(std::find(back.begin(), back.end(), q) != back.end());
        }
    (void)rng;
}

TEST_CASE("T_D table diagnostic records the sign-table mismatch") {
    const TableDiagnostic diag = t_d_table_agreement(40);
    CHECK(diag.steps > 0);
    // the paper's sign table does not match the reconstructing letter
    CHECK(diag.mismatches + diag.table_undefined > 0);
}
