#include <doctest.h>

#include <map>
#include <set>

#include "sacf/group.hpp"
#include "test_util.hpp"

using namespace sacf;
using testutil::Rng;

namespace {

Word random_word(Rng& rng, int len) {
    Word w;
    for (int k = 0; k < len; ++k) w.push_back(Letter{(int)rng.range(0, 7)});
    return w;
}

}  // namespace

TEST_CASE("generator involutions and Gram invariance") {
    for (int c = 0; c < 8; ++c) {
        const Letter l{c};
        const IntMatrix4 &L = letter_to_lorentz(l), &S = letter_to_descartes(l);
        CHECK(L * L == IntMatrix4::identity());
        CHECK(S * S == IntMatrix4::identity());
        CHECK(L.transpose() * gram_lorentz() * L == gram_lorentz());
        CHECK(S.transpose() * gram_descartes() * S == gram_descartes());
        const ExtendedMobius& m = letter_to_mobius(l);
        CHECK((m * m).projectively_equal(ExtendedMobius{}));
    }
}

TEST_CASE("spec first rows") {
    CHECK(letter_to_descartes(Letter::swap(1))(0, 0) == -1);
    CHECK(letter_to_descartes(Letter::swap(1))(0, 1) == 2);
    CHECK(letter_to_descartes(Letter::swap(1))(0, 2) == 2);
    CHECK(letter_to_descartes(Letter::swap(1))(0, 3) == 2);
    CHECK(letter_to_lorentz(Letter::swap(1))(0, 0) == 2);
    CHECK(letter_to_lorentz(Letter::swap(1))(0, 1) == -1);
}

TEST_CASE("commutation relations S_j S_k^perp = S_k^perp S_j for j != k") {
    for (int j = 1; j <= 4; ++j)
        for (int k = 1; k <= 4; ++k) {
            if (j == k) continue;
            CHECK(letter_to_descartes(Letter::swap(j)) * letter_to_descartes(Letter::inversion(k)) ==
                  letter_to_descartes(Letter::inversion(k)) * letter_to_descartes(Letter::swap(j)));
            CHECK(letter_to_lorentz(Letter::swap(j)) * letter_to_lorentz(Letter::inversion(k)) ==
                  letter_to_lorentz(Letter::inversion(k)) * letter_to_lorentz(Letter::swap(j)));
        }
}

TEST_CASE("J conjugation maps the Lorentz family to the Descartes family") {
    CHECK(j_conjugate(letter_to_lorentz(Letter::swap(1))) == letter_to_descartes(Letter::swap(1)));
    CHECK(j_conjugate(letter_to_lorentz(Letter::inversion(3))) ==
          letter_to_descartes(Letter::inversion(3)));
    for (int c = 0; c < 8; ++c)
        CHECK(j_conjugate(letter_to_lorentz(Letter{c})) == letter_to_descartes(Letter{c}));
    // J*J = identity (via 2J)
    IntMatrix4 jj = two_j() * two_j();
    CHECK(jj == [] {
        IntMatrix4 m = IntMatrix4::identity();
        for (int i = 0; i < 4; ++i) m(i, i) = 4;
        return m;
    }());
}

TEST_CASE("mobius duality conjugates swaps to inversions") {
    const ExtendedMobius& d = duality_mobius();
    CHECK((d * d).projectively_equal(ExtendedMobius{}));
    for (int i = 1; i <= 4; ++i) {
        const ExtendedMobius lhs = letter_to_mobius(Letter::inversion(i));
        const ExtendedMobius rhs = d * letter_to_mobius(Letter::swap(i)) * d;
        CHECK(lhs.projectively_equal(rhs));
    }
}

TEST_CASE("mobius s4P matches the paper's formula") {
    // s4P: z -> ((1-2i) zbar + 2i)/(-2i zbar + 1 + 2i)
    const ExtendedMobius& m = letter_to_mobius(Letter::inversion(4));
    CHECK(m.a == GaussianInteger{1, -2});
    CHECK(m.b == GaussianInteger{0, 2});
    CHECK(m.c == GaussianInteger{0, -2});
    CHECK(m.d == GaussianInteger{1, 2});
    CHECK(m.conj_first);
}

TEST_CASE("normal form predicates") {
    CHECK(is_swap_normal(parse_word("S1")));
    CHECK(is_invert_normal(parse_word("S1")));
    CHECK_FALSE(is_swap_normal(parse_word("S1 S2P")));
    CHECK(is_swap_normal(parse_word("S1 S1P")));
    CHECK(is_invert_normal(parse_word("S1 S2P")));
    CHECK_FALSE(is_invert_normal(parse_word("S1P S2")));
    CHECK(is_swap_normal(parse_word("S3P S2 S2P S3P S1 S1P S4 S2 S4 S1 S1P S3 S2 S3 S3P S4 S4P S2 S1 S2")));
}

TEST_CASE("normalize_word spec examples") {
    CHECK(normalize_word(parse_word("S1 S1"), NormalForm::Swap).empty());
    CHECK(format_word(normalize_word(parse_word("S1 S2P"), NormalForm::Swap)) == "S2P S1");
    CHECK(format_word(normalize_word(parse_word("S3P S3P S1"), NormalForm::Swap)) == "S1");
}

TEST_CASE("normalize_word: idempotent, same element, never longer, unique per element") {
    // exhaustive over all words of length <= 5
    std::map<IntMatrix4, Word> normal_by_element;
    std::vector<Word> level{{}};
    for (int len = 0; len <= 5; ++len) {
        for (const Word& w : level) {
            const Word n = normalize_word(w, NormalForm::Swap);
            CHECK(n.size() <= w.size());
            CHECK(is_swap_normal(n));
            CHECK(word_matrix_descartes(n) == word_matrix_descartes(w));
            CHECK(normalize_word(n, NormalForm::Swap) == n);
            const IntMatrix4 m = word_matrix_descartes(w);
            auto [it, fresh] = normal_by_element.emplace(m, n);
            if (!fresh) CHECK(it->second == n);

            const Word ni = normalize_word(w, NormalForm::Invert);
            CHECK(is_invert_normal(ni));
            CHECK(word_matrix_descartes(ni) == word_matrix_descartes(w));
        }
        if (len == 5) break;
        std::vector<Word> next;
        next.reserve(level.size() * 8);
        for (const Word& w : level)
            for (int c = 0; c < 8; ++c) {
                Word e = w;
                e.push_back(Letter{c});
                next.push_back(std::move(e));
            }
        level = std::move(next);
    }
}

TEST_CASE("perp and invert words") {
    CHECK(format_word(perp_word(parse_word("S1 S3"))) == "S3P S1P");
    CHECK(format_word(invert_word(parse_word("S1 S3"))) == "S3 S1");
    Rng rng(21);
    for (int t = 0; t < 200; ++t) {
        const Word w = random_word(rng, (int)rng.range(0, 8));
        CHECK(perp_word(perp_word(w)) == w);
        // perp is an involution on swap normal form words; reversal (group
        // inverse) exchanges swap and invert normal form
        const Word n = normalize_word(w, NormalForm::Swap);
        CHECK(is_swap_normal(perp_word(n)));
        CHECK(is_invert_normal(invert_word(n)));
        // m^perp = d m^{-1} d on the Mobius side
        const ExtendedMobius& d = duality_mobius();
        CHECK(word_mobius(perp_word(w)).projectively_equal(d * word_mobius(invert_word(w)) * d));
    }
}

TEST_CASE("matrix-order serialization flag") {
    const Word w = parse_word("S1P S3");
    CHECK(format_word(w, TokenAlphabet::S, true) == "S3 S1P");
    CHECK(format_word(w, TokenAlphabet::L) == "L1P L3");
}

TEST_CASE("swap-normal word count matches the partition region count") {
    long long expect = 8;  // 9*5^(n-1) - 1
    for (int n = 1; n <= 6; ++n) {
        CHECK(count_normal_words(n, NormalForm::Swap) == expect);
        CHECK(count_normal_words(n, NormalForm::Invert) == expect);
        if (n <= 5)
            CHECK((long long)enumerate_normal_words(n, NormalForm::Swap).size() == expect);
        expect = 5 * expect + 4;  // 9*5^n - 1 from 9*5^(n-1) - 1
    }
}

TEST_CASE("mobius realization respects composition on random points") {
    Rng rng(22);
    for (int t = 0; t < 1000; ++t) {
        const Word w = random_word(rng, (int)rng.range(0, 4));
        GaussianInteger p{rng.range(-20, 20), rng.range(-20, 20)},
            q{rng.range(-20, 20), rng.range(-20, 20)};
        if (p.is_zero() && q.is_zero()) continue;
        GaussianProjectivePoint z{p, q};
        // composite vs letterwise application (first letter outermost)
        GaussianProjectivePoint step = z;
        for (auto it = w.rbegin(); it != w.rend(); ++it) step = letter_to_mobius(*it)(step);
        CHECK(word_mobius(w)(z) == step);
    }
}
