#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sacf {

// One of the eight Super-Apollonian generators: four swaps S1..S4 and four
// inversions S1P..S4P (the perp family).
struct Letter {
    std::uint8_t code = 0;  // 0..3 swaps, 4..7 inversions

    Letter() = default;
    explicit Letter(int c) : code(static_cast<std::uint8_t>(c)) {}
    static Letter swap(int index) { return Letter(index - 1); }
    static Letter inversion(int index) { return Letter(index + 3); }

    bool is_inversion() const { return code >= 4; }
    bool is_swap() const { return code < 4; }
    int index() const { return code % 4 + 1; }
    Letter perp() const { return Letter(code ^ 4); }

    friend bool operator==(Letter a, Letter b) { return a.code == b.code; }
    friend bool operator!=(Letter a, Letter b) { return a.code != b.code; }
};

// Word in the generators, stored in Mobius order: letters[0] is the first
// letter emitted by the dynamics and the outermost map in reconstruction,
// z = m1(m2(...mn(b))).
using Word = std::vector<Letter>;

enum class NormalForm { Swap, Invert };
enum class TokenAlphabet { S, L };

std::string letter_token(Letter l, TokenAlphabet alphabet = TokenAlphabet::S);
Letter parse_letter(const std::string& token);

// Whitespace-separated tokens, e.g. "S3P S2 S2P S3P S1".
std::string format_word(const Word& w, TokenAlphabet alphabet = TokenAlphabet::S,
                        bool matrix_order = false);
Word parse_word(const std::string& text);

// Mobius-order normal form predicates: no m_i == m_{i+1}; swap normal
// additionally forbids m_i = s_j followed by m_{i+1} = s_k^perp with j != k,
// invert normal the dual condition.
bool is_swap_normal(const Word& w);
bool is_invert_normal(const Word& w);
bool is_normal(const Word& w, NormalForm target);

// Rewrites w into the requested normal form using the group relations only
// (involutions and s_j s_k^perp = s_k^perp s_j for j != k). Never longer than
// the input and represents the same group element.
Word normalize_word(const Word& w, NormalForm target);

// m^perp: reverse order and perp every letter. An involution on swap normal
// form words (and on invert normal form words).
Word perp_word(const Word& w);

// m^{-1}: reverse order (letters are involutions).
Word invert_word(const Word& w);

// All words of given length that satisfy the adjacency rules of the requested
// normal form (used for partition counts and word enumeration).
std::vector<Word> enumerate_normal_words(int length, NormalForm target);

// Number of such words; the swap-normal count drives the 9*5^(n-1)-1 region
// count of the n-th partition.
long long count_normal_words(int length, NormalForm target);

}  // namespace sacf
