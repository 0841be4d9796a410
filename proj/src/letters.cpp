#include "sacf/letters.hpp"

#include <sstream>
#include <stdexcept>

namespace sacf {

std::string letter_token(Letter l, TokenAlphabet alphabet) {
    std::string t(1, alphabet == TokenAlphabet::S ? 'S' : 'L');
    t += static_cast<char>('0' + l.index());
    if (l.is_inversion()) t += 'P';
    return t;
}

Letter parse_letter(const std::string& token) {
    const bool ok = (token.size() == 2 || (token.size() == 3 && token[2] == 'P')) &&
                    (token[0] == 'S' || token[0] == 'L') && token[1] >= '1' && token[1] <= '4';
    if (!ok) throw std::domain_error("bad letter token: " + token);
    const int index = token[1] - '0';
    return token.size() == 3 ? Letter::inversion(index) : Letter::swap(index);
}

std::string format_word(const Word& w, TokenAlphabet alphabet, bool matrix_order) {
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) out += ' ';
        out += letter_token(matrix_order ? w[w.size() - 1 - k] : w[k], alphabet);
    }
    return out;
}

Word parse_word(const std::string& text) {
    Word w;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) w.push_back(parse_letter(tok));
    return w;
}

namespace {

// Adjacency rule for Mobius-order words: may letter b directly follow a?
bool adjacent_ok(Letter a, Letter b, NormalForm target) {
    if (a == b) return false;
    if (target == NormalForm::Swap)
        return !(a.is_swap() && b.is_inversion() && a.index() != b.index());
    return !(a.is_inversion() && b.is_swap() && a.index() != b.index());
}

}  // namespace

bool is_normal(const Word& w, NormalForm target) {
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
        if (!adjacent_ok(w[k], w[k + 1], target)) return false;
    return true;
}

bool is_swap_normal(const Word& w) { return is_normal(w, NormalForm::Swap); }
bool is_invert_normal(const Word& w) { return is_normal(w, NormalForm::Invert); }

Word normalize_word(const Word& w, NormalForm target) {
    // Insert letters one at a time. Each new letter scans leftward through
    // letters it commutes with (s_j and s_k^perp commute for j != k); an equal
    // letter reachable that way cancels. Otherwise the moving kind (inversions
    // for swap normal, swaps for invert normal) lands as far left as the scan
    // allows and the other kind stays rightmost. The prefix stays normal.
    Word u;
    const bool moving_kind_inversion = (target == NormalForm::Swap);
    for (Letter x : w) {
        std::size_t pos = u.size();
        bool cancelled = false;
        while (pos > 0) {
            const Letter y = u[pos - 1];
            if (y == x) {
                u.erase(u.begin() + static_cast<std::ptrdiff_t>(pos - 1));
                cancelled = true;
                break;
            }
            const bool commutes = (y.is_inversion() != x.is_inversion()) && y.index() != x.index();
            if (!commutes) break;
            --pos;
        }
        if (cancelled) continue;
        if (x.is_inversion() != moving_kind_inversion) pos = u.size();
        u.insert(u.begin() + static_cast<std::ptrdiff_t>(pos), x);
    }
    return u;
}

Word perp_word(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->perp());
    return out;
}

Word invert_word(const Word& w) { return {w.rbegin(), w.rend()}; }

std::vector<Word> enumerate_normal_words(int length, NormalForm target) {
    std::vector<Word> out;
    if (length == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<Word> prev = enumerate_normal_words(length - 1, target);
    for (const Word& w : prev)
        for (int c = 0; c < 8; ++c) {
            const Letter l{c};
            if (w.empty() || adjacent_ok(w.back(), l, target)) {
                Word e = w;
                e.push_back(l);
                out.push_back(std::move(e));
            }
        }
    return out;
}

long long count_normal_words(int length, NormalForm target) {
    if (length == 0) return 1;
    // transfer recurrence on (#words ending in swap, #words ending in inversion)
    long long s = 4, v = 4;
    for (int n = 2; n <= length; ++n) {
        long long ns, nv;
        if (target == NormalForm::Swap) {
            ns = 3 * s + 4 * v;
            nv = 1 * s + 3 * v;
        } else {
            ns = 3 * s + 1 * v;
            nv = 4 * s + 3 * v;
        }
        s = ns;
        v = nv;
    }
    return s + v;
}

}  // namespace sacf
