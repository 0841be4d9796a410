#include "sacf/group.hpp"

#include <stdexcept>

namespace sacf {

IntMatrix4 IntMatrix4::identity() {
    IntMatrix4 r;
    for (int i = 0; i < 4; ++i) r.m[i][i] = 1;
    return r;
}

IntMatrix4 IntMatrix4::from(const int (&rows)[4][4]) {
    IntMatrix4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.m[i][j] = rows[i][j];
    return r;
}

IntMatrix4 IntMatrix4::transpose() const {
    IntMatrix4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.m[i][j] = m[j][i];
    return r;
}

IntMatrix4 operator*(const IntMatrix4& a, const IntMatrix4& b) {
    IntMatrix4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Integer s = 0;
            for (int k = 0; k < 4; ++k) s += a.m[i][k] * b.m[k][j];
            r.m[i][j] = std::move(s);
        }
    return r;
}

std::array<Integer, 4> IntMatrix4::apply(const std::array<Integer, 4>& v) const {
    std::array<Integer, 4> r;
    for (int i = 0; i < 4; ++i) {
        Integer s = 0;
        for (int k = 0; k < 4; ++k) s += m[i][k] * v[k];
        r[i] = std::move(s);
    }
    return r;
}

namespace {

// Generator tables. Index 0..3 = swaps, 4..7 = inversions (Letter::code).

const std::array<IntMatrix4, 8>& lorentz_table() {
    static const std::array<IntMatrix4, 8> t = {
        IntMatrix4::from({{2, -1, -1, -1}, {1, 0, -1, -1}, {1, -1, 0, -1}, {1, -1, -1, 0}}),   // L1
        IntMatrix4::from({{2, -1, 1, 1}, {1, 0, 1, 1}, {-1, 1, 0, -1}, {-1, 1, -1, 0}}),       // L2
        IntMatrix4::from({{2, 1, -1, 1}, {-1, 0, 1, -1}, {1, 1, 0, 1}, {-1, -1, 1, 0}}),       // L3
        IntMatrix4::from({{2, 1, 1, -1}, {-1, 0, -1, 1}, {-1, -1, 0, 1}, {1, 1, 1, 0}}),       // L4
        IntMatrix4::from({{2, 1, 1, 1}, {-1, 0, -1, -1}, {-1, -1, 0, -1}, {-1, -1, -1, 0}}),   // L1P
        IntMatrix4::from({{2, 1, -1, -1}, {-1, 0, 1, 1}, {1, 1, 0, -1}, {1, 1, -1, 0}}),       // L2P
        IntMatrix4::from({{2, -1, 1, -1}, {1, 0, 1, -1}, {-1, 1, 0, 1}, {1, -1, 1, 0}}),       // L3P
        IntMatrix4::from({{2, -1, -1, 1}, {1, 0, -1, 1}, {1, -1, 0, 1}, {-1, 1, 1, 0}}),       // L4P
    };
    return t;
}

const std::array<IntMatrix4, 8>& descartes_table() {
    static const std::array<IntMatrix4, 8> t = {
        IntMatrix4::from({{-1, 2, 2, 2}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}),   // S1
        IntMatrix4::from({{1, 0, 0, 0}, {2, -1, 2, 2}, {0, 0, 1, 0}, {0, 0, 0, 1}}),   // S2
        IntMatrix4::from({{1, 0, 0, 0}, {0, 1, 0, 0}, {2, 2, -1, 2}, {0, 0, 0, 1}}),   // S3
        IntMatrix4::from({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {2, 2, 2, -1}}),   // S4
        IntMatrix4::from({{-1, 0, 0, 0}, {2, 1, 0, 0}, {2, 0, 1, 0}, {2, 0, 0, 1}}),   // S1P
        IntMatrix4::from({{1, 2, 0, 0}, {0, -1, 0, 0}, {0, 2, 1, 0}, {0, 2, 0, 1}}),   // S2P
        IntMatrix4::from({{1, 0, 2, 0}, {0, 1, 2, 0}, {0, 0, -1, 0}, {0, 0, 2, 1}}),   // S3P
        IntMatrix4::from({{1, 0, 0, 2}, {0, 1, 0, 2}, {0, 0, 1, 2}, {0, 0, 0, -1}}),   // S4P
    };
    return t;
}

ExtendedMobius make_mobius(int ar, int ai, int br, int bi, int cr, int ci, int dr, int di) {
    return {GaussianInteger{ar, ai}, GaussianInteger{br, bi}, GaussianInteger{cr, ci},
            GaussianInteger{dr, di}, true};
}

const std::array<ExtendedMobius, 8>& mobius_table() {
    static const std::array<ExtendedMobius, 8> t = {
        make_mobius(1, 2, -2, 0, 2, 0, -1, 2),   // s1 = ((1+2i)zb - 2)/(2zb - 1 + 2i)
        make_mobius(1, 0, 0, 0, 2, 0, -1, 0),    // s2 = zb/(2zb - 1)
        make_mobius(-1, 0, 2, 0, 0, 0, 1, 0),    // s3 = -zb + 2
        make_mobius(-1, 0, 0, 0, 0, 0, 1, 0),    // s4 = -zb
        make_mobius(1, 0, 0, 0, 0, 0, 1, 0),     // s1P = zb
        make_mobius(1, 0, 0, 2, 0, 0, 1, 0),     // s2P = zb + 2i
        make_mobius(1, 0, 0, 0, 0, -2, 1, 0),    // s3P = zb/(-2i zb + 1)
        make_mobius(1, -2, 0, 2, 0, -2, 1, 2),   // s4P = ((1-2i)zb + 2i)/(-2i zb + 1 + 2i)
    };
    return t;
}

}  // namespace

const IntMatrix4& letter_to_lorentz(Letter l) { return lorentz_table()[l.code]; }
const IntMatrix4& letter_to_descartes(Letter l) { return descartes_table()[l.code]; }
const ExtendedMobius& letter_to_mobius(Letter l) { return mobius_table()[l.code]; }

const IntMatrix4& gram_lorentz() {
    static const IntMatrix4 g =
        IntMatrix4::from({{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}});
    return g;
}

const IntMatrix4& gram_descartes() {
    static const IntMatrix4 g =
        IntMatrix4::from({{-1, 1, 1, 1}, {1, -1, 1, 1}, {1, 1, -1, 1}, {1, 1, 1, -1}});
    return g;
}

const IntMatrix4& two_duality_descartes() {
    static const IntMatrix4 d =
        IntMatrix4::from({{-1, 1, 1, 1}, {1, -1, 1, 1}, {1, 1, -1, 1}, {1, 1, 1, -1}});
    return d;
}

const ExtendedMobius& duality_mobius() {
    // d = (zb - 1 + i)/((1-i)zb + i), an involution
    static const ExtendedMobius d = make_mobius(1, 0, -1, 1, 1, -1, 0, 1);
    return d;
}

const IntMatrix4& two_j() {
    static const IntMatrix4 j =
        IntMatrix4::from({{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}});
    return j;
}

IntMatrix4 j_conjugate(const IntMatrix4& m) {
    IntMatrix4 r = two_j() * m * two_j();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (r.m[i][j] % 4 != 0) throw std::runtime_error("J*m*J not integral");
            r.m[i][j] /= 4;
        }
    return r;
}

namespace {

IntMatrix4 word_matrix(const Word& w, const IntMatrix4& (*table)(Letter)) {
    IntMatrix4 p = IntMatrix4::identity();
    for (Letter l : w) p = p * table(l);
    return p;
}

}  // namespace

IntMatrix4 word_matrix_lorentz(const Word& w) { return word_matrix(w, &letter_to_lorentz); }
IntMatrix4 word_matrix_descartes(const Word& w) { return word_matrix(w, &letter_to_descartes); }

ExtendedMobius word_mobius(const Word& w) {
    ExtendedMobius p;
    for (Letter l : w) p = p * letter_to_mobius(l);
    return p;
}

Integer lorentz_form(const std::array<Integer, 4>& x) {
    return x[0] * x[0] - x[1] * x[1] - x[2] * x[2] - x[3] * x[3];
}

Integer descartes_form(const std::array<Integer, 4>& y) {
    const Integer s = y[0] + y[1] + y[2] + y[3];
    return s * s - 2 * (y[0] * y[0] + y[1] * y[1] + y[2] * y[2] + y[3] * y[3]);
}

}  // namespace sacf
