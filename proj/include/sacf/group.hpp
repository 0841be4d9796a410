#pragma once

#include <array>

#include "sacf/integer.hpp"
#include "sacf/letters.hpp"
#include "sacf/mobius.hpp"

namespace sacf {

// Dense 4x4 matrix over the exact integers.
struct IntMatrix4 {
    std::array<std::array<Integer, 4>, 4> m{};

    static IntMatrix4 identity();
    static IntMatrix4 from(const int (&rows)[4][4]);

    Integer& operator()(int r, int c) { return m[r][c]; }
    const Integer& operator()(int r, int c) const { return m[r][c]; }

    IntMatrix4 transpose() const;
    friend IntMatrix4 operator*(const IntMatrix4& a, const IntMatrix4& b);
    friend bool operator==(const IntMatrix4& a, const IntMatrix4& b) { return a.m == b.m; }
    friend bool operator<(const IntMatrix4& a, const IntMatrix4& b) { return a.m < b.m; }

    std::array<Integer, 4> apply(const std::array<Integer, 4>& v) const;
};

// Realizations of the eight generators.
const IntMatrix4& letter_to_lorentz(Letter l);
const IntMatrix4& letter_to_descartes(Letter l);
const ExtendedMobius& letter_to_mobius(Letter l);

// Gram matrices of the Lorentz and Descartes forms.
const IntMatrix4& gram_lorentz();
const IntMatrix4& gram_descartes();

// The duality operator: 2D is integral, D = (1/2)(2D). Descartes side.
const IntMatrix4& two_duality_descartes();
// Mobius duality d (an involution with s_i^perp = d s_i d).
const ExtendedMobius& duality_mobius();

// J (as 2J, integral) conjugates the Lorentz realization to the Descartes one.
const IntMatrix4& two_j();

// J*m*J, exact. Throws std::runtime_error if the result is not integral.
IntMatrix4 j_conjugate(const IntMatrix4& m);

// Exact matrix of a word under one of the linear realizations: the product
// mat(w1)*mat(w2)*...*mat(wn) (first emitted letter leftmost), so that
// word-vector reconstruction is word_matrix(w) * terminal.
IntMatrix4 word_matrix_lorentz(const Word& w);
IntMatrix4 word_matrix_descartes(const Word& w);

// Mobius composite m1 ∘ m2 ∘ ... ∘ mn of a word (first letter outermost).
ExtendedMobius word_mobius(const Word& w);

// Quadratic forms.
Integer lorentz_form(const std::array<Integer, 4>& x);   // x0^2-x1^2-x2^2-x3^2
Integer descartes_form(const std::array<Integer, 4>& y); // (sum)^2 - 2*sum of squares

}  // namespace sacf
