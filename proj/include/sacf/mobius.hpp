#pragma once

#include <complex>

#include "sacf/gaussian.hpp"

namespace sacf {

// Element of PGL_2(Z[i]) ⋊ <c>: z -> (a·σz + b)/(c·σz + d) with σ = complex
// conjugation iff conj_first is set. Composition is function composition.
struct ExtendedMobius {
    GaussianInteger a, b, c, d;
    bool conj_first = false;

    ExtendedMobius() : a(GI_ONE), b(GI_ZERO), c(GI_ZERO), d(GI_ONE) {}
    ExtendedMobius(GaussianInteger a_, GaussianInteger b_, GaussianInteger c_, GaussianInteger d_,
                   bool conj = false)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)), conj_first(conj) {}

    GaussianInteger det() const { return a * d - b * c; }

    ExtendedMobius inverse() const;

    GaussianProjectivePoint operator()(const GaussianProjectivePoint& z) const;
    std::complex<double> operator()(std::complex<double> z) const;

    // (t1 * t2)(z) = t1(t2(z))
    friend ExtendedMobius operator*(const ExtendedMobius& t1, const ExtendedMobius& t2);

    // Equality up to a nonzero Gaussian scalar (same conjugation flag).
    bool projectively_equal(const ExtendedMobius& o) const;
};

inline const ExtendedMobius MOBIUS_IDENTITY{};

// |m'(z)| for the underlying (anti-)holomorphic map.
double mobius_deriv_abs(const ExtendedMobius& t, std::complex<double> z);

}  // namespace sacf
