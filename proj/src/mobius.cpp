#include "sacf/mobius.hpp"

#include <cmath>

namespace sacf {

ExtendedMobius ExtendedMobius::inverse() const {
    // adj(m) inverts projectively; for an anti-Mobius (m, conj) the inverse is
    // (conj(adj(m)), conj) since m∘σ ∘ σ∘adj(m)^σ = id.
    ExtendedMobius inv{d, -b, -c, a, conj_first};
    if (conj_first) {
        inv.a = inv.a.conj();
        inv.b = inv.b.conj();
        inv.c = inv.c.conj();
        inv.d = inv.d.conj();
    }
    return inv;
}

GaussianProjectivePoint ExtendedMobius::operator()(const GaussianProjectivePoint& z) const {
    GaussianInteger p = z.p, q = z.q;
    if (conj_first) {
        p = p.conj();
        q = q.conj();
    }
    return GaussianProjectivePoint{a * p + b * q, c * p + d * q};
}

std::complex<double> ExtendedMobius::operator()(std::complex<double> z) const {
    if (conj_first) z = std::conj(z);
    const std::complex<double> ca = a.to_complex(), cb = b.to_complex(), cc = c.to_complex(),
                               cd = d.to_complex();
    if (std::isinf(z.real()) || std::isinf(z.imag())) {
        if (cc == std::complex<double>(0.0, 0.0)) return {INFINITY, 0.0};
        return ca / cc;
    }
    const std::complex<double> den = cc * z + cd;
    if (den == std::complex<double>(0.0, 0.0)) return {INFINITY, 0.0};
    return (ca * z + cb) / den;
}

ExtendedMobius operator*(const ExtendedMobius& t1, const ExtendedMobius& t2) {
    GaussianInteger a2 = t2.a, b2 = t2.b, c2 = t2.c, d2 = t2.d;
    if (t1.conj_first) {
        a2 = a2.conj();
        b2 = b2.conj();
        c2 = c2.conj();
        d2 = d2.conj();
    }
    return {t1.a * a2 + t1.b * c2, t1.a * b2 + t1.b * d2, t1.c * a2 + t1.d * c2,
            t1.c * b2 + t1.d * d2, t1.conj_first != t2.conj_first};
}

bool ExtendedMobius::projectively_equal(const ExtendedMobius& o) const {
    if (conj_first != o.conj_first) return false;
    // all 2x2 minors of the stacked 2x4 coefficient matrix vanish
    return a * o.b == b * o.a && a * o.c == c * o.a && a * o.d == d * o.a && b * o.c == c * o.b &&
           b * o.d == d * o.b && c * o.d == d * o.c;
}

double mobius_deriv_abs(const ExtendedMobius& t, std::complex<double> z) {
    if (t.conj_first) z = std::conj(z);
    const double det = std::abs(t.det().to_complex());
    const std::complex<double> den = t.c.to_complex() * z + t.d.to_complex();
    return det / std::norm(den);
}

}  // namespace sacf
