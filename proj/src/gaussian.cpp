#include "sacf/gaussian.hpp"

#include <array>
#include <ostream>
#include <sstream>

namespace sacf {

bool GaussianInteger::is_unit() const { return norm() == 1; }

std::string GaussianInteger::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussianInteger& z) {
    if (z.im == 0) return os << z.re;
    if (z.re == 0) {
        if (z.im == 1) return os << "i";
        if (z.im == -1) return os << "-i";
        return os << z.im << "i";
    }
    os << z.re;
    if (z.im > 0) os << "+";
    if (z.im == 1)
        os << "i";
    else if (z.im == -1)
        os << "-i";
    else
        os << z.im << "i";
    return os;
}

namespace {

// Round t = n/d to the nearest integer (any tie rule keeps |frac| <= 1/2).
Integer round_quotient(const Integer& n, const Integer& d) {
    Integer q = n / d, r = n - q * d;  // truncated division
    if (2 * abs_int(r) > abs_int(d)) q += (sign(r) == sign(d)) ? 1 : -1;
    return q;
}

}  // namespace

GaussianInteger gi_divmod(const GaussianInteger& a, const GaussianInteger& b, GaussianInteger& rem) {
    if (b.is_zero()) throw std::domain_error("gaussian division by zero");
    const GaussianInteger num = a * b.conj();
    const Integer n = b.norm();
    GaussianInteger q{round_quotient(num.re, n), round_quotient(num.im, n)};
    rem = a - q * b;
    return q;
}

bool gi_divides(const GaussianInteger& b, const GaussianInteger& a) {
    if (b.is_zero()) return a.is_zero();
    const GaussianInteger num = a * b.conj();
    const Integer n = b.norm();
    return num.re % n == 0 && num.im % n == 0;
}

GaussianInteger gi_divexact(const GaussianInteger& a, const GaussianInteger& b) {
    if (b.is_zero()) throw std::domain_error("gaussian division by zero");
    const GaussianInteger num = a * b.conj();
    const Integer n = b.norm();
    if (num.re % n != 0 || num.im % n != 0) throw std::domain_error("gaussian division not exact");
    return {num.re / n, num.im / n};
}

GaussianInteger gi_canonical_unit(const GaussianInteger& z) {
    // Unique associate in the half-open first quadrant {re > 0, im >= 0}.
    if (z.is_zero()) return GI_ONE;
    for (const GaussianInteger& u :
         {GaussianInteger{1, 0}, GaussianInteger{0, 1}, GaussianInteger{-1, 0}, GaussianInteger{0, -1}}) {
        const GaussianInteger w = u * z;
        if (w.re > 0 && w.im >= 0) return u;
    }
    throw std::logic_error("unreachable: no canonical unit");
}

GaussianInteger gi_gcd(GaussianInteger a, GaussianInteger b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) undefined");
    while (!b.is_zero()) {
        GaussianInteger r;
        gi_divmod(a, b, r);
        a = b;
        b = r;
    }
    return gi_canonical_unit(a) * a;
}

GaussianProjectivePoint::GaussianProjectivePoint(GaussianInteger pp, GaussianInteger qq)
    : p(std::move(pp)), q(std::move(qq)) {
    if (p.is_zero() && q.is_zero()) throw std::domain_error("projective point (0, 0)");
    const GaussianInteger g = gi_gcd(p, q);
    if (!g.is_unit()) {
        p = gi_divexact(p, g);
        q = gi_divexact(q, g);
    }
    const GaussianInteger u = gi_canonical_unit(q.is_zero() ? p : q);
    p = u * p;
    q = u * q;
}

std::complex<double> GaussianProjectivePoint::to_complex() const {
    if (is_infinity()) return {std::numeric_limits<double>::infinity(), 0.0};
    // p/q = p*conj(q)/norm(q), evaluated in doubles
    const GaussianInteger num = p * q.conj();
    const double n = to_double(q.norm());
    return {to_double(num.re) / n, to_double(num.im) / n};
}

std::string GaussianProjectivePoint::str() const {
    std::ostringstream os;
    os << "(" << p << ")/(" << q << ")";
    return os.str();
}

namespace {

const std::array<GaussianProjectivePoint, 6>& parity_points() {
    static const std::array<GaussianProjectivePoint, 6> pts = {
        GaussianProjectivePoint{GaussianInteger{0}, GaussianInteger{1}},          // 0
        GaussianProjectivePoint{GaussianInteger{1}, GaussianInteger{1}},          // 1
        GaussianProjectivePoint{GaussianInteger{1}, GaussianInteger{0}},          // inf
        GaussianProjectivePoint{GaussianInteger{0, 1}, GaussianInteger{1}},       // i
        GaussianProjectivePoint{GaussianInteger{1, 1}, GaussianInteger{1}},       // 1+i
        GaussianProjectivePoint{GaussianInteger{1}, GaussianInteger{1, -1}},      // 1/(1-i)
    };
    return pts;
}

bool even(const GaussianInteger& z) { return z.re % 2 == 0 && z.im % 2 == 0; }

}  // namespace

const char* parity_label(ParityClass c) {
    switch (c) {
        case ParityClass::Zero: return "0";
        case ParityClass::One: return "1";
        case ParityClass::Infinity: return "inf";
        case ParityClass::I: return "i";
        case ParityClass::OnePlusI: return "1+i";
        case ParityClass::OneOverOneMinusI: return "1/(1-i)";
    }
    return "?";
}

GaussianProjectivePoint parity_point(ParityClass c) { return parity_points()[static_cast<int>(c)]; }

ParityClass parity_class(const GaussianProjectivePoint& z) {
    int found = -1;
    for (int k = 0; k < 6; ++k) {
        const GaussianProjectivePoint& fp = parity_points()[k];
        if (even(z.p * fp.q - z.q * fp.p)) {
            if (found >= 0) throw std::logic_error("parity class not unique (input not canonical?)");
            found = k;
        }
    }
    if (found < 0) throw std::logic_error("no parity class (input not canonical?)");
    return static_cast<ParityClass>(found);
}

bool is_tangency_point(const GaussianProjectivePoint& z) {
    for (const auto& fp : parity_points())
        if (z == fp) return true;
    return false;
}

}  // namespace sacf
