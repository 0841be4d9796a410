#pragma once

#include <complex>
#include <iosfwd>
#include <stdexcept>

#include "sacf/integer.hpp"

namespace sacf {

// Element of Z[i]. Immutable value type; all operations are exact.
struct GaussianInteger {
    Integer re, im;

    GaussianInteger() : re(0), im(0) {}
    GaussianInteger(Integer r) : re(std::move(r)), im(0) {}
    GaussianInteger(Integer r, Integer i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_unit() const;  // one of 1, -1, i, -i

    GaussianInteger conj() const { return {re, -im}; }
    Integer norm() const { return re * re + im * im; }

    friend GaussianInteger operator+(const GaussianInteger& a, const GaussianInteger& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianInteger operator-(const GaussianInteger& a, const GaussianInteger& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianInteger operator-(const GaussianInteger& a) { return {-a.re, -a.im}; }
    friend GaussianInteger operator*(const GaussianInteger& a, const GaussianInteger& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussianInteger& a, const GaussianInteger& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianInteger& a, const GaussianInteger& b) { return !(a == b); }
    friend bool operator<(const GaussianInteger& a, const GaussianInteger& b) {
        return a.re != b.re ? a.re < b.re : a.im < b.im;
    }

    std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }
    std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const GaussianInteger& z);

inline const GaussianInteger GI_ZERO{0, 0};
inline const GaussianInteger GI_ONE{1, 0};
inline const GaussianInteger GI_I{0, 1};

// Nearest-integer division: a = q*b + r with norm(r) < norm(b).
GaussianInteger gi_divmod(const GaussianInteger& a, const GaussianInteger& b, GaussianInteger& rem);

// True iff b divides a exactly.
bool gi_divides(const GaussianInteger& b, const GaussianInteger& a);

// Exact quotient; throws if not divisible.
GaussianInteger gi_divexact(const GaussianInteger& a, const GaussianInteger& b);

// Unit u such that u*z lies in the half-open first quadrant
// {re > 0, im >= 0}. Identity for z = 0.
GaussianInteger gi_canonical_unit(const GaussianInteger& z);

// Euclidean gcd, unit-normalized. Throws std::domain_error on (0,0).
GaussianInteger gi_gcd(GaussianInteger a, GaussianInteger b);

// Point of P^1(Q(i)) as a pair (p, q) != (0, 0) of Gaussian integers.
// Canonical form: gcd(p, q) a unit and q (or p when q = 0) unit-normalized.
struct GaussianProjectivePoint {
    GaussianInteger p, q;

    GaussianProjectivePoint() : p(GI_ZERO), q(GI_ONE) {}
    GaussianProjectivePoint(GaussianInteger pp, GaussianInteger qq);

    bool is_infinity() const { return q.is_zero(); }
    std::complex<double> to_complex() const;

    friend bool operator==(const GaussianProjectivePoint& a, const GaussianProjectivePoint& b) {
        return a.p == b.p && a.q == b.q;  // both canonical
    }
    friend bool operator!=(const GaussianProjectivePoint& a, const GaussianProjectivePoint& b) {
        return !(a == b);
    }
    friend bool operator<(const GaussianProjectivePoint& a, const GaussianProjectivePoint& b) {
        return a.p != b.p ? a.p < b.p : a.q < b.q;
    }
    std::string str() const;
};

// One of the six T_A/T_B fixed points, doubling as a parity class label.
enum class ParityClass { Zero, One, Infinity, I, OnePlusI, OneOverOneMinusI };

const char* parity_label(ParityClass c);
GaussianProjectivePoint parity_point(ParityClass c);

// The class of a canonical point under p*s = q*r (mod 2). Exactly one of the
// six fixed points matches.
ParityClass parity_class(const GaussianProjectivePoint& z);

// Fixed-point test (canonical representatives).
bool is_tangency_point(const GaussianProjectivePoint& z);

}  // namespace sacf
