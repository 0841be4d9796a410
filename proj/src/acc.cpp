#include "sacf/acc.hpp"

#include <stdexcept>

namespace sacf {

namespace {

Rational re_p_conj_q(const GaussianProjectivePoint& z) {
    const GaussianInteger w = z.p * z.q.conj();
    return Rational(w.re);
}

Rational im_p_conj_q(const GaussianProjectivePoint& z) {
    const GaussianInteger w = z.p * z.q.conj();
    return Rational(w.im);
}

}  // namespace

Rational AccCircle::h_value(const GaussianProjectivePoint& z) const {
    const Rational np(z.p.norm()), nq(z.q.norm());
    return curvature * np - 2 * (b1 * re_p_conj_q(z) + b2 * im_p_conj_q(z)) + cocurvature * nq;
}

double AccCircle::h_value(double x, double y) const {
    return to_double(curvature) * (x * x + y * y) - 2 * (to_double(b1) * x + to_double(b2) * y) +
           to_double(cocurvature);
}

Rational AccCircle::radius_abs() const {
    Rational r = 1 / curvature;
    return r < 0 ? Rational(-r) : r;
}

GaussianProjectivePoint tangency_point(const AccCircle& c1, const AccCircle& c2) {
    // (b1 + b2 : a1 + a2), cleared to Gaussian integers; two parallel lines
    // (both sums zero) touch at infinity
    const Rational nr = c1.b1 + c2.b1, ni = c1.b2 + c2.b2, d = c1.curvature + c2.curvature;
    if (nr == 0 && ni == 0 && d == 0) return GaussianProjectivePoint{GI_ONE, GI_ZERO};
    const Integer den = boost::multiprecision::lcm(
        boost::multiprecision::lcm(denominator(nr), denominator(ni)), denominator(d));
    auto scale = [&](const Rational& x) { return numerator(x) * (den / denominator(x)); };
    return GaussianProjectivePoint{GaussianInteger{scale(nr), scale(ni)},
                                   GaussianInteger{scale(d), 0}};
}

std::array<std::array<Rational, 4>, 4> AccQuadruple::as_matrix() const {
    std::array<std::array<Rational, 4>, 4> m;
    for (int i = 0; i < 4; ++i)
        m[i] = {rows[i].cocurvature, rows[i].curvature, rows[i].b1, rows[i].b2};
    return m;
}

bool AccQuadruple::in_descartes_configuration() const {
    // C^T Q C == [[0,-4,0,0],[-4,0,0,0],[0,0,2,0],[0,0,0,2]] for the form
    // matrix Q = -G_D/2 (the Gram matrix G_D of section 2.2 gives -2 times
    // the displayed right-hand side).
    const auto c = as_matrix();
    const IntMatrix4& g = gram_descartes();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Rational s = 0;
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l) s += c[k][i] * Rational(g(k, l)) * c[l][j];
            Rational want = 0;
            if ((i == 0 && j == 1) || (i == 1 && j == 0)) want = 8;
            if (i == j && i >= 2) want = -4;
            if (s != want) return false;
        }
    return true;
}

namespace {

AccQuadruple make_quadruple(const int rows[4][4]) {
    AccQuadruple q;
    for (int i = 0; i < 4; ++i)
        q.rows[i] = AccCircle{Rational(rows[i][0]), Rational(rows[i][1]), Rational(rows[i][2]),
                              Rational(rows[i][3])};
    return q;
}

}  // namespace

const AccQuadruple& base_quadruple_B() {
    static const int rb[4][4] = {{0, 0, 0, -1}, {2, 0, 0, 1}, {0, 2, 0, 1}, {2, 2, 2, 1}};
    static const AccQuadruple q = make_quadruple(rb);
    return q;
}

const AccQuadruple& base_quadruple_A() {
    static const int ra[4][4] = {{2, 2, 1, 2}, {0, 2, 1, 0}, {2, 0, 1, 0}, {0, 0, -1, 0}};
    static const AccQuadruple q = make_quadruple(ra);
    return q;
}

AccQuadruple act_on_quadruple(const Word& w, const AccQuadruple& q) {
    if (!q.in_descartes_configuration())
        throw std::runtime_error("act_on_quadruple: input not in Descartes configuration");
    // circles of the result are word_mobius(w)(circles of q): last emitted
    // letter leftmost in the matrix product
    IntMatrix4 p = IntMatrix4::identity();
    for (auto it = w.rbegin(); it != w.rend(); ++it) p = p * letter_to_descartes(*it);
    const auto c = q.as_matrix();
    AccQuadruple out;
    for (int i = 0; i < 4; ++i) {
        std::array<Rational, 4> row{};
        for (int j = 0; j < 4; ++j) {
            Rational s = 0;
            for (int k = 0; k < 4; ++k) s += Rational(p(i, k)) * c[k][j];
            row[j] = std::move(s);
        }
        out.rows[i] = AccCircle{row[0], row[1], row[2], row[3]};
    }
    if (!out.in_descartes_configuration())
        throw std::runtime_error("act_on_quadruple: output not in Descartes configuration");
    return out;
}

namespace {

// Exact interior sample points of the base regions (index 0..3 = B_1..B_4 /
// A_1..A_4 circles, 4..7 = the triangles B_1'..B_4' / A_1'..A_4').
GaussianProjectivePoint base_sample(Side side, int region) {
    auto pt = [](int pr, int pi, int qr, int qi) {
        return GaussianProjectivePoint{GaussianInteger{pr, pi}, GaussianInteger{qr, qi}};
    };
    if (side == Side::B) {
        switch (region) {
            case 0: return pt(0, -1, 1, 0);   // -i in B1
            case 1: return pt(0, 2, 1, 0);    // 2i in B2
            case 2: return pt(0, 1, 2, 0);    // i/2 in B3
            case 3: return pt(2, 1, 2, 0);    // 1+i/2 in B4
            case 4: return pt(2, 3, 4, 0);    // (2+3i)/4 in B1'
            case 5: return pt(2, 1, 4, 0);    // (2+i)/4 in B2'
            case 6: return pt(4, 1, 2, 0);    // 2+i/2 in B3'
            case 7: return pt(-2, 1, 2, 0);   // -1+i/2 in B4'
        }
    } else {
        switch (region) {
            case 0: return pt(1, 2, 2, 0);    // 1/2+i in A1
            case 1: return pt(1, 0, 2, 0);    // 1/2 in A2
            case 2: return pt(4, 1, 2, 0);    // 2+i/2 in A3
            case 3: return pt(-2, 1, 2, 0);   // -1+i/2 in A4
            case 4: return pt(1, -2, 2, 0);   // 1/2-i in A1'
            case 5: return pt(1, 4, 2, 0);    // 1/2+2i in A2'
            case 6: return pt(1, 2, 4, 0);    // (1+2i)/4 in A3'
            case 7: return pt(3, 2, 4, 0);    // (3+2i)/4 in A4'
        }
    }
    throw std::logic_error("bad region index");
}

int side_sign(const Rational& h) {
    if (h == 0) throw std::logic_error("sample point on region boundary");
    return h < 0 ? 1 : -1;
}

}  // namespace

bool FareyRegion::contains(const GaussianProjectivePoint& z) const {
    // side s = +1 records that the calibration sample had h < 0; membership
    // keeps the sample's side (strict for open circles, closed for triangles).
    if (kind == Kind::Circle) {
        const Rational h = boundary[0].h_value(z);
        return circle_side > 0 ? h < 0 : h > 0;
    }
    for (int k = 0; k < 3; ++k) {
        const Rational h = boundary[k].h_value(z);
        if (edge_side[k] > 0 ? h > 0 : h < 0) return false;  // strayed across an edge
    }
    const Rational hd = dual.h_value(z);
    return dual_side > 0 ? hd <= 0 : hd >= 0;
}

FareyRegion farey_region(Side side, const Word& w) {
    if (w.empty()) throw std::domain_error("farey_region: empty word");
    if (!is_swap_normal(w) && !is_invert_normal(w))
        throw std::domain_error("farey_region: word not in normal form");

    const Letter last = w.back();
    const Word prefix(w.begin(), w.end() - 1);
    const ExtendedMobius g = word_mobius(prefix);
    const AccQuadruple qb = act_on_quadruple(prefix, base_quadruple_B());
    const AccQuadruple qa = act_on_quadruple(prefix, base_quadruple_A());
    const int i = last.index() - 1;

    // Circular regions: B side uses B_i (inversion letters), A side uses A_i
    // (swap letters). Triangles are the duals.
    const bool circular = (side == Side::B) ? last.is_inversion() : last.is_swap();
    const AccQuadruple& primary = (side == Side::B) ? qb : qa;
    const AccQuadruple& dualq = (side == Side::B) ? qa : qb;
    const int base_region = circular ? i : 4 + i;

    FareyRegion r;
    if (circular) {
        r.kind = FareyRegion::Kind::Circle;
        r.boundary[0] = primary.rows[i];
        const GaussianProjectivePoint s = g(base_sample(side, base_region));
        r.interior = s;
        r.circle_side = side_sign(r.boundary[0].h_value(s));
        return r;
    }
    r.kind = FareyRegion::Kind::Triangle;
    const GaussianProjectivePoint s = g(base_sample(side, base_region));
    r.interior = s;
    int k = 0;
    for (int j = 0; j < 4; ++j) {
        if (j == i) continue;
        r.boundary[k] = primary.rows[j];
        r.edge_side[k] = side_sign(r.boundary[k].h_value(s));
        ++k;
    }
    r.dual = dualq.rows[i];
    r.dual_side = side_sign(r.dual.h_value(s));
    r.vertices[0] = tangency_point(r.boundary[0], r.boundary[1]);
    r.vertices[1] = tangency_point(r.boundary[0], r.boundary[2]);
    r.vertices[2] = tangency_point(r.boundary[1], r.boundary[2]);
    return r;
}

}  // namespace sacf
