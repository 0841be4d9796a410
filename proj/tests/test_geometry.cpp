#include <doctest.h>

#include "sacf/acc.hpp"
#include "sacf/dynamics.hpp"
#include "test_util.hpp"

using namespace sacf;
using testutil::Rng;

namespace {

GaussianProjectivePoint pt(long long pr, long long pi, long long qr, long long qi) {
    return {GaussianInteger{pr, pi}, GaussianInteger{qr, qi}};
}

Word random_normal_word(Rng& rng, int len, NormalForm form) {
    Word w;
    while ((int)w.size() < len) {
        Word c = w;
        c.push_back(Letter{(int)rng.range(0, 7)});
        if (is_normal(c, form)) w = std::move(c);
    }
    return w;
}

}  // namespace

TEST_CASE("base quadruples are the paper constants in Descartes configuration") {
    const AccQuadruple &rb = base_quadruple_B(), &ra = base_quadruple_A();
    CHECK(rb.rows[0] == AccCircle{0, 0, 0, -1});
    CHECK(ra.rows[3] == AccCircle{0, 0, -1, 0});
    CHECK(rb.in_descartes_configuration());
    CHECK(ra.in_descartes_configuration());
    for (int i = 0; i < 4; ++i) {
        CHECK(rb.rows[i].det() == -1);
        CHECK(ra.rows[i].det() == -1);
    }
}

TEST_CASE("tangency points of the base quadruple are the six fixed points") {
    const AccQuadruple& rb = base_quadruple_B();
    CHECK(tangency_point(rb.rows[0], rb.rows[2]) == pt(0, 0, 1, 0));    // 0
    CHECK(tangency_point(rb.rows[0], rb.rows[3]) == pt(1, 0, 1, 0));    // 1
    CHECK(tangency_point(rb.rows[0], rb.rows[1]) == pt(1, 0, 0, 0));    // inf
    CHECK(tangency_point(rb.rows[1], rb.rows[2]) == pt(0, 1, 1, 0));    // i
    CHECK(tangency_point(rb.rows[1], rb.rows[3]) == pt(1, 1, 1, 0));    // 1+i
    CHECK(tangency_point(rb.rows[2], rb.rows[3]) == pt(1, 1, 2, 0));    // 1/(1-i)
    // dual circles share the same six tangency points
    const AccQuadruple& ra = base_quadruple_A();
    CHECK(tangency_point(ra.rows[1], ra.rows[3]) == pt(0, 0, 1, 0));
    CHECK(tangency_point(ra.rows[0], ra.rows[1]) == pt(1, 1, 2, 0));
}

TEST_CASE("inversion fixes its own circle and moves the others") {
    const AccQuadruple q = act_on_quadruple(parse_word("S1P"), base_quadruple_B());
    // the inversion maps its own circle to itself as a set (interior and
    // exterior exchange, so the ACC row flips sign)
    const AccCircle& r0 = base_quadruple_B().rows[0];
    CHECK(q.rows[0] == AccCircle{-r0.cocurvature, -r0.curvature, -r0.b1, -r0.b2});
    auto same_circle = [](const AccCircle& x, const AccCircle& y) {
        return (x == y) || (x == AccCircle{-y.cocurvature, -y.curvature, -y.b1, -y.b2});
    };
    for (int i = 1; i < 4; ++i) CHECK_FALSE(same_circle(q.rows[i], base_quadruple_B().rows[i]));
    CHECK(q.in_descartes_configuration());
    // involution
    CHECK(act_on_quadruple(parse_word("S1 S1"), base_quadruple_B()).rows == base_quadruple_B().rows);
    // empty word
    CHECK(act_on_quadruple({}, base_quadruple_B()).rows == base_quadruple_B().rows);
}

TEST_CASE("configuration preserved under random words") {
    Rng rng(31);
    for (int t = 0; t < 200; ++t) {
        Word w;
        const int len = (int)rng.range(0, 8);
        for (int k = 0; k < len; ++k) w.push_back(Letter{(int)rng.range(0, 7)});
        CHECK(act_on_quadruple(w, base_quadruple_B()).in_descartes_configuration());
    }
}

TEST_CASE("quadruple action matches the mobius action on tangency data") {
    Rng rng(32);
    const AccQuadruple& rb = base_quadruple_B();
    for (int t = 0; t < 100; ++t) {
        Word w;
        const int len = (int)rng.range(1, 6);
        for (int k = 0; k < len; ++k) w.push_back(Letter{(int)rng.range(0, 7)});
        const AccQuadruple q = act_on_quadruple(w, rb);
        const ExtendedMobius g = word_mobius(w);
        // the image circles' pairwise tangency points are the mobius images
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                CHECK(tangency_point(q.rows[i], q.rows[j]) ==
                      g(tangency_point(rb.rows[i], rb.rows[j])));
    }
}

TEST_CASE("duality: swaps of R_A touch the same tangency structure as inversions of R_B") {
    // s_i(R_A circles) = inversions of R_B: check via tangency-point equality of quadruples
    const AccQuadruple sa = act_on_quadruple(parse_word("S1"), base_quadruple_A());
    const AccQuadruple ib = act_on_quadruple(parse_word("S1P"), base_quadruple_B());
    // both quadruples share all pairwise tangency points as sets
    std::vector<GaussianProjectivePoint> ta, tb;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            ta.push_back(tangency_point(sa.rows[i], sa.rows[j]));
            tb.push_back(tangency_point(ib.rows[i], ib.rows[j]));
        }
    std::sort(ta.begin(), ta.end());
    std::sort(tb.begin(), tb.end());
    CHECK(ta == tb);
}

TEST_CASE("farey regions of single letters") {
    // [S3P] -> open disk center i/2 radius 1/2 (B_3)
    const FareyRegion r3 = farey_region(Side::B, parse_word("S3P"));
    CHECK(r3.kind == FareyRegion::Kind::Circle);
    CHECK(r3.boundary[0].curvature != 0);
    CHECK(r3.boundary[0].center_re() == 0);
    CHECK(r3.boundary[0].center_im() == Rational(1, 2));
    CHECK(r3.boundary[0].radius_abs() == Rational(1, 2));
    CHECK(r3.contains(pt(0, 1, 2, 0)));        // i/2 inside
    CHECK_FALSE(r3.contains(pt(1, 0, 1, 0)));  // 1 outside

    // [S1] -> closed triangle with vertices i, 1+i, 1/(1-i)
    const FareyRegion r1 = farey_region(Side::B, parse_word("S1"));
    CHECK(r1.kind == FareyRegion::Kind::Triangle);
    std::vector<GaussianProjectivePoint> v(r1.vertices.begin(), r1.vertices.end());
    std::sort(v.begin(), v.end());
    std::vector<GaussianProjectivePoint> expect{pt(0, 1, 1, 0), pt(1, 1, 1, 0), pt(1, 1, 2, 0)};
    std::sort(expect.begin(), expect.end());
    CHECK(v == expect);
    CHECK(r1.contains(pt(2, 3, 4, 0)));  // (2+3i)/4 in the upper middle triangle
    CHECK(r1.contains(pt(0, 1, 1, 0)));  // closed: vertex belongs
}

TEST_CASE("farey nesting along prefixes") {
    const FareyRegion outer = farey_region(Side::B, parse_word("S2"));
    const FareyRegion inner = farey_region(Side::B, parse_word("S2 S4"));
    // the inner triangle (closed) lies inside the outer closed triangle
    CHECK(outer.contains(inner.interior));
    for (const auto& v : inner.vertices) CHECK(outer.contains(v));
    Rng rng(33);
    for (int t = 0; t < 80; ++t) {
        const Word w = random_normal_word(rng, 4, NormalForm::Swap);
        for (std::size_t cut = 1; cut < w.size(); ++cut) {
            const FareyRegion big = farey_region(Side::B, Word(w.begin(), w.begin() + cut));
            const FareyRegion small = farey_region(Side::B, w);
            CHECK(big.contains(small.interior));
        }
    }
    CHECK_THROWS_AS(farey_region(Side::B, parse_word("S1 S1")), std::domain_error);
    CHECK_THROWS_AS(farey_region(Side::B, Word{}), std::domain_error);
}
