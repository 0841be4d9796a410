#pragma once

#include <array>
#include <optional>
#include <string>

#include "sacf/gaussian.hpp"
#include "sacf/group.hpp"
#include "sacf/integer.hpp"
#include "sacf/letters.hpp"

namespace sacf {

// Circle in augmented curvature-center coordinates (cocurvature, curvature,
// b1, b2), normalized so that curvature*cocurvature - b1^2 - b2^2 = -1.
// Orientation: the interior is {h < 0} for the Hermitian value
//   h(p:q) = curv*|p|^2 - 2*Re(b * conj(p*conj(q))) + cocurv*|q|^2.
struct AccCircle {
    Rational cocurvature, curvature, b1, b2;

    Rational h_value(const GaussianProjectivePoint& z) const;
    double h_value(double x, double y) const;

    bool is_line() const { return curvature == 0; }
    // Euclidean data for curvature != 0.
    Rational center_re() const { return b1 / curvature; }
    Rational center_im() const { return b2 / curvature; }
    Rational radius_abs() const;  // |1/curvature|

    Rational det() const { return curvature * cocurvature - b1 * b1 - b2 * b2; }

    friend bool operator==(const AccCircle& a, const AccCircle& b) {
        return a.cocurvature == b.cocurvature && a.curvature == b.curvature && a.b1 == b.b1 &&
               a.b2 == b.b2;
    }
};

// Tangency point of two tangent circles: (b1+b2 : a1+a2) in P^1.
GaussianProjectivePoint tangency_point(const AccCircle& c1, const AccCircle& c2);

// Four circles as rows of a 4x4 matrix in Descartes configuration
// (C^T G_D C has the fixed block form).
struct AccQuadruple {
    std::array<AccCircle, 4> rows;

    bool in_descartes_configuration() const;
    std::array<std::array<Rational, 4>, 4> as_matrix() const;
};

// The dual base quadruples R_B and R_A (exact constants).
const AccQuadruple& base_quadruple_B();
const AccQuadruple& base_quadruple_A();

// Left action of a word: the result's circles are word_mobius(w) applied to
// the circles of q, i.e. the matrix product mat(w_n)...mat(w_1) * q.
// Throws std::runtime_error if the input or output violates the
// configuration identity.
AccQuadruple act_on_quadruple(const Word& w, const AccQuadruple& q);

// Farey regions F_B / F_A.
enum class Side { A, B };

struct FareyRegion {
    enum class Kind { Circle, Triangle } kind;
    // Circle: boundary[0] is the bounding circle. Triangle: boundary[0..2]
    // are the edge circles and dual the circumscribed dual circle. Each side
    // flag is +1 when the region lies where h < 0 for that circle.
    std::array<AccCircle, 3> boundary;
    std::array<int, 3> edge_side{};  // membership: edge_side[k]*h_k >= 0
    AccCircle dual;                  // circumscribed dual circle (triangles)
    int dual_side = 0;               // membership: dual_side*h <= 0
    int circle_side = 0;             // circles: membership circle_side*h < 0
    std::array<GaussianProjectivePoint, 3> vertices;  // triangle tangency vertices
    GaussianProjectivePoint interior;                 // exact interior point

    bool contains(const GaussianProjectivePoint& z) const;  // open circle / closed triangle
};

// Region attached to a nonempty word in swap or invert normal form.
// side B uses the R_B base regions, side A the R_A ones.
FareyRegion farey_region(Side side, const Word& w);

}  // namespace sacf
