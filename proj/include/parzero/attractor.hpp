#pragma once

#include <optional>
#include <vector>

#include "parzero/hp/complex.hpp"

namespace parzero {

// Dominance label for a point of the closed upper unit disk: the index k
// maximizing f_k, or Boundary{k,l} when the top two values are within tol.
struct RegionLabel {
    int k = 0;                 // 1..3
    bool boundary = false;
    int l = 0;                 // second index when boundary (k < l)
};

enum class CurveKind { UnitSemicircle, Gamma };

// Ordered polyline approximating one attractor component.
struct CurvePolyline {
    CurveKind kind = CurveKind::Gamma;
    int k = 0, l = 0;               // labels for gamma curves (k < l)
    std::vector<HPComplex> points;  // consecutive gaps <= resolution
    double resolution = 0.0;        // max realized gap
};

// f_k(x) = (1/k) Re sqrt(Li2(x^k)), principal branches; |x| <= 1, k in {1,2,3}.
HPReal f_k(const HPComplex& x, int k);

RegionLabel classify(const HPComplex& x, double tol);

// The triple point f_1 = f_2 = f_3 in the open upper disk, plus the angles at
// which the three pairwise-equality curves meet the unit circle. Computed at
// 128-bit precision and cached.
struct AttractorAnchors {
    HPComplex triple_point;
    double theta_triple;      // arg of the triple point
    double r_triple;          // modulus of the triple point
    double theta_13_circle;   // f1 = f3 on the unit circle
    double theta_23_circle;   // f2 = f3 on the unit circle
};
const AttractorAnchors& attractor_anchors();

// gamma_{k,l}: the part of {f_k = f_l} on the closure of R(k), traced by
// radial-ray bisection with adaptive angle refinement. Point gaps <= resolution.
CurvePolyline trace_curve(int k, int l, double resolution);

// Unit semicircle plus the three gamma curves.
std::vector<CurvePolyline> attractor_set(double resolution);

// Hausdorff distance between finite point sets (exact up to double rounding).
double hausdorff(const std::vector<HPComplex>& a, const std::vector<HPComplex>& b);
double hausdorff_xy(const std::vector<std::pair<double, double>>& a,
                    const std::vector<std::pair<double, double>>& b);

}  // namespace parzero
