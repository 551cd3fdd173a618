#include "parzero/attractor.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

#include "parzero/hp/eval.hpp"

namespace parzero {

namespace {

constexpr mpfr_prec_t kGeomPrec = 128;

HPComplex polar(double r, double theta, mpfr_prec_t prec = kGeomPrec)
{
    HPReal th(theta, prec);
    HPReal rr(r, prec);
    return HPComplex(rr * cos(th), rr * sin(th));
}

double fk_d(double r, double theta, int k)
{
    return f_k(polar(r, theta), k).to_double();
}

double fdiff(double r, double theta, int k, int l)
{
    HPComplex x = polar(r, theta);
    return (f_k(x, k) - f_k(x, l)).to_double();
}

}  // namespace

HPReal f_k(const HPComplex& x, int k)
{
    if (k < 1 || k > 3) throw std::invalid_argument("f_k: k must be in {1,2,3}");
    if (x.abs().to_double() > 1.0 + 1e-10) throw std::domain_error("f_k: requires |x| <= 1");
    mpfr_prec_t p = std::max<mpfr_prec_t>(x.precision(), kGeomPrec);
    HPComplex z = (p == x.precision()) ? x : HPComplex(HPReal(0L, p), HPReal(0L, p));
    if (p != x.precision()) {
        mpfr_set(z.real().raw(), x.real().raw(), MPFR_RNDN);
        mpfr_set(z.imag().raw(), x.imag().raw(), MPFR_RNDN);
    }
    HPComplex s = sqrt(dilog(pow_int(z, k)));
    return s.real() / HPReal(static_cast<long>(k), p);
}

RegionLabel classify(const HPComplex& x, double tol)
{
    if (x.abs().to_double() > 1.0 + 1e-10)
        throw std::domain_error("classify: requires |x| <= 1");
    double f[4] = {0, f_k(x, 1).to_double(), f_k(x, 2).to_double(), f_k(x, 3).to_double()};
    int top = 1;
    for (int k = 2; k <= 3; ++k)
        if (f[k] > f[top]) top = k;
    int second = 0;
    for (int k = 1; k <= 3; ++k) {
        if (k == top) continue;
        if (second == 0 || f[k] > f[second]) second = k;
    }
    RegionLabel lab;
    if (f[top] - f[second] <= tol) {
        lab.boundary = true;
        lab.k = std::min(top, second);
        lab.l = std::max(top, second);
    } else {
        lab.k = top;
    }
    return lab;
}

namespace {

// Bisect f_k - f_l = 0 on the unit circle between angles with opposite sign.
double circle_cross(int k, int l, double lo, double hi)
{
    double glo = fdiff(1.0, lo, k, l);
    for (int it = 0; it < 80; ++it) {
        double mid = 0.5 * (lo + hi);
        double gm = fdiff(1.0, mid, k, l);
        if ((gm > 0) == (glo > 0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

struct Crossing {
    double r = 0.0;
    bool found = false;
};

// Lowest sign change of f_k - f_l along the ray at angle theta within
// [r_lo, r_hi] that also satisfies the gamma dominance condition
// f_third >= both within dom_tol. Scan step then bisection.
Crossing ray_gamma_point(int k, int l, double theta, double r_lo, double r_hi, double step,
                         double r_tol, double dom_tol)
{
    Crossing out;
    int third = 6 - k - l;
    double prev_r = r_lo;
    double prev_g = fdiff(prev_r, theta, k, l);
    for (double r = r_lo + step; r <= r_hi + 1e-15; r += step) {
        double rr = std::min(r, r_hi);
        double g = fdiff(rr, theta, k, l);
        if ((g > 0) != (prev_g > 0) || g == 0.0) {
            double a = prev_r, b = rr, ga = prev_g;
            while (b - a > r_tol) {
                double m = 0.5 * (a + b);
                double gm = fdiff(m, theta, k, l);
                if ((gm > 0) == (ga > 0)) {
                    a = m;
                    ga = gm;
                } else {
                    b = m;
                }
            }
            double rc = 0.5 * (a + b);
            double fk = fk_d(rc, theta, k);
            double ft = fk_d(rc, theta, third);
            if (ft <= fk + dom_tol) {
                out.r = rc;
                out.found = true;
                return out;
            }
        }
        prev_r = rr;
        prev_g = g;
        if (rr >= r_hi) break;
    }
    return out;
}

struct Anchors {
    AttractorAnchors a;
    bool ready = false;
};
Anchors g_anchors;
std::mutex g_anchors_mu;

// Newton on (f1 - f2, f1 - f3) from a coarse grid seed.
HPComplex newton_triple(double x0, double y0)
{
    mpfr_prec_t p = kGeomPrec;
    double x = x0, y = y0;
    auto g1 = [&](double a, double b) { return fdiff(std::hypot(a, b), std::atan2(b, a), 1, 2); };
    auto g2 = [&](double a, double b) { return fdiff(std::hypot(a, b), std::atan2(b, a), 1, 3); };
    const double h = 1e-9;
    for (int it = 0; it < 60; ++it) {
        double f1v = g1(x, y), f2v = g2(x, y);
        double j11 = (g1(x + h, y) - f1v) / h, j12 = (g1(x, y + h) - f1v) / h;
        double j21 = (g2(x + h, y) - f2v) / h, j22 = (g2(x, y + h) - f2v) / h;
        double det = j11 * j22 - j12 * j21;
        if (det == 0) break;
        double dx = (j22 * f1v - j12 * f2v) / det;
        double dy = (-j21 * f1v + j11 * f2v) / det;
        x -= dx;
        y -= dy;
        if (std::hypot(dx, dy) < 1e-14) break;
    }
    return HPComplex(x, y, p);
}

}  // namespace

const AttractorAnchors& attractor_anchors()
{
    std::lock_guard<std::mutex> lock(g_anchors_mu);
    if (g_anchors.ready) return g_anchors.a;

    // coarse scan of the upper half disk for a cell where both differences
    // change sign, then Newton polish
    double seed_x = 0, seed_y = 0;
    bool have_seed = false;
    for (double th = 0.10; th < M_PI - 0.05 && !have_seed; th += 0.02) {
        double pg1 = 0, pg2 = 0;
        bool first = true;
        for (double r = 0.30; r <= 0.999; r += 0.004) {
            double v1 = fdiff(r, th, 1, 2), v2 = fdiff(r, th, 1, 3);
            if (!first && ((v1 > 0) != (pg1 > 0)) && std::fabs(v2) < 0.02) {
                seed_x = r * std::cos(th);
                seed_y = r * std::sin(th);
                have_seed = true;
                break;
            }
            pg1 = v1;
            pg2 = v2;
            first = false;
        }
    }
    if (!have_seed) throw std::runtime_error("attractor_anchors: no triple-point seed found");
    HPComplex tp = newton_triple(seed_x, seed_y);

    AttractorAnchors a;
    a.triple_point = tp;
    a.theta_triple = std::atan2(tp.to_double_im(), tp.to_double_re());
    a.r_triple = std::hypot(tp.to_double_re(), tp.to_double_im());
    a.theta_13_circle = circle_cross(1, 3, a.theta_triple - 0.6, 2.0 * M_PI / 3.0);
    a.theta_23_circle = circle_cross(2, 3, 2.0 * M_PI / 3.0 + 0.2, a.theta_triple + 0.15);
    g_anchors.a = a;
    g_anchors.ready = true;
    return g_anchors.a;
}

CurvePolyline trace_curve(int k, int l, double resolution)
{
    if (!(resolution > 0)) throw std::invalid_argument("trace_curve: resolution must be > 0");
    if (!(k >= 1 && l <= 3 && k < l)) throw std::invalid_argument("trace_curve: need 1 <= k < l <= 3");
    const auto& anc = attractor_anchors();
    double r_tol = std::min(resolution / 10.0, 1e-4);
    double dom_tol = resolution / 10.0;
    double scan_step = std::min(resolution, 0.004);

    CurvePolyline out;
    out.k = k;
    out.l = l;

    struct Pt {
        double theta, r;
    };
    std::vector<Pt> pts;

    double th_start, th_end;
    if (k == 1 && l == 2) {
        th_start = anc.theta_triple;
        th_end = M_PI;  // curve runs toward the origin cusp on the axis side
    } else if (k == 1 && l == 3) {
        th_start = anc.theta_13_circle;
        th_end = anc.theta_triple;
    } else {
        th_start = anc.theta_triple;
        th_end = anc.theta_23_circle;
    }

    auto find_at = [&](double th, double hint_r, bool have_hint) -> Crossing {
        if (have_hint) {
            double lo = std::max(1e-6, hint_r - 12.0 * scan_step);
            double hi = std::min(1.0, hint_r + 12.0 * scan_step);
            auto c = ray_gamma_point(k, l, th, lo, hi, scan_step, r_tol, dom_tol);
            if (c.found) return c;
        }
        return ray_gamma_point(k, l, th, 1e-6, 1.0, scan_step, r_tol, dom_tol);
    };

    // seed rays
    int n0 = std::max(8, static_cast<int>(std::ceil(std::fabs(th_end - th_start) /
                                                    std::max(resolution, 1e-3))));
    n0 = std::min(n0, 4096);
    double prev_r = anc.r_triple;
    bool have_prev = (k != 1 || l != 3);
    for (int i = 0; i <= n0; ++i) {
        double th = th_start + (th_end - th_start) * static_cast<double>(i) / n0;
        if (k == 1 && l == 2 && i == n0) continue;  // the axis ray itself has no crossing
        auto c = find_at(th, prev_r, have_prev);
        if (c.found) {
            pts.push_back({th, c.r});
            prev_r = c.r;
            have_prev = true;
        }
    }

    // exact endpoint anchors
    if (k == 1 && l == 2) {
        pts.insert(pts.begin(), {anc.theta_triple, anc.r_triple});
        // extend toward the origin, stepping so each radial drop stays below
        // the resolution; the crossing radius behaves like (pi - theta)^2
        double th = pts.back().theta;
        double r = pts.back().r;
        while (r > resolution * 0.5 && th < M_PI - 1e-12) {
            double f = std::sqrt(std::max(0.25, 1.0 - 0.8 * resolution / std::max(r, 1e-9)));
            th = M_PI - f * (M_PI - th);
            auto c = find_at(th, r, true);
            if (!c.found) break;
            pts.push_back({th, c.r});
            r = c.r;
        }
        pts.push_back({M_PI, 0.0});  // origin cusp
    } else if (k == 1 && l == 3) {
        pts.insert(pts.begin(), {anc.theta_13_circle, 1.0});
        pts.push_back({anc.theta_triple, anc.r_triple});
    } else {
        pts.insert(pts.begin(), {anc.theta_triple, anc.r_triple});
        pts.push_back({anc.theta_23_circle, 1.0});
    }

    // adaptive angle refinement until consecutive gaps <= resolution
    auto gap = [](const Pt& a, const Pt& b) {
        double ax = a.r * std::cos(a.theta), ay = a.r * std::sin(a.theta);
        double bx = b.r * std::cos(b.theta), by = b.r * std::sin(b.theta);
        return std::hypot(ax - bx, ay - by);
    };
    for (std::size_t i = 0; i + 1 < pts.size();) {
        if (gap(pts[i], pts[i + 1]) <= resolution ||
            std::fabs(pts[i + 1].theta - pts[i].theta) < 1e-11) {
            ++i;
            continue;
        }
        double thm = 0.5 * (pts[i].theta + pts[i + 1].theta);
        auto c = find_at(thm, 0.5 * (pts[i].r + pts[i + 1].r), true);
        if (!c.found) {
            // fall back to the radial midpoint; keeps refinement progressing
            pts.insert(pts.begin() + static_cast<long>(i) + 1,
                       {thm, 0.5 * (pts[i].r + pts[i + 1].r)});
        } else {
            pts.insert(pts.begin() + static_cast<long>(i) + 1, {thm, c.r});
        }
    }

    out.points.reserve(pts.size());
    double maxgap = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        out.points.push_back(polar(pts[i].r, pts[i].theta));
        if (i > 0) maxgap = std::max(maxgap, gap(pts[i - 1], pts[i]));
    }
    out.resolution = maxgap;
    return out;
}

std::vector<CurvePolyline> attractor_set(double resolution)
{
    if (!(resolution > 0)) throw std::invalid_argument("attractor_set: resolution must be > 0");
    std::vector<CurvePolyline> out;
    CurvePolyline semi;
    semi.kind = CurveKind::UnitSemicircle;
    long m = static_cast<long>(std::ceil(M_PI / resolution)) + 1;
    for (long i = 0; i <= m; ++i)
        semi.points.push_back(polar(1.0, M_PI * static_cast<double>(i) / static_cast<double>(m)));
    semi.resolution = 2.0 * std::sin(M_PI / (2.0 * static_cast<double>(m)));
    out.push_back(std::move(semi));
    out.push_back(trace_curve(1, 2, resolution));
    out.push_back(trace_curve(1, 3, resolution));
    out.push_back(trace_curve(2, 3, resolution));
    return out;
}

double hausdorff_xy(const std::vector<std::pair<double, double>>& a,
                    const std::vector<std::pair<double, double>>& b)
{
    if (a.empty() || b.empty())
        throw std::invalid_argument("hausdorff: point sets must be nonempty");
    auto directed = [](const std::vector<std::pair<double, double>>& p,
                       const std::vector<std::pair<double, double>>& q) {
        double worst = 0;
        for (const auto& [px, py] : p) {
            double best = 1e300;
            for (const auto& [qx, qy] : q) {
                double d = std::hypot(px - qx, py - qy);
                if (d < best) {
                    best = d;
                    if (best == 0) break;
                }
            }
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(directed(a, b), directed(b, a));
}

double hausdorff(const std::vector<HPComplex>& a, const std::vector<HPComplex>& b)
{
    std::vector<std::pair<double, double>> pa, pb;
    pa.reserve(a.size());
    pb.reserve(b.size());
    for (const auto& z : a) pa.emplace_back(z.to_double_re(), z.to_double_im());
    for (const auto& z : b) pb.emplace_back(z.to_double_re(), z.to_double_im());
    return hausdorff_xy(pa, pb);
}

}  // namespace parzero
