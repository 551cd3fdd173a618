#include "parzero/zerostats.hpp"

#include <cmath>
#include <stdexcept>

#include "parzero/families.hpp"

namespace parzero {

double et_bound(const ExactPolynomial& p)
{
    long n = p.degree();
    if (n < 1) throw std::invalid_argument("et_bound: degree must be >= 1");
    if (p.coeff(0) == 0)
        throw std::invalid_argument("et_bound: zero constant term; deflate the origin root first");
    BigInt s = p.sum_abs_coeffs();
    BigInt prod = abs(p.coeff(0) * p.coeff(static_cast<std::size_t>(n)));
    // ln(S / sqrt(a0 an)) = ln S - ln(a0 an)/2, exact integers in, one rounding out
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(std::max<std::size_t>(256, bit_length(s) + 64));
    HPReal S(s, prec), P2(prod, prec);
    HPReal lnterm = log(S) - ldexp2(log(P2), -1);
    HPReal b = HPReal(16L, prec) * sqrt(HPReal(n, prec) * lnterm);
    return b.to_double();
}

namespace {

double arg_in_02pi(const HPComplex& z)
{
    double a = std::atan2(z.to_double_im(), z.to_double_re());
    if (a < 0) a += 2.0 * M_PI;
    if (a >= 2.0 * M_PI) a = 0.0;
    return a;
}

}  // namespace

DiscrepancyReport discrepancy(const ZeroSet& zs, const ExactPolynomial& deflated_poly,
                              double theta1, double theta2)
{
    if (!(0.0 <= theta1 && theta1 < theta2 && theta2 <= 2.0 * M_PI + 1e-15))
        throw std::invalid_argument("discrepancy: need 0 <= theta1 < theta2 <= 2pi");
    DiscrepancyReport r;
    r.theta1 = theta1;
    r.theta2 = theta2;
    long n = zs.total_roots();
    for (const auto& root : zs.roots) {
        double a = arg_in_02pi(root.value);
        // closed interval; the full circle [0, 2pi] counts everything
        if ((a >= theta1 && a <= theta2) || (theta2 >= 2.0 * M_PI && a == 0.0))
            r.observed += root.multiplicity;
    }
    r.expected = static_cast<double>(n) * (theta2 - theta1) / (2.0 * M_PI);
    r.bound = et_bound(deflated_poly);
    r.satisfied = std::fabs(static_cast<double>(r.observed) - r.expected) < r.bound;
    return r;
}

DiscrepancyReport discrepancy(const ZeroSet& zs, double theta1, double theta2)
{
    if (!zs.family)
        throw std::invalid_argument("discrepancy: ZeroSet carries no family metadata");
    auto p = family_poly(*zs.family, zs.n).deflate_origin();
    return discrepancy(zs, p, theta1, theta2);
}

SectorHistogram sector_histogram(const ZeroSet& zs, int bins)
{
    if (bins < 2) throw std::invalid_argument("sector_histogram: bins must be >= 2");
    SectorHistogram h;
    h.bin_edges.resize(static_cast<std::size_t>(bins) + 1);
    for (int b = 0; b <= bins; ++b)
        h.bin_edges[static_cast<std::size_t>(b)] = 2.0 * M_PI * b / bins;
    h.counts.assign(static_cast<std::size_t>(bins), 0);
    for (const auto& root : zs.roots) {
        if (root.value.is_zero()) continue;
        double a = arg_in_02pi(root.value);
        int b = static_cast<int>(a / (2.0 * M_PI) * bins);
        if (b >= bins) b = bins - 1;
        h.counts[static_cast<std::size_t>(b)] += root.multiplicity;
        h.total += root.multiplicity;
    }
    return h;
}

Region Region::disk(double r)
{
    Region g;
    g.kind = Kind::Disk;
    g.r1 = r;
    return g;
}
Region Region::annulus(double rlo, double rhi)
{
    Region g;
    g.kind = Kind::Annulus;
    g.r1 = rlo;
    g.r2 = rhi;
    return g;
}
Region Region::box(double re1, double re2, double im1, double im2)
{
    Region g;
    g.kind = Kind::Box;
    g.re1 = re1;
    g.re2 = re2;
    g.im1 = im1;
    g.im2 = im2;
    return g;
}

bool Region::contains(double re, double im) const
{
    double m = std::hypot(re, im);
    switch (kind) {
        case Kind::Disk: return m <= r1;
        case Kind::Annulus: return m >= r1 && m <= r2;
        case Kind::Box: return re >= re1 && re <= re2 && im >= im1 && im <= im2;
    }
    return false;
}

long region_count(const ZeroSet& zs, const Region& region)
{
    long c = 0;
    for (const auto& root : zs.roots)
        if (region.contains(root.value.to_double_re(), root.value.to_double_im()))
            c += root.multiplicity;
    return c;
}

double order_alpha_counts(const ZeroSet& zs, const Region& region, double alpha)
{
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::invalid_argument("order_alpha_counts: need 0 < alpha <= 1");
    long deg = zs.total_roots();
    if (deg == 0) throw std::invalid_argument("order_alpha_counts: empty zero set");
    return static_cast<double>(region_count(zs, region)) /
           std::pow(static_cast<double>(deg), alpha);
}

}  // namespace parzero
