#pragma once

#include <vector>

#include "parzero/polynomial.hpp"
#include "parzero/rootfinder.hpp"

namespace parzero {

struct SectorHistogram {
    std::vector<double> bin_edges;  // size bins+1, spanning [0, 2pi]
    std::vector<long> counts;
    long total = 0;
};

struct DiscrepancyReport {
    double theta1 = 0, theta2 = 0;
    long observed = 0;
    double expected = 0;  // n (theta2-theta1) / 2pi
    double bound = 0;     // Erdos-Turan right-hand side
    bool satisfied = false;
};

// 16 sqrt(n ln((|a_0|+...+|a_n|)/sqrt(|a_0 a_n|))). Coefficients are summed
// exactly as integers; one final rounding. Zero constant term is rejected
// (deflate first).
double et_bound(const ExactPolynomial& p);

// Sector count of arg z in the closed interval [theta1, theta2] (arguments
// taken in [0, 2pi)) versus the Erdos-Turan bound for the given polynomial.
DiscrepancyReport discrepancy(const ZeroSet& zs, const ExactPolynomial& deflated_poly,
                              double theta1, double theta2);

// Convenience: regenerates the family polynomial from the ZeroSet metadata.
DiscrepancyReport discrepancy(const ZeroSet& zs, double theta1, double theta2);

// Equal-width sector histogram over [0, 2pi).
SectorHistogram sector_histogram(const ZeroSet& zs, int bins);

struct Region {
    enum class Kind { Disk, Annulus, Box } kind = Kind::Disk;
    double r1 = 0, r2 = 0;              // Disk: |z| <= r1; Annulus: r1 <= |z| <= r2
    double re1 = 0, re2 = 0, im1 = 0, im2 = 0;  // Box bounds
    static Region disk(double r);
    static Region annulus(double rlo, double rhi);
    static Region box(double re1, double re2, double im1, double im2);
    bool contains(double re, double im) const;
};

// (# zeros in region) / degree^alpha, multiplicities counted.
double order_alpha_counts(const ZeroSet& zs, const Region& region, double alpha);

long region_count(const ZeroSet& zs, const Region& region);

}  // namespace parzero
