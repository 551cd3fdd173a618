#pragma once

#include <string>
#include <vector>

#include "parzero/attractor.hpp"
#include "parzero/families.hpp"
#include "parzero/rootfinder.hpp"
#include "parzero/zerostats.hpp"

namespace parzero {

inline constexpr int kSchemaVersion = 1;

// Fixed-digit scientific decimal; digit count derived from the precision so
// output is format-independent and diff-stable.
std::string decimal(const HPReal& v, int digits = 0);
std::string decimal(double v);

std::string polynomial_json(FamilyId f, long n, const ExactPolynomial& p);
std::string polynomial_csv(const ExactPolynomial& p);
ExactPolynomial polynomial_from_json(const std::string& text);

std::string zeroset_json(const ZeroSet& zs);
std::string curves_csv(const std::vector<CurvePolyline>& curves);
std::string discrepancy_json(const ZeroSet& zs, const DiscrepancyReport& r);
std::string hausdorff_json(FamilyId f, long n, double resolution, double distance);

std::string curve_label(const CurvePolyline& c);

// Write via temp file + rename so readers never observe partial output.
void atomic_write(const std::string& path, const std::string& content);

}  // namespace parzero
