#include "parzero/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace parzero {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string decimal(const HPReal& v, int digits)
{
    if (digits <= 0)
        digits = static_cast<int>(static_cast<double>(v.precision()) * 0.30103) - 2;
    if (digits < 8) digits = 8;
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Re", digits, v.raw());
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

std::string decimal(double v)
{
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.17e", v);
    return buf;
}

std::string polynomial_json(FamilyId f, long n, const ExactPolynomial& p)
{
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["family"] = family_name(f);
    j["n"] = n;
    j["coefficients"] = p.coeff_strings();
    return j.dump(2) + "\n";
}

std::string polynomial_csv(const ExactPolynomial& p)
{
    std::string out = "k,coefficient\n";
    auto cs = p.coeff_strings();
    for (std::size_t k = 0; k < cs.size(); ++k)
        out += std::to_string(k) + "," + cs[k] + "\n";
    return out;
}

ExactPolynomial polynomial_from_json(const std::string& text)
{
    auto j = json::parse(text);
    return ExactPolynomial::from_coeff_strings(j.at("coefficients").get<std::vector<std::string>>());
}

std::string zeroset_json(const ZeroSet& zs)
{
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["family"] = zs.family ? family_name(*zs.family) : "custom";
    j["n"] = zs.n;
    j["precision_bits"] = static_cast<long>(zs.precision_bits);
    j["max_residual"] = decimal(zs.max_residual);
    j["deflated_origin_multiplicity"] = zs.deflated_origin_multiplicity;
    ordered_json roots = ordered_json::array();
    for (const auto& r : zs.roots) {
        ordered_json e;
        e["re"] = decimal(r.value.real());
        e["im"] = decimal(r.value.imag());
        e["multiplicity"] = r.multiplicity;
        roots.push_back(std::move(e));
    }
    j["roots"] = std::move(roots);
    return j.dump(2) + "\n";
}

std::string curve_label(const CurvePolyline& c)
{
    if (c.kind == CurveKind::UnitSemicircle) return "semicircle";
    return "gamma_" + std::to_string(c.k) + "_" + std::to_string(c.l);
}

std::string curves_csv(const std::vector<CurvePolyline>& curves)
{
    std::string out = "curve_label,idx,re,im\n";
    for (const auto& c : curves) {
        std::string lab = curve_label(c);
        for (std::size_t i = 0; i < c.points.size(); ++i)
            out += lab + "," + std::to_string(i) + "," + decimal(c.points[i].real(), 17) + "," +
                   decimal(c.points[i].imag(), 17) + "\n";
    }
    return out;
}

std::string discrepancy_json(const ZeroSet& zs, const DiscrepancyReport& r)
{
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["family"] = zs.family ? family_name(*zs.family) : "custom";
    j["n"] = zs.n;
    j["theta1"] = decimal(r.theta1);
    j["theta2"] = decimal(r.theta2);
    j["observed"] = r.observed;
    j["expected"] = decimal(r.expected);
    j["bound"] = decimal(r.bound);
    j["satisfied"] = r.satisfied;
    return j.dump(2) + "\n";
}

std::string hausdorff_json(FamilyId f, long n, double resolution, double distance)
{
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["family"] = family_name(f);
    j["n"] = n;
    j["resolution"] = decimal(resolution);
    j["distance"] = decimal(distance);
    return j.dump(2) + "\n";
}

void atomic_write(const std::string& path, const std::string& content)
{
    std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open " + tmp + " for writing");
        f.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!f) throw std::runtime_error("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("rename failed: " + tmp + " -> " + path);
}

}  // namespace parzero
