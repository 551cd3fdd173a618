#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "parzero/asymptotics.hpp"
#include "parzero/attractor.hpp"
#include "parzero/checks.hpp"
#include "parzero/families.hpp"
#include "parzero/hp/eval.hpp"
#include "parzero/io.hpp"
#include "parzero/rootfinder.hpp"
#include "parzero/zerostats.hpp"

namespace {

// Exit codes: 0 ok, 1 config, 2 I/O, 3 numeric failure, 4 invariant failure.
constexpr int kOk = 0;
constexpr int kConfigError = 1;
constexpr int kIoError = 2;
constexpr int kNumericError = 3;
constexpr int kInvariantFailure = 4;

void emit(const std::string& payload, const std::string& out_path)
{
    if (out_path.empty()) {
        std::fwrite(payload.data(), 1, payload.size(), stdout);
        return;
    }
    parzero::atomic_write(out_path, payload);
}

struct CommonOpts {
    std::string family = "parts";
    long n = 0;
    std::string n_list;
    long precision_bits = 0;
    double residual = 1e-25;
    double resolution = 0.01;
    std::string format = "json";
    std::string out;
};

std::vector<long> parse_n_list(const CommonOpts& c)
{
    std::vector<long> ns;
    if (!c.n_list.empty()) {
        std::string cur;
        for (char ch : c.n_list + ",") {
            if (ch == ',') {
                if (!cur.empty()) ns.push_back(std::stol(cur));
                cur.clear();
            } else {
                cur += ch;
            }
        }
    } else if (c.n > 0) {
        ns.push_back(c.n);
    }
    return ns;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"parzero: partition-statistic polynomial families, their zeros and asymptotics"};
    app.require_subcommand(1);

    CommonOpts c;
    auto add_common = [&](CLI::App* sub, bool need_family) {
        if (need_family) sub->add_option("--family", c.family, "taylor|parts|rank|crank|durfee");
        sub->add_option("--n", c.n, "polynomial index");
        sub->add_option("--n-list", c.n_list, "comma-separated indices");
        sub->add_option("--precision-bits", c.precision_bits, "override the precision policy");
        sub->add_option("--residual", c.residual, "root-finder backward-error target");
        sub->add_option("--format", c.format)->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", c.out, "output path (atomic write); stdout when omitted");
    };

    auto* gen = app.add_subcommand("gen", "emit exact coefficients of one family member");
    add_common(gen, true);

    auto* roots = app.add_subcommand("roots", "compute the full zero set");
    add_common(roots, true);

    auto* attr = app.add_subcommand("attractor", "emit the attractor curve polylines");
    attr->add_option("--resolution", c.resolution, "max gap between consecutive points");
    attr->add_option("--format", c.format)->check(CLI::IsMember({"json", "csv"}));
    attr->add_option("--out", c.out);

    auto* disc = app.add_subcommand("discrepancy", "Erdos-Turan sector report for one zero set");
    add_common(disc, true);
    std::vector<double> sector{0.0, 2.0 * M_PI};
    disc->add_option("--sector", sector, "theta1 theta2")->expected(2);

    auto* haus = app.add_subcommand("hausdorff", "distance of a zero set to the attractor");
    add_common(haus, true);
    std::string against = "attractor";
    haus->add_option("--against", against)->check(CLI::IsMember({"attractor"}));
    haus->add_option("--resolution", c.resolution);

    auto* asym = app.add_subcommand("asym", "exact-vs-asymptotic comparison reports");
    add_common(asym, false);
    std::string kind = "hr";
    double xre = 2.0, xim = 0.0;
    asym->add_option("--kind", kind)->check(CLI::IsMember({"hr", "sn", "fn-outer", "fn-inner"}));
    asym->add_option("--x-re", xre);
    asym->add_option("--x-im", xim);

    auto* check = app.add_subcommand("check", "run an invariant suite");
    std::string suite = "all";
    long budget = 40;
    check->add_option("suite", suite, "families|zeros|asymptotics|attractor|all")
        ->check(CLI::IsMember({"families", "zeros", "asymptotics", "attractor", "all"}));
    check->add_option("budget", budget, "n budget (desk scale)");
    check->add_option("--out", c.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kConfigError;
    }

    try {
        if (gen->parsed()) {
            auto f = parzero::family_from_name(c.family);
            if (c.n < 0 || (f != parzero::FamilyId::Taylor && c.n < 1)) {
                std::cerr << "gen: invalid --n\n";
                return kConfigError;
            }
            auto p = parzero::family_poly(f, c.n);
            emit(c.format == "json" ? parzero::polynomial_json(f, c.n, p)
                                    : parzero::polynomial_csv(p),
                 c.out);
            return kOk;
        }
        if (roots->parsed()) {
            auto f = parzero::family_from_name(c.family);
            auto ns = parse_n_list(c);
            if (ns.empty() || c.residual <= 0) {
                std::cerr << "roots: invalid --n / --residual\n";
                return kConfigError;
            }
            std::string payload;
            for (long n : ns) {
                auto poly = parzero::family_poly(f, n);
                if (poly.degree() < 1) {
                    std::cerr << "roots: degree-0 input (n=" << n << ")\n";
                    return kConfigError;
                }
                parzero::FindRootsOptions opts;
                opts.precision_override = static_cast<mpfr_prec_t>(c.precision_bits);
                auto zs = parzero::find_roots(poly, c.residual, opts);
                zs.family = f;
                zs.n = n;
                payload += parzero::zeroset_json(zs);
            }
            emit(payload, c.out);
            return kOk;
        }
        if (attr->parsed()) {
            if (c.resolution <= 0) {
                std::cerr << "attractor: invalid --resolution\n";
                return kConfigError;
            }
            auto curves = parzero::attractor_set(c.resolution);
            emit(parzero::curves_csv(curves), c.out);
            return kOk;
        }
        if (disc->parsed()) {
            auto f = parzero::family_from_name(c.family);
            if (c.n < 1) {
                std::cerr << "discrepancy: invalid --n\n";
                return kConfigError;
            }
            parzero::FindRootsOptions opts;
            opts.precision_override = static_cast<mpfr_prec_t>(c.precision_bits);
            auto zs = parzero::find_family_roots(f, c.n, c.residual, opts);
            auto rep = parzero::discrepancy(zs, sector[0], sector[1]);
            emit(parzero::discrepancy_json(zs, rep), c.out);
            return kOk;
        }
        if (haus->parsed()) {
            auto f = parzero::family_from_name(c.family);
            if (c.n < 1 || c.resolution <= 0) {
                std::cerr << "hausdorff: invalid --n / --resolution\n";
                return kConfigError;
            }
            parzero::FindRootsOptions opts;
            opts.precision_override = static_cast<mpfr_prec_t>(c.precision_bits);
            auto zs = parzero::find_family_roots(f, c.n, c.residual, opts);
            std::vector<parzero::HPComplex> zpts;
            for (const auto& r : zs.roots) {
                if (r.value.to_double_im() < -1e-12) continue;
                if (r.value.abs().to_double() > 1.0 + 1e-9) continue;
                zpts.push_back(r.value);
            }
            auto curves = parzero::attractor_set(c.resolution);
            std::vector<parzero::HPComplex> apts;
            for (const auto& cv : curves)
                for (const auto& pt : cv.points) apts.push_back(pt);
            double d = parzero::hausdorff(zpts, apts);
            emit(parzero::hausdorff_json(f, c.n, c.resolution, d), c.out);
            return kOk;
        }
        if (asym->parsed()) {
            auto ns = parse_n_list(c);
            if (ns.empty()) {
                std::cerr << "asym: invalid --n\n";
                return kConfigError;
            }
            mpfr_prec_t prec = c.precision_bits > 0 ? static_cast<mpfr_prec_t>(c.precision_bits) : 256;
            std::string payload;
            for (long n : ns) {
                parzero::AsymptoticReport rep;
                if (kind == "hr") {
                    auto table = parzero::partition_counts(n);
                    parzero::HPComplex exact(parzero::HPReal(table.p[static_cast<std::size_t>(n)], prec),
                                             parzero::HPReal(0L, prec));
                    parzero::HPComplex approx(parzero::hr_approx(n, prec), parzero::HPReal(0L, prec));
                    rep = parzero::make_report(n, parzero::HPComplex(prec), exact, approx);
                } else {
                    mpfr_prec_t eprec = std::max<mpfr_prec_t>(
                        prec, parzero::precision_policy(parzero::taylor_poly(n)) +
                                  static_cast<mpfr_prec_t>(n) + 64);
                    parzero::HPComplex x(xre, xim, eprec);
                    if (kind == "sn") {
                        rep = parzero::make_report(n, x, parzero::sn_exact(n, x),
                                                   parzero::sn_approx(n, x));
                    } else if (kind == "fn-outer") {
                        parzero::PartsTriangle tri(n);
                        rep = parzero::make_report(n, x, parzero::fn_exact(n, x, tri),
                                                   parzero::fn_outer_approx(n, x));
                    } else {
                        parzero::PartsTriangle tri(n);
                        rep = parzero::make_report(n, x, parzero::fn_exact(n, x, tri),
                                                   parzero::fn_inner_approx(n, x));
                    }
                }
                payload += "{\n  \"schema_version\": 1,\n  \"kind\": \"" + kind + "\",\n  \"n\": " +
                           std::to_string(n) + ",\n  \"exact\": {\"re\": \"" +
                           parzero::decimal(rep.exact.real(), 30) + "\", \"im\": \"" +
                           parzero::decimal(rep.exact.imag(), 30) + "\"},\n  \"approx\": {\"re\": \"" +
                           parzero::decimal(rep.approx.real(), 30) + "\", \"im\": \"" +
                           parzero::decimal(rep.approx.imag(), 30) + "\"},\n  \"rel_error\": \"" +
                           parzero::decimal(rep.rel_error) + "\"\n}\n";
            }
            emit(payload, c.out);
            return kOk;
        }
        if (check->parsed()) {
            if (budget < 1) {
                std::cerr << "check: budget must be >= 1\n";
                return kConfigError;
            }
            auto results = parzero::check_suite(suite, budget);
            std::string payload;
            bool all = true;
            for (const auto& r : results) {
                payload += std::string(r.pass ? "PASS" : "FAIL") + " " + r.name + " — " + r.detail +
                           "\n";
                all = all && r.pass;
            }
            emit(payload, c.out);
            return all ? kOk : kInvariantFailure;
        }
    } catch (const parzero::ConvergenceError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kNumericError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::runtime_error& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kIoError;
    }
    return kConfigError;
}
