#include "parzero/rootfinder.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace parzero {

mpfr_prec_t precision_policy(const ExactPolynomial& p)
{
    long d = p.degree();
    if (d < 0) return 128;
    double lg = std::ceil(std::log2(static_cast<double>(d) + 1.0));
    long bits = static_cast<long>(bit_length(p.max_abs_coeff())) + 4 * static_cast<long>(lg) + 64;
    return static_cast<mpfr_prec_t>(std::max(128L, bits));
}

namespace {

constexpr double kGolden = 0.61803398874989484820;

double log2_abs(const BigInt& v)
{
    long exp2 = 0;
    double m = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log2(std::fabs(m)) + static_cast<double>(exp2);
}

// Newton-polygon starting points (Bini): radii from the upper convex hull of
// (k, log2|a_k|), angles evenly spread per annulus with an irrational offset.
void initial_points(const std::vector<double>& lg, std::vector<double>& re,
                    std::vector<double>& im)
{
    long d = static_cast<long>(lg.size()) - 1;
    std::vector<long> hull;
    for (long k = 0; k <= d; ++k) {
        if (lg[static_cast<std::size_t>(k)] == -1e300 && k != 0 && k != d) continue;
        while (hull.size() >= 2) {
            long k1 = hull[hull.size() - 2], k2 = hull.back();
            double s12 = (lg[static_cast<std::size_t>(k2)] - lg[static_cast<std::size_t>(k1)]) /
                         static_cast<double>(k2 - k1);
            double s2k = (lg[static_cast<std::size_t>(k)] - lg[static_cast<std::size_t>(k2)]) /
                         static_cast<double>(k - k2);
            if (s12 <= s2k)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(k);
    }
    re.resize(static_cast<std::size_t>(d));
    im.resize(static_cast<std::size_t>(d));
    std::size_t pos = 0;
    for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
        long k1 = hull[e], k2 = hull[e + 1];
        long m = k2 - k1;
        double r = std::exp2((lg[static_cast<std::size_t>(k1)] - lg[static_cast<std::size_t>(k2)]) /
                             static_cast<double>(m));
        if (!std::isfinite(r) || r <= 0) r = 1.0;
        for (long j = 0; j < m; ++j) {
            double th = 2.0 * M_PI *
                        ((static_cast<double>(j) + 0.5) / static_cast<double>(m) + kGolden +
                         static_cast<double>(e) / static_cast<double>(hull.size()));
            re[pos] = r * std::cos(th);
            im[pos] = r * std::sin(th);
            ++pos;
        }
    }
}

// In-place complex helpers on raw mpfr. Outputs must not alias inputs.
struct Scratch {
    explicit Scratch(mpfr_prec_t p)
    {
        for (auto& t : v) mpfr_init2(t, p);
    }
    ~Scratch()
    {
        for (auto& t : v) mpfr_clear(t);
    }
    mpfr_t v[10];
};

void cmul(mpfr_ptr or_, mpfr_ptr oi, mpfr_srcptr ar, mpfr_srcptr ai, mpfr_srcptr br,
          mpfr_srcptr bi, Scratch& s)
{
    mpfr_mul(s.v[0], ar, br, MPFR_RNDN);
    mpfr_mul(s.v[1], ai, bi, MPFR_RNDN);
    mpfr_mul(s.v[2], ar, bi, MPFR_RNDN);
    mpfr_mul(s.v[3], ai, br, MPFR_RNDN);
    mpfr_sub(or_, s.v[0], s.v[1], MPFR_RNDN);
    mpfr_add(oi, s.v[2], s.v[3], MPFR_RNDN);
}

void cdiv(mpfr_ptr or_, mpfr_ptr oi, mpfr_srcptr ar, mpfr_srcptr ai, mpfr_srcptr br,
          mpfr_srcptr bi, Scratch& s)
{
    mpfr_mul(s.v[4], br, br, MPFR_RNDN);
    mpfr_mul(s.v[5], bi, bi, MPFR_RNDN);
    mpfr_add(s.v[4], s.v[4], s.v[5], MPFR_RNDN);  // |b|^2
    mpfr_mul(s.v[0], ar, br, MPFR_RNDN);
    mpfr_mul(s.v[1], ai, bi, MPFR_RNDN);
    mpfr_mul(s.v[2], ai, br, MPFR_RNDN);
    mpfr_mul(s.v[3], ar, bi, MPFR_RNDN);
    mpfr_add(s.v[0], s.v[0], s.v[1], MPFR_RNDN);
    mpfr_sub(s.v[2], s.v[2], s.v[3], MPFR_RNDN);
    mpfr_div(or_, s.v[0], s.v[4], MPFR_RNDN);
    mpfr_div(oi, s.v[2], s.v[4], MPFR_RNDN);
}

struct LevelResult {
    bool converged = false;
    double max_residual = 0.0;
    std::string diag;
};

class AberthLevel {
public:
    AberthLevel(const ExactPolynomial& p, mpfr_prec_t prec, double target)
        : prec_(prec), target_(target), d_(p.degree()), s_(prec)
    {
        const auto& c = p.coeffs();
        cf_.reserve(c.size());
        cfabs_.reserve(c.size());
        lg_.reserve(c.size());
        for (const auto& v : c) {
            cf_.emplace_back(v, prec);
            HPReal a(v, prec);
            mpfr_abs(a.raw(), a.raw(), MPFR_RNDN);
            cfabs_.push_back(std::move(a));
            lg_.push_back(v == 0 ? -1e300 : log2_abs(v));
        }
        xr_.assign(static_cast<std::size_t>(d_), HPReal(prec));
        xi_.assign(static_cast<std::size_t>(d_), HPReal(prec));
        locked_.assign(static_cast<std::size_t>(d_), false);
        resid_.assign(static_cast<std::size_t>(d_), 1.0);
        std::vector<double> re, im;
        initial_points(lg_, re, im);
        for (long i = 0; i < d_; ++i) {
            mpfr_set_d(xr_[static_cast<std::size_t>(i)].raw(), re[static_cast<std::size_t>(i)],
                       MPFR_RNDN);
            mpfr_set_d(xi_[static_cast<std::size_t>(i)].raw(), im[static_cast<std::size_t>(i)],
                       MPFR_RNDN);
        }
        eval_floor_ = 4.0 * static_cast<double>(d_ + 1) * std::exp2(-static_cast<double>(prec));
    }

    LevelResult run(long max_sweeps);

    std::vector<HPComplex> roots() const
    {
        std::vector<HPComplex> out;
        out.reserve(static_cast<std::size_t>(d_));
        for (long i = 0; i < d_; ++i)
            out.emplace_back(xr_[static_cast<std::size_t>(i)], xi_[static_cast<std::size_t>(i)]);
        return out;
    }
    double residual_at(long i) const { return resid_[static_cast<std::size_t>(i)]; }
    double eval_floor() const { return eval_floor_; }

private:
    // Evaluate p, p' and the magnitude scale at x_i; returns backward residual
    // and leaves the Newton correction in (nwr, nwi).
    double eval_newton(long i, mpfr_ptr nwr, mpfr_ptr nwi);
    bool vieta_ok() const;
    void respawn_duplicates(int round);

    mpfr_prec_t prec_;
    double target_;
    long d_;
    Scratch s_;
    std::vector<HPReal> cf_, cfabs_;
    std::vector<double> lg_;
    std::vector<HPReal> xr_, xi_;
    std::vector<bool> locked_;
    std::vector<double> resid_;
    double eval_floor_;
};

double AberthLevel::eval_newton(long i, mpfr_ptr nwr, mpfr_ptr nwi)
{
    mpfr_prec_t p = prec_;
    HPReal axr(p), pvr(p), pvi(p), dvr(p), dvi(p), sv(p), t0(p), t1(p), t2(p), t3(p);
    const HPReal& xre = xr_[static_cast<std::size_t>(i)];
    const HPReal& xim = xi_[static_cast<std::size_t>(i)];
    mpfr_hypot(axr.raw(), xre.raw(), xim.raw(), MPFR_RNDN);
    bool outside = mpfr_cmp_ui(axr.raw(), 1) > 0;

    if (!outside) {
        // simultaneous Horner for p, p' and sum |a_k| |x|^k
        mpfr_set(pvr.raw(), cf_[static_cast<std::size_t>(d_)].raw(), MPFR_RNDN);
        mpfr_set_zero(pvi.raw(), 1);
        mpfr_set_zero(dvr.raw(), 1);
        mpfr_set_zero(dvi.raw(), 1);
        mpfr_set(sv.raw(), cfabs_[static_cast<std::size_t>(d_)].raw(), MPFR_RNDN);
        for (long k = d_ - 1; k >= 0; --k) {
            cmul(t0.raw(), t1.raw(), dvr.raw(), dvi.raw(), xre.raw(), xim.raw(), s_);
            mpfr_add(dvr.raw(), t0.raw(), pvr.raw(), MPFR_RNDN);
            mpfr_add(dvi.raw(), t1.raw(), pvi.raw(), MPFR_RNDN);
            cmul(t0.raw(), t1.raw(), pvr.raw(), pvi.raw(), xre.raw(), xim.raw(), s_);
            mpfr_add(pvr.raw(), t0.raw(), cf_[static_cast<std::size_t>(k)].raw(), MPFR_RNDN);
            mpfr_set(pvi.raw(), t1.raw(), MPFR_RNDN);
            mpfr_fma(sv.raw(), sv.raw(), axr.raw(), cfabs_[static_cast<std::size_t>(k)].raw(),
                     MPFR_RNDN);
        }
        // newton = p / p'
        cdiv(nwr, nwi, pvr.raw(), pvi.raw(), dvr.raw(), dvi.raw(), s_);
        mpfr_hypot(t0.raw(), pvr.raw(), pvi.raw(), MPFR_RNDN);
        mpfr_div(t0.raw(), t0.raw(), sv.raw(), MPFR_RNDN);
        return mpfr_get_d(t0.raw(), MPFR_RNDN) + eval_floor_;
    }

    // |x| > 1: evaluate the reversed polynomial at u = 1/x.
    // p(x) = x^d q(u);  p'(x) = x^{d-1} (d q(u) - u q'(u));
    // newton = x q / (d q - u q');  residual = |q(u)| / sum |a_{d-j}| |u|^j.
    HPReal ur(p), ui(p), n2(p);
    mpfr_mul(t0.raw(), xre.raw(), xre.raw(), MPFR_RNDN);
    mpfr_mul(t1.raw(), xim.raw(), xim.raw(), MPFR_RNDN);
    mpfr_add(n2.raw(), t0.raw(), t1.raw(), MPFR_RNDN);
    mpfr_div(ur.raw(), xre.raw(), n2.raw(), MPFR_RNDN);
    mpfr_div(ui.raw(), xim.raw(), n2.raw(), MPFR_RNDN);
    mpfr_neg(ui.raw(), ui.raw(), MPFR_RNDN);
    HPReal aur(p);
    mpfr_hypot(aur.raw(), ur.raw(), ui.raw(), MPFR_RNDN);

    mpfr_set(pvr.raw(), cf_[0].raw(), MPFR_RNDN);  // q accumulates over c_{d-j}
    mpfr_set_zero(pvi.raw(), 1);
    mpfr_set_zero(dvr.raw(), 1);
    mpfr_set_zero(dvi.raw(), 1);
    mpfr_set(sv.raw(), cfabs_[0].raw(), MPFR_RNDN);
    for (long k = 1; k <= d_; ++k) {
        cmul(t0.raw(), t1.raw(), dvr.raw(), dvi.raw(), ur.raw(), ui.raw(), s_);
        mpfr_add(dvr.raw(), t0.raw(), pvr.raw(), MPFR_RNDN);
        mpfr_add(dvi.raw(), t1.raw(), pvi.raw(), MPFR_RNDN);
        cmul(t0.raw(), t1.raw(), pvr.raw(), pvi.raw(), ur.raw(), ui.raw(), s_);
        mpfr_add(pvr.raw(), t0.raw(), cf_[static_cast<std::size_t>(d_ - k)].raw(), MPFR_RNDN);
        mpfr_set(pvi.raw(), t1.raw(), MPFR_RNDN);
        mpfr_fma(sv.raw(), sv.raw(), aur.raw(), cfabs_[static_cast<std::size_t>(d_ - k)].raw(),
                 MPFR_RNDN);
    }
    // den = d q - u q'
    cmul(t0.raw(), t1.raw(), ur.raw(), ui.raw(), dvr.raw(), dvi.raw(), s_);
    mpfr_mul_si(t2.raw(), pvr.raw(), d_, MPFR_RNDN);
    mpfr_mul_si(t3.raw(), pvi.raw(), d_, MPFR_RNDN);
    mpfr_sub(t2.raw(), t2.raw(), t0.raw(), MPFR_RNDN);
    mpfr_sub(t3.raw(), t3.raw(), t1.raw(), MPFR_RNDN);
    // w = x q / den
    HPReal wr(p), wi(p);
    cmul(wr.raw(), wi.raw(), xre.raw(), xim.raw(), pvr.raw(), pvi.raw(), s_);
    cdiv(nwr, nwi, wr.raw(), wi.raw(), t2.raw(), t3.raw(), s_);
    mpfr_hypot(t0.raw(), pvr.raw(), pvi.raw(), MPFR_RNDN);
    mpfr_div(t0.raw(), t0.raw(), sv.raw(), MPFR_RNDN);
    return mpfr_get_d(t0.raw(), MPFR_RNDN) + eval_floor_;
}

bool AberthLevel::vieta_ok() const
{
    mpfr_prec_t p = prec_;
    Scratch s(p);
    // sum of roots vs -a_{d-1}/a_d
    HPReal sr(0L, p), si(0L, p), sa(0L, p), t(p);
    for (long i = 0; i < d_; ++i) {
        mpfr_add(sr.raw(), sr.raw(), xr_[static_cast<std::size_t>(i)].raw(), MPFR_RNDN);
        mpfr_add(si.raw(), si.raw(), xi_[static_cast<std::size_t>(i)].raw(), MPFR_RNDN);
        mpfr_hypot(t.raw(), xr_[static_cast<std::size_t>(i)].raw(),
                   xi_[static_cast<std::size_t>(i)].raw(), MPFR_RNDN);
        mpfr_add(sa.raw(), sa.raw(), t.raw(), MPFR_RNDN);
    }
    HPReal tgt = -(cf_[static_cast<std::size_t>(d_ - 1)] / cf_[static_cast<std::size_t>(d_)]);
    HPReal diff = hypot(sr - tgt, si);
    HPReal scale(p);
    mpfr_abs(scale.raw(), tgt.raw(), MPFR_RNDN);
    if (scale < sa) scale = sa;
    if (mpfr_zero_p(scale.raw())) return true;
    double rel = (diff / scale).to_double();
    if (rel > std::exp2(-32)) {
        if (getenv("PARZERO_DEBUG")) fprintf(stderr, "[vieta] sum rel=%.3e\n", rel);
        return false;
    }

    // product of roots vs (-1)^d a_0/a_d
    HPReal pr(1L, p), pi2(0L, p), t0(p), t1(p);
    for (long i = 0; i < d_; ++i) {
        cmul(t0.raw(), t1.raw(), pr.raw(), pi2.raw(), xr_[static_cast<std::size_t>(i)].raw(),
             xi_[static_cast<std::size_t>(i)].raw(), s);
        mpfr_set(pr.raw(), t0.raw(), MPFR_RNDN);
        mpfr_set(pi2.raw(), t1.raw(), MPFR_RNDN);
    }
    HPReal ptgt = cf_[0] / cf_[static_cast<std::size_t>(d_)];
    if (d_ % 2 == 1) mpfr_neg(ptgt.raw(), ptgt.raw(), MPFR_RNDN);
    HPReal pd = hypot(pr - ptgt, pi2);
    HPReal pscale(p);
    mpfr_abs(pscale.raw(), ptgt.raw(), MPFR_RNDN);
    double prel = (pd / pscale).to_double();
    return prel <= std::exp2(-32);
}

void AberthLevel::respawn_duplicates(int round)
{
    // Vieta failed with everything locked: some simple root is represented
    // twice and another is missing. Free the higher-index member of each
    // too-close pair and restart it at a deterministic fresh angle.
    double tol = std::exp2(-static_cast<double>(prec_) / 3.0);
    std::vector<double> dre(static_cast<std::size_t>(d_)), dim(static_cast<std::size_t>(d_));
    for (long i = 0; i < d_; ++i) {
        dre[static_cast<std::size_t>(i)] = xr_[static_cast<std::size_t>(i)].to_double();
        dim[static_cast<std::size_t>(i)] = xi_[static_cast<std::size_t>(i)].to_double();
    }
    int freed = 0;
    for (long i = 0; i < d_; ++i) {
        for (long j = i + 1; j < d_; ++j) {
            double dx = dre[static_cast<std::size_t>(i)] - dre[static_cast<std::size_t>(j)];
            double dy = dim[static_cast<std::size_t>(i)] - dim[static_cast<std::size_t>(j)];
            double sc = 1.0 + std::hypot(dre[static_cast<std::size_t>(i)],
                                         dim[static_cast<std::size_t>(i)]);
            if (std::hypot(dx, dy) < tol * sc) {
                double r = std::hypot(dre[static_cast<std::size_t>(j)],
                                      dim[static_cast<std::size_t>(j)]);
                double th = 2.0 * M_PI * kGolden * static_cast<double>(j + 7 * round + freed + 1);
                mpfr_set_d(xr_[static_cast<std::size_t>(j)].raw(), (r + 0.25) * std::cos(th),
                           MPFR_RNDN);
                mpfr_set_d(xi_[static_cast<std::size_t>(j)].raw(), (r + 0.25) * std::sin(th),
                           MPFR_RNDN);
                locked_[static_cast<std::size_t>(j)] = false;
                resid_[static_cast<std::size_t>(j)] = 1.0;
                ++freed;
            }
        }
    }
}

LevelResult AberthLevel::run(long max_sweeps)
{
    mpfr_prec_t p = prec_;
    HPReal nwr(p), nwi(p), acr(p), aci(p), t0(p), t1(p), t2(p), t3(p), dr(p), di(p);
    LevelResult out;
    double best = 1e300;
    long best_sweep = 0;
    int respawn_rounds = 0;

    for (long sweep = 0; sweep < max_sweeps; ++sweep) {
        bool all_locked = true;
        double max_res = 0.0;
        for (long i = 0; i < d_; ++i) {
            if (locked_[static_cast<std::size_t>(i)]) continue;
            double res = eval_newton(i, nwr.raw(), nwi.raw());
            resid_[static_cast<std::size_t>(i)] = res;
            if (res <= target_) {
                locked_[static_cast<std::size_t>(i)] = true;
                continue;
            }
            all_locked = false;
            if (res > max_res) max_res = res;

            // Aberth repulsion S = sum_{j != i} 1/(x_i - x_j)
            mpfr_set_zero(acr.raw(), 1);
            mpfr_set_zero(aci.raw(), 1);
            for (long j = 0; j < d_; ++j) {
                if (j == i) continue;
                mpfr_sub(dr.raw(), xr_[static_cast<std::size_t>(i)].raw(),
                         xr_[static_cast<std::size_t>(j)].raw(), MPFR_RNDN);
                mpfr_sub(di.raw(), xi_[static_cast<std::size_t>(i)].raw(),
                         xi_[static_cast<std::size_t>(j)].raw(), MPFR_RNDN);
                mpfr_mul(t0.raw(), dr.raw(), dr.raw(), MPFR_RNDN);
                mpfr_mul(t1.raw(), di.raw(), di.raw(), MPFR_RNDN);
                mpfr_add(t0.raw(), t0.raw(), t1.raw(), MPFR_RNDN);
                if (mpfr_zero_p(t0.raw())) continue;  // exact collision; repulsion skipped
                mpfr_div(t1.raw(), dr.raw(), t0.raw(), MPFR_RNDN);
                mpfr_div(t2.raw(), di.raw(), t0.raw(), MPFR_RNDN);
                mpfr_add(acr.raw(), acr.raw(), t1.raw(), MPFR_RNDN);
                mpfr_sub(aci.raw(), aci.raw(), t2.raw(), MPFR_RNDN);
            }
            // corr = w / (1 - w S), falling back to Newton when degenerate
            cmul(t0.raw(), t1.raw(), nwr.raw(), nwi.raw(), acr.raw(), aci.raw(), s_);
            mpfr_ui_sub(t0.raw(), 1, t0.raw(), MPFR_RNDN);
            mpfr_neg(t1.raw(), t1.raw(), MPFR_RNDN);
            HPReal cr(p), ci(p);
            bool degenerate = false;
            mpfr_mul(t2.raw(), t0.raw(), t0.raw(), MPFR_RNDN);
            mpfr_mul(t3.raw(), t1.raw(), t1.raw(), MPFR_RNDN);
            mpfr_add(t2.raw(), t2.raw(), t3.raw(), MPFR_RNDN);
            if (!mpfr_number_p(t2.raw()) || mpfr_cmp_d(t2.raw(), 1e-300) < 0) degenerate = true;
            if (!degenerate) {
                cdiv(cr.raw(), ci.raw(), nwr.raw(), nwi.raw(), t0.raw(), t1.raw(), s_);
            } else {
                mpfr_set(cr.raw(), nwr.raw(), MPFR_RNDN);
                mpfr_set(ci.raw(), nwi.raw(), MPFR_RNDN);
            }
            if (!mpfr_number_p(cr.raw()) || !mpfr_number_p(ci.raw())) {
                // p' vanished at the iterate: take a deterministic nudge
                mpfr_set_d(cr.raw(), 1e-2, MPFR_RNDN);
                mpfr_set_d(ci.raw(), -1e-2, MPFR_RNDN);
            }
            // trust region: |corr| <= 0.25 (1 + |x_i|)
            mpfr_hypot(t0.raw(), cr.raw(), ci.raw(), MPFR_RNDN);
            mpfr_hypot(t1.raw(), xr_[static_cast<std::size_t>(i)].raw(),
                       xi_[static_cast<std::size_t>(i)].raw(), MPFR_RNDN);
            mpfr_add_ui(t1.raw(), t1.raw(), 1, MPFR_RNDN);
            mpfr_mul_d(t1.raw(), t1.raw(), 0.25, MPFR_RNDN);
            if (mpfr_cmp(t0.raw(), t1.raw()) > 0) {
                mpfr_div(t2.raw(), t1.raw(), t0.raw(), MPFR_RNDN);
                mpfr_mul(cr.raw(), cr.raw(), t2.raw(), MPFR_RNDN);
                mpfr_mul(ci.raw(), ci.raw(), t2.raw(), MPFR_RNDN);
            }
            mpfr_sub(xr_[static_cast<std::size_t>(i)].raw(),
                     xr_[static_cast<std::size_t>(i)].raw(), cr.raw(), MPFR_RNDN);
            mpfr_sub(xi_[static_cast<std::size_t>(i)].raw(),
                     xi_[static_cast<std::size_t>(i)].raw(), ci.raw(), MPFR_RNDN);
        }

        if (all_locked) {
            if (vieta_ok()) {
                out.converged = true;
                out.max_residual = *std::max_element(resid_.begin(), resid_.end());
                return out;
            }
            if (respawn_rounds >= 3) {
                out.diag = "Vieta consistency failed after duplicate respawns";
                return out;
            }
            respawn_duplicates(++respawn_rounds);
            best = 1e300;
            best_sweep = sweep;
            continue;
        }

        // stagnation rule: residual must halve at least every 50 sweeps
        if (max_res < 0.5 * best) {
            best = max_res;
            best_sweep = sweep;
        } else if (sweep - best_sweep > 50) {
            out.diag = "stagnation (max residual stopped improving)";
            out.max_residual = max_res;
            return out;
        }
    }
    out.diag = "sweep budget exhausted";
    return out;
}

}  // namespace

ZeroSet find_roots(const ExactPolynomial& p, double target_residual, const FindRootsOptions& opts)
{
    if (p.degree() < 1) throw std::invalid_argument("find_roots: degree must be >= 1");
    if (!(target_residual > 0)) throw std::invalid_argument("find_roots: target residual must be > 0");

    ZeroSet zs;
    zs.deflated_origin_multiplicity = static_cast<long>(p.origin_multiplicity());
    ExactPolynomial q = p.deflate_origin();
    mpfr_prec_t p0 = opts.precision_override ? opts.precision_override : precision_policy(q);

    if (q.degree() == 0) {
        zs.precision_bits = p0;
        zs.max_residual = 0.0;
        return zs;
    }

    std::string last_diag;
    for (int factor = 1; factor <= opts.max_precision_factor; factor *= 2) {
        mpfr_prec_t prec = p0 * factor;
        AberthLevel level(q, prec, target_residual);
        auto r = level.run(opts.max_sweeps_per_level);
        if (!r.converged) {
            last_diag = r.diag + " at " + std::to_string(prec) + " bits";
            continue;
        }
        zs.precision_bits = prec;
        zs.max_residual = r.max_residual;
        auto roots = level.roots();

        // cluster merge: roots within 2^{-prec/4} are one root with multiplicity
        double merge_tol = std::exp2(-static_cast<double>(prec) / 4.0);
        std::vector<int> group(roots.size(), -1);
        int ngroups = 0;
        for (std::size_t i = 0; i < roots.size(); ++i) {
            if (group[i] >= 0) continue;
            group[i] = ngroups++;
            double xi = roots[i].to_double_re(), yi = roots[i].to_double_im();
            for (std::size_t j = i + 1; j < roots.size(); ++j) {
                if (group[j] >= 0) continue;
                double sc = 1.0 + std::hypot(xi, yi);
                if (std::hypot(xi - roots[j].to_double_re(), yi - roots[j].to_double_im()) <
                    merge_tol * sc)
                    group[j] = group[i];
            }
        }
        std::vector<RootEntry> merged;
        for (int g = 0; g < ngroups; ++g) {
            RootEntry e{HPComplex(prec), 0};
            HPReal sr(0L, prec), si(0L, prec);
            for (std::size_t i = 0; i < roots.size(); ++i) {
                if (group[i] != g) continue;
                sr += roots[i].real();
                si += roots[i].imag();
                ++e.multiplicity;
            }
            HPReal m(static_cast<long>(e.multiplicity), prec);
            e.value = HPComplex(sr / m, si / m);
            merged.push_back(std::move(e));
        }
        // deterministic order: by argument in [0, 2pi), then modulus
        std::sort(merged.begin(), merged.end(), [](const RootEntry& a, const RootEntry& b) {
            HPReal aa = a.value.arg(), ab = b.value.arg();
            if (aa.sign() < 0) aa += ldexp2(HPReal::pi(aa.precision()), 1);
            if (ab.sign() < 0) ab += ldexp2(HPReal::pi(ab.precision()), 1);
            if (aa < ab) return true;
            if (ab < aa) return false;
            return a.value.abs() < b.value.abs();
        });
        zs.roots = std::move(merged);
        return zs;
    }
    throw ConvergenceError("find_roots: no convergence up to " +
                           std::to_string(p0 * opts.max_precision_factor) + " bits (" + last_diag +
                           "); degree " + std::to_string(q.degree()));
}

ZeroSet find_family_roots(FamilyId f, long n, double target_residual, const FindRootsOptions& opts)
{
    auto poly = family_poly(f, n);
    auto zs = find_roots(poly, target_residual, opts);
    zs.family = f;
    zs.n = n;
    return zs;
}

}  // namespace parzero
