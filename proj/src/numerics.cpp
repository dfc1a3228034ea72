#include "pmskit/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

namespace pmskit {

namespace {

using cplx = std::complex<double>;
using lcplx = std::complex<long double>;

constexpr double kPi = 3.14159265358979323846;

// Neumaier-compensated accumulator
struct Kahan {
    cplx sum{0.0, 0.0};
    cplx comp{0.0, 0.0};
    void add(cplx x) {
        cplx t = sum + x;
        cplx corr((std::abs(sum.real()) >= std::abs(x.real()))
                      ? (sum.real() - t.real()) + x.real()
                      : (x.real() - t.real()) + sum.real(),
                  (std::abs(sum.imag()) >= std::abs(x.imag()))
                      ? (sum.imag() - t.imag()) + x.imag()
                      : (x.imag() - t.imag()) + sum.imag());
        comp += corr;
        sum = t;
    }
    cplx value() const { return sum + comp; }
};

cplx pow_int(cplx base, int k) {
    cplx r{1.0, 0.0};
    for (int i = 0; i < k; ++i)
        r *= base;
    return r;
}

// ---------------------------------------------------------------------------
// Tail correction: the outer summand of every nested series here has an
// asymptotic expansion over t^{-s} log^p t (and t^{-s-alpha} log^p t when the
// Pochhammer weight is present). Four basis functions are fitted to sampled
// values and the model tail is summed via Euler-Maclaurin through the B_2 term.

// int_a^inf t^{-s} log^p t dt, Re s > 1
lcplx power_log_integral(long double a, lcplx s, int p) {
    lcplx la = std::log((lcplx)a);
    lcplx apow = std::exp((1.0L - s) * la); // a^{1-s}
    lcplx acc = apow / (s - 1.0L);
    // I_p = a^{1-s} log^p a/(s-1) + p/(s-1) I_{p-1}
    lcplx ip = acc;
    for (int q = 1; q <= p; ++q) {
        lcplx lp = ip; // holds I_{q-1}
        ip = apow * std::pow(la, q) / (s - 1.0L) + (lcplx)(long double)q / (s - 1.0L) * lp;
    }
    return ip;
}

struct TailBasis {
    lcplx s;
    int logpow;
    lcplx eval(long double t) const {
        lcplx lt = std::log((lcplx)t);
        return std::exp(-s * lt) * std::pow(lt, logpow);
    }
    lcplx derivative(long double t) const {
        lcplx lt = std::log((lcplx)t);
        lcplx tp = std::exp((-s - 1.0L) * lt);
        lcplx d = -s * std::pow(lt, logpow);
        if (logpow > 0)
            d += (lcplx)(long double)logpow * std::pow(lt, logpow - 1);
        return tp * d;
    }
    // sum_{m >= a} basis(m) via Euler-Maclaurin: integral + b/2 - b'/12
    lcplx em_sum_from(long double a) const {
        return power_log_integral(a, s, logpow) + eval(a) / 2.0L - derivative(a) / 12.0L;
    }
};

struct TailResult {
    cplx correction{0.0, 0.0};
    double error = 0.0;
};

constexpr int kCheckpoints = 6; // N/32, N/16, N/8, N/4, N/2, N
constexpr int kBasis = 5;

using TailSamples = std::array<std::pair<double, cplx>, kCheckpoints>;

// samples: (m, g(m)) at ascending checkpoints, last one = N. s_base is the
// dominant decay exponent; when the Pochhammer weight separates a second
// family t^{-s-alpha}, it replaces the higher log powers in the basis.
TailResult fitted_tail(const TailSamples& samples, cplx s_base, bool use_shifted,
                       cplx shifted_exp) {
    TailResult out;
    double n_last = samples[kCheckpoints - 1].first;
    double gmax = 0.0;
    for (const auto& [m, g] : samples)
        gmax = std::max(gmax, std::abs(g));
    if (gmax == 0.0)
        return out; // series already dead: nothing to correct

    std::array<TailBasis, kBasis> basis;
    if (use_shifted) {
        basis = {TailBasis{(lcplx)s_base, 0}, TailBasis{(lcplx)s_base, 1},
                 TailBasis{(lcplx)s_base + 1.0L, 0}, TailBasis{(lcplx)shifted_exp, 0},
                 TailBasis{(lcplx)shifted_exp, 1}};
    } else {
        basis = {TailBasis{(lcplx)s_base, 0}, TailBasis{(lcplx)s_base, 1},
                 TailBasis{(lcplx)s_base, 2}, TailBasis{(lcplx)s_base, 3},
                 TailBasis{(lcplx)s_base + 1.0L, 0}};
    }

    // solve on five checkpoints; the held-out N/4 point validates the fit
    const std::array<int, kBasis> pick = {0, 1, 2, 4, 5};
    std::array<std::array<lcplx, kBasis + 1>, kBasis> m{};
    for (int i = 0; i < kBasis; ++i) {
        long double t = (long double)samples[(size_t)pick[(size_t)i]].first;
        for (int b = 0; b < kBasis; ++b)
            m[(size_t)i][(size_t)b] = basis[(size_t)b].eval(t);
        m[(size_t)i][kBasis] = (lcplx)samples[(size_t)pick[(size_t)i]].second;
    }
    for (int col = 0; col < kBasis; ++col) { // Gaussian elimination, partial pivot
        int sel = col;
        for (int r = col + 1; r < kBasis; ++r)
            if (std::abs(m[(size_t)r][(size_t)col]) > std::abs(m[(size_t)sel][(size_t)col]))
                sel = r;
        std::swap(m[(size_t)col], m[(size_t)sel]);
        if (std::abs(m[(size_t)col][(size_t)col]) < 1e-300L) {
            out.correction = 0.0; // degenerate sample set: crude integral-comparison bound
            out.error = std::abs(samples[kCheckpoints - 1].second) * n_last * 4.0;
            return out;
        }
        for (int r = 0; r < kBasis; ++r) {
            if (r == col)
                continue;
            lcplx f = m[(size_t)r][(size_t)col] / m[(size_t)col][(size_t)col];
            for (int c = col; c <= kBasis; ++c)
                m[(size_t)r][(size_t)c] -= f * m[(size_t)col][(size_t)c];
        }
    }
    std::array<lcplx, kBasis> coef;
    for (int i = 0; i < kBasis; ++i)
        coef[(size_t)i] = m[(size_t)i][kBasis] / m[(size_t)i][(size_t)i];

    lcplx model_mid{0.0L, 0.0L};
    for (int b = 0; b < kBasis; ++b)
        model_mid += coef[(size_t)b] * basis[(size_t)b].eval((long double)samples[3].first);
    double residual = std::abs((cplx)model_mid - samples[3].second);

    lcplx tail{0.0L, 0.0L};
    for (int b = 0; b < kBasis; ++b)
        tail += coef[(size_t)b] * basis[(size_t)b].em_sum_from((long double)n_last + 1.0L);
    out.correction = (cplx)tail;
    // neglected-family tail, extrapolation slack, Euler-Maclaurin remainder
    out.error = 8.0 * residual * n_last + 2e-3 * std::abs(out.correction) +
                std::abs(samples[kCheckpoints - 1].second) / (n_last * n_last) +
                1e-18 * gmax * n_last;
    if (!std::isfinite(out.error) || !std::isfinite(std::abs(out.correction))) {
        out.correction = 0.0;
        out.error = std::abs(samples[kCheckpoints - 1].second) * n_last * 4.0;
    }
    return out;
}

std::array<long long, kCheckpoints> checkpoints(long long n) {
    return {std::max<long long>(n / 32, 2), std::max<long long>(n / 16, 3),
            std::max<long long>(n / 8, 4),  std::max<long long>(n / 4, 5),
            std::max<long long>(n / 2, 6),  n};
}

bool near_integer(cplx alpha) {
    double re = std::round(alpha.real());
    return std::abs(alpha - cplx(re, 0.0)) < 0.05;
}

void require_alpha_domain(cplx alpha) {
    if (!(alpha.real() > -1.0))
        throw std::domain_error("Re alpha must exceed -1");
}

} // namespace

double zeta_int(int s) {
    if (s < 2)
        throw std::domain_error("zeta_int needs s >= 2");
    // Euler-Maclaurin: partial sum + integral + B_1 term + B_{2j} corrections
    const double n = 40.0;
    static const double bern[] = {1.0 / 6,  -1.0 / 30,      1.0 / 42, -1.0 / 30,
                                  5.0 / 66, -691.0 / 2730,  7.0 / 6};
    double res = 0.0;
    for (int k = 40; k >= 1; --k)
        res += std::pow((double)k, -s);
    res += std::pow(n, 1.0 - s) / (s - 1.0);
    res -= 0.5 * std::pow(n, -s);
    double rising = (double)s;               // s(s+1)...(s+2j-2)
    double npow = std::pow(n, -(double)s - 1.0); // n^{-(s+2j-1)}
    double factorial = 2.0;                  // (2j)!
    for (int j = 1; j <= 7; ++j) {
        res += bern[j - 1] / factorial * rising * npow;
        rising *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
        npow /= n * n;
        factorial *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
    }
    return res;
}

ComplexEstimate eval_pms(const Composition& k, cplx alpha, const NumericOptions& opts) {
    if (!k.admissible())
        throw std::domain_error("series diverges: last exponent must be >= 2");
    require_alpha_domain(alpha);
    int r = k.depth();
    if (r == 0)
        return {cplx(1.0, 0.0), 0.0};

    const long long n = std::max<long long>(opts.trunc_n, 64);
    const cplx shift = alpha + 1.0;
    const auto chk = checkpoints(n);
    TailSamples samples{};
    size_t chk_idx = 0;

    std::vector<Kahan> prefix((size_t)r > 1 ? (size_t)(r - 1) : 0);
    std::vector<cplx> level((size_t)r);
    Kahan total;
    double sum_abs = 0.0;
    cplx w_head{1.0, 0.0}; // (alpha+1)_m / m!

    for (long long m = 0; m <= n; ++m) {
        if (m > 0)
            w_head *= (alpha + (double)m) / (double)m;
        cplx inv = 1.0 / ((double)m + shift);
        cplx a0 = pow_int(inv, k.parts()[0]);
        level[0] = (r == 1) ? a0 : w_head * a0;
        for (int j = 1; j < r; ++j) {
            cplx p = prefix[(size_t)j - 1].value();
            cplx aj = p * pow_int(inv, k.parts()[(size_t)j]);
            if (j == r - 1)
                aj /= w_head; // tail weight m!/(alpha+1)_m
            level[(size_t)j] = aj;
        }
        cplx g = level[(size_t)r - 1];
        total.add(g);
        sum_abs += std::abs(g);
        for (int j = 0; j + 1 < r; ++j)
            prefix[(size_t)j].add(level[(size_t)j]);
        if (chk_idx < (size_t)kCheckpoints && m == chk[chk_idx])
            samples[chk_idx++] = {(double)m, g};
    }

    bool resonant = near_integer(alpha);
    cplx s_base((double)k.parts().back(), 0.0);
    TailResult tail = fitted_tail(samples, s_base, !resonant, s_base + alpha);

    ComplexEstimate est;
    est.value = total.value() + tail.correction;
    est.error_bound = tail.error + 1e-14 * (sum_abs + std::abs(est.value)) + 1e-300;
    return est;
}

ComplexEstimate eval_hurwitz(const Composition& k, cplx alpha, HurwitzVariant variant,
                             const NumericOptions& opts) {
    if (!k.admissible())
        throw std::domain_error("series diverges: last exponent must be >= 2");
    require_alpha_domain(alpha);
    int r = k.depth();
    if (r == 0)
        return {cplx(1.0, 0.0), 0.0};

    const long long n = std::max<long long>(opts.trunc_n, 64);
    const auto chk = checkpoints(n);
    TailSamples samples{};
    size_t chk_idx = 0;

    std::vector<Kahan> prefix((size_t)r > 1 ? (size_t)(r - 1) : 0);
    std::vector<cplx> level((size_t)r);
    Kahan total;
    double sum_abs = 0.0;

    for (long long m = 1; m <= n; ++m) {
        cplx inv = 1.0 / ((double)m + alpha);
        if (variant == HurwitzVariant::strict) {
            level[0] = pow_int(inv, k.parts()[0]);
            for (int j = 1; j < r; ++j)
                level[(size_t)j] = prefix[(size_t)j - 1].value() * pow_int(inv, k.parts()[(size_t)j]);
            for (int j = 0; j + 1 < r; ++j)
                prefix[(size_t)j].add(level[(size_t)j]);
        } else { // weak: inclusive prefixes, updated before use
            level[0] = pow_int(inv, k.parts()[0]);
            for (int j = 0; j < r; ++j) {
                if (j > 0)
                    level[(size_t)j] = prefix[(size_t)j - 1].value() * pow_int(inv, k.parts()[(size_t)j]);
                if (j + 1 < r)
                    prefix[(size_t)j].add(level[(size_t)j]);
            }
        }
        cplx g = level[(size_t)r - 1];
        total.add(g);
        sum_abs += std::abs(g);
        if (chk_idx < (size_t)kCheckpoints && m == chk[chk_idx])
            samples[chk_idx++] = {(double)m, g};
    }

    TailResult tail = fitted_tail(samples, cplx((double)k.parts().back(), 0.0), false, {});
    ComplexEstimate est;
    est.value = total.value() + tail.correction;
    est.error_bound = tail.error + 1e-14 * (sum_abs + std::abs(est.value)) + 1e-300;
    return est;
}

ComplexEstimate z_y(cplx alpha, const NumericOptions& opts) {
    require_alpha_domain(alpha);
    if (alpha == 0.0)
        return {cplx(0.0, 0.0), 0.0};

    const long long n = std::max<long long>(opts.trunc_n, 64);
    const auto chk = checkpoints(n);
    TailSamples samples{};
    size_t chk_idx = 0;
    Kahan total;
    double sum_abs = 0.0;
    for (long long m = 1; m <= n; ++m) {
        double md = (double)m;
        cplx g = -alpha / (md * (md + alpha));
        total.add(g);
        sum_abs += std::abs(g);
        if (chk_idx < (size_t)kCheckpoints && m == chk[chk_idx])
            samples[chk_idx++] = {md, g};
    }
    TailResult tail = fitted_tail(samples, cplx(2.0, 0.0), false, {});
    ComplexEstimate est;
    est.value = total.value() + tail.correction;
    est.error_bound = tail.error + 1e-14 * (sum_abs + std::abs(est.value)) + 1e-300;
    return est;
}

ComplexEstimate eval_zstar_reg(const LinComb& u, cplx alpha, const NumericOptions& opts) {
    require_alpha_domain(alpha);
    RegDecomposition reg = harmonic_regularize(u);
    ComplexEstimate zy{{0.0, 0.0}, 0.0};
    bool need_zy = false;
    for (const auto& [j, part] : reg.parts)
        if (j > 0)
            need_zy = true;
    if (need_zy)
        zy = z_y(alpha, opts);

    std::map<Composition, ComplexEstimate> cache;
    ComplexEstimate out;
    for (const auto& [j, part] : reg.parts) {
        cplx part_val{0.0, 0.0};
        double part_err = 0.0;
        for (const auto& [w, c] : part.terms()) {
            auto it = cache.find(w);
            if (it == cache.end())
                it = cache.emplace(w, eval_hurwitz(w, alpha, HurwitzVariant::strict, opts)).first;
            double cd = to_double(c);
            part_val += cd * it->second.value;
            part_err += std::abs(cd) * it->second.error_bound;
        }
        cplx zpow = pow_int(zy.value, j);
        out.value += zpow * part_val;
        double zpow_abs = std::pow(std::abs(zy.value), j);
        out.error_bound += zpow_abs * part_err;
        if (j > 0)
            out.error_bound += (double)j * std::pow(std::abs(zy.value), j - 1) * zy.error_bound *
                               (std::abs(part_val) + part_err);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Iterated-integral quadrature. The double-exponential substitution
// u = 1/(1 + exp(-pi sinh v)) turns each one-form into a smooth density in v;
// every nesting level is one cumulative pass over a shared uniform v-grid.

namespace {

enum class FormKind : std::uint8_t {
    head_inf, // (u/(1-u))^alpha * (-du/(1-u))
    mid_x_inf, // du/(u(1-u))
    mid_y_inf, // -du/(1-u)
    tail_inf, // (u/(1-u))^{-alpha} * du/u
    head_01,  // (t/(1-t))^alpha * dt/(1-t)
    mid_x_01, // dt/t
    mid_y_01, // dt/(1-t)
    tail_01   // ((1-t)/t)^alpha * dt/t
};

struct GridPoint {
    double density;  // pi cosh(v), the dv-Jacobian of 2*tau
    double u;        // logistic(pi sinh v)
    double one_m_u;
    cplx wpos;       // exp(+2 alpha tau)
    cplx wneg;       // exp(-2 alpha tau)
};

cplx form_value(FormKind kind, const GridPoint& p) {
    switch (kind) {
    case FormKind::head_inf:
        return -p.wpos * p.u * p.density;
    case FormKind::mid_x_inf:
        return cplx(p.density, 0.0);
    case FormKind::mid_y_inf:
        return cplx(-p.u * p.density, 0.0);
    case FormKind::tail_inf:
        return p.wneg * p.one_m_u * p.density;
    case FormKind::head_01:
        return p.wpos * p.u * p.density;
    case FormKind::mid_x_01:
        return cplx(p.one_m_u * p.density, 0.0);
    case FormKind::mid_y_01:
        return cplx(p.u * p.density, 0.0);
    case FormKind::tail_01:
        return p.wneg * p.one_m_u * p.density;
    }
    return {0.0, 0.0};
}

// cumulative integral on a uniform grid, cubic (Adams-Moulton style) panels
std::vector<cplx> cumulative(const std::vector<cplx>& g, double h) {
    size_t n = g.size();
    std::vector<cplx> f(n, cplx(0.0, 0.0));
    if (n < 4)
        throw std::logic_error("quadrature grid too small");
    f[1] = f[0] + h / 24.0 * (9.0 * g[0] + 19.0 * g[1] - 5.0 * g[2] + g[3]);
    for (size_t i = 2; i + 1 < n; ++i)
        f[i] = f[i - 1] + h / 24.0 * (-g[i - 2] + 13.0 * g[i - 1] + 13.0 * g[i] - g[i + 1]);
    f[n - 1] = f[n - 2] + h / 24.0 * (9.0 * g[n - 1] + 19.0 * g[n - 2] - 5.0 * g[n - 3] + g[n - 4]);
    return f;
}

cplx run_levels(const std::vector<FormKind>& forms, const std::vector<GridPoint>& pts,
                size_t stride, double h) {
    size_t n = (pts.size() - 1) / stride + 1;
    std::vector<cplx> f(n, cplx(1.0, 0.0)); // multiplicative identity before level 0
    bool first = true;
    for (FormKind kind : forms) {
        std::vector<cplx> g(n);
        for (size_t i = 0; i < n; ++i)
            g[i] = (first ? cplx(1.0, 0.0) : f[i]) * form_value(kind, pts[i * stride]);
        f = cumulative(g, h * (double)stride);
        first = false;
    }
    return f.back();
}

ComplexEstimate integrate_forms(const std::vector<FormKind>& forms, cplx alpha,
                                const NumericOptions& opts) {
    double decay = 2.0 * (1.0 + alpha.real());
    double tau_max = 96.0 / decay;
    double vmax = std::asinh(2.0 * tau_max / kPi);

    int panels = std::max(opts.quad_grid, 1 << 10);
    ComplexEstimate est;
    for (int attempt = 0; attempt < 2; ++attempt) {
        size_t n = (size_t)panels + 1;
        double h = 2.0 * vmax / (double)panels;
        std::vector<GridPoint> pts(n);
        for (size_t i = 0; i < n; ++i) {
            double v = -vmax + (double)i * h;
            double tau = 0.5 * kPi * std::sinh(v);
            GridPoint& p = pts[i];
            p.density = kPi * std::cosh(v);
            // logistic(2 tau), both sides evaluated stably
            if (tau >= 0) {
                double e = std::exp(-2.0 * tau);
                p.u = 1.0 / (1.0 + e);
                p.one_m_u = e / (1.0 + e);
            } else {
                double e = std::exp(2.0 * tau);
                p.u = e / (1.0 + e);
                p.one_m_u = 1.0 / (1.0 + e);
            }
            p.wpos = std::exp(2.0 * alpha * tau);
            p.wneg = 1.0 / p.wpos;
        }
        cplx fine = run_levels(forms, pts, 1, h);
        cplx coarse = run_levels(forms, pts, 2, h);
        est.value = fine;
        est.error_bound = std::abs(fine - coarse) + 1e-13 * (1.0 + std::abs(fine));
        if (est.error_bound <= opts.quad_tol || attempt == 1)
            break;
        panels *= 4;
    }
    return est;
}

ComplexEstimate quadrature_word_inf(const Composition& w, cplx alpha, const NumericOptions& opts) {
    if (w.weight() > 6)
        throw std::length_error("quadrature depth cap: weight must be <= 6");
    XYWord xy = to_xy(w);
    std::vector<FormKind> forms;
    forms.push_back(FormKind::head_inf);
    for (size_t i = 1; i < xy.letters().size(); ++i)
        forms.push_back(xy.letters()[i] == Letter::x ? FormKind::mid_x_inf : FormKind::mid_y_inf);
    forms.push_back(FormKind::tail_inf);
    return integrate_forms(forms, alpha, opts);
}

} // namespace

ComplexEstimate eval_K(const LinComb& w, cplx alpha, KMethod method, const NumericOptions& opts) {
    if (has_constant_term(w))
        throw std::domain_error("K is defined on yH only (constant term present)");
    if (method == KMethod::lemma_key) {
        require_alpha_domain(alpha);
        return eval_zstar_reg(psi_map(w), alpha, opts);
    }
    if (!(alpha.real() > 0.0))
        throw std::domain_error("quadrature route requires Re alpha > 0 (endpoint divergence)");
    ComplexEstimate out;
    for (const auto& [word, c] : w.terms()) {
        ComplexEstimate e = quadrature_word_inf(word, alpha, opts);
        double cd = to_double(c);
        out.value += cd * e.value;
        out.error_bound += std::abs(cd) * e.error_bound;
    }
    return out;
}

ComplexEstimate eval_L_quadrature(const Composition& k, cplx alpha, const NumericOptions& opts) {
    if (!k.admissible() || k.empty())
        throw std::domain_error("eval_L_quadrature needs a nonempty admissible word");
    if (!(alpha.real() > -1.0 && alpha.real() < 1.0))
        throw std::domain_error("eval_L_quadrature requires Re alpha in (-1,1)");
    if (k.weight() > 6)
        throw std::length_error("quadrature weight cap: weight must be <= 6");
    XYWord xy = to_xy(k);
    std::vector<FormKind> forms;
    forms.push_back(FormKind::head_01);
    for (size_t i = 1; i + 1 < xy.letters().size(); ++i)
        forms.push_back(xy.letters()[i] == Letter::x ? FormKind::mid_x_01 : FormKind::mid_y_01);
    forms.push_back(FormKind::tail_01);
    return integrate_forms(forms, alpha, opts);
}

Eq3Report verify_eq3(const Composition& w, cplx alpha, int order, double tol,
                     const NumericOptions& opts) {
    require_alpha_domain(alpha);
    Eq3Report rep;
    rep.lhs = eval_K(LinComb(w), alpha, KMethod::lemma_key, opts);
    cplx acc{0.0, 0.0};
    double err = 0.0;
    double last_term = 0.0;
    cplx power{1.0, 0.0};
    for (int m = 0; m <= order; ++m) {
        LinComb sm = sigma_map(m, LinComb(w));
        ComplexEstimate v = eval_K(sm, 0.0, KMethod::lemma_key, opts);
        acc += power * v.value;
        err += std::abs(power) * v.error_bound;
        last_term = std::abs(power * v.value);
        power *= -alpha;
    }
    rep.rhs = {acc, err};
    rep.residual = std::abs(rep.lhs.value - rep.rhs.value);
    double q = std::min(std::abs(alpha) * 1.5, 0.9); // growth of sigma coefficients
    rep.allowance = tol + last_term * q / (1.0 - q);
    rep.passed = rep.residual <= rep.allowance;
    return rep;
}

KyxReport verify_lemma_kyx(const Composition& k, double tol, const NumericOptions& opts) {
    if (k.empty() || k.weight() > 5)
        throw std::domain_error("verify_lemma_kyx needs a nonempty word of weight <= 5");
    KyxReport rep;

    // LHS: L_0(S beta(w) x); appending x increments the last exponent
    LinComb sb = head_fixed_map(HeadMapName::S, head_fixed_map(HeadMapName::beta, LinComb(k)));
    cplx lhs{0.0, 0.0};
    double lhs_err = 0.0;
    for (const auto& [w, c] : sb.terms()) {
        Composition wx = w.drop_last().append(w.parts().back() + 1);
        ComplexEstimate e = eval_pms(wx, 0.0, opts);
        double cd = to_double(c);
        lhs += cd * e.value;
        lhs_err += std::abs(cd) * e.error_bound;
    }
    rep.lhs = {lhs, lhs_err};

    // RHS: sum_{i=0}^{r} (-1)^{r-i+1} Zstar_star(prefix) Zstar(sigma_1(rev suffix))
    int r = k.depth();
    cplx rhs{0.0, 0.0};
    double rhs_err = 0.0;
    for (int i = 0; i <= r; ++i) {
        LinComb suff = sigma_map(1, LinComb(k.suffix_reversed(i)));
        if (suff.is_zero())
            continue;
        ComplexEstimate star =
            eval_zstar_reg(head_fixed_map(HeadMapName::S, LinComb(k.prefix(i))), 0.0, opts);
        ComplexEstimate plain = eval_zstar_reg(suff, 0.0, opts);
        double sign = ((r - i + 1) % 2 == 0) ? 1.0 : -1.0;
        rhs += sign * star.value * plain.value;
        rhs_err += std::abs(star.value) * plain.error_bound +
                   std::abs(plain.value) * star.error_bound + star.error_bound * plain.error_bound;
    }
    rep.rhs = {rhs, rhs_err};
    rep.residual = std::abs(rep.lhs.value - rep.rhs.value);
    rep.passed = rep.residual < tol;
    return rep;
}

Theorem1Report verify_theorem1(const Composition& w1, const Composition& w2, cplx alpha,
                               double tol, const NumericOptions& opts) {
    if (w1.empty() || w2.empty())
        throw std::domain_error("theorem 1 needs words in yH");
    Theorem1Report rep;
    rep.tol = tol;
    LinComb prod = stuffle(LinComb(w1), LinComb(w2));
    rep.symbolic_zero = psi_map(prod).is_zero();
    rep.passed = rep.symbolic_zero;
    if (alpha.real() > 0.0 && w1.weight() + w2.weight() <= 4) {
        rep.quadrature_ran = true;
        rep.quadrature = eval_K(prod, alpha, KMethod::quadrature, opts);
        rep.passed = rep.passed && std::abs(rep.quadrature.value) < tol;
    }
    return rep;
}

} // namespace pmskit
