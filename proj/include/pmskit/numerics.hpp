#ifndef PMSKIT_NUMERICS_HPP
#define PMSKIT_NUMERICS_HPP

#include <complex>
#include <string>

#include "pmskit/algebra.hpp"

namespace pmskit {

// Complex value plus a conservative absolute error bound covering series
// truncation, tail modelling and quadrature discretization.
struct ComplexEstimate {
    std::complex<double> value{0.0, 0.0};
    double error_bound = 0.0;
};

struct NumericOptions {
    long long trunc_n = 1'000'000; // summation cutoff for nested series
    double quad_tol = 1e-9;        // target for the quadrature error estimate
    int order_m = 8;               // default series truncation order
    int quad_grid = 1 << 14;       // quadrature panels (refined once if needed)
    bool deterministic_sum = true; // sequential summation; kept for reproducibility
};

// zeta(s) for integer s >= 2 via Euler-Maclaurin, abs error < 1e-12
double zeta_int(int s);

// Parametrized multiple series with the shifted normalization: the defining
// series is evaluated at parameter alpha+1, so alpha = 0 gives the MZV.
// Requires admissible k and Re alpha > -1.
ComplexEstimate eval_pms(const Composition& k, std::complex<double> alpha,
                         const NumericOptions& opts = {});

enum class HurwitzVariant { strict, weak };

// sum over 0<m_1<...<m_r (strict) or 0<m_1<=...<=m_r (weak) of
// prod (m_i+alpha)^{-k_i}; Euler-Maclaurin tail correction on the outer index.
ComplexEstimate eval_hurwitz(const Composition& k, std::complex<double> alpha,
                             HurwitzVariant variant, const NumericOptions& opts = {});

// regularized value of the single letter y: sum_{m>=1} (1/(m+alpha) - 1/m)
ComplexEstimate z_y(std::complex<double> alpha, const NumericOptions& opts = {});

// Harmonic-regularized evaluation on all of H^1: decompose u = sum y^{*j} * w_j
// and return sum z_y(alpha)^j * (strict Hurwitz value of w_j).
ComplexEstimate eval_zstar_reg(const LinComb& u, std::complex<double> alpha,
                               const NumericOptions& opts = {});

enum class KMethod { lemma_key, quadrature };

// Kawashima-type evaluator K_alpha on yH. lemma_key evaluates the regularized
// series of the psi image; quadrature integrates the weighted iterated
// integral along t/(t-1) (requires Re alpha > 0 and weight <= 6).
ComplexEstimate eval_K(const LinComb& w, std::complex<double> alpha, KMethod method,
                       const NumericOptions& opts = {});

// Direct iterated-integral evaluation on (0,1) of an admissible word with
// the alpha-dependent endpoint weights. Requires Re alpha in (-1,1), weight <= 6.
ComplexEstimate eval_L_quadrature(const Composition& k, std::complex<double> alpha,
                                  const NumericOptions& opts = {});

struct Eq3Report {
    ComplexEstimate lhs;
    ComplexEstimate rhs;
    double residual = 0.0;
    double allowance = 0.0; // tolerance plus geometric tail of the truncation
    bool passed = false;
};

// K_alpha(w) against the alpha-expansion sum_{m<=M} (-alpha)^m K_0(sigma_m(w))
Eq3Report verify_eq3(const Composition& w, std::complex<double> alpha, int order,
                     double tol, const NumericOptions& opts = {});

struct KyxReport {
    ComplexEstimate lhs;
    ComplexEstimate rhs;
    double residual = 0.0;
    bool passed = false;
};

// L_0(S beta(w) x) against the alternating weak/strict product sum
KyxReport verify_lemma_kyx(const Composition& k, double tol, const NumericOptions& opts = {});

struct Theorem1Report {
    bool symbolic_zero = false;
    bool quadrature_ran = false;
    ComplexEstimate quadrature;
    double tol = 0.0;
    bool passed = false;
};

// psi(w1 * w2) = 0 exactly; when Re alpha > 0 and the weights allow it,
// also |K_alpha(w1 * w2)| < tol by quadrature.
Theorem1Report verify_theorem1(const Composition& w1, const Composition& w2,
                               std::complex<double> alpha, double tol,
                               const NumericOptions& opts = {});

} // namespace pmskit

#endif
