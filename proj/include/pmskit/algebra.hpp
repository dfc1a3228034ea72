#ifndef PMSKIT_ALGEBRA_HPP
#define PMSKIT_ALGEBRA_HPP

#include <utility>
#include <vector>

#include "pmskit/lincomb.hpp"

namespace pmskit {

// --- products -------------------------------------------------------------

// Harmonic (quasi-shuffle) product: z_k u * z_l v =
//   z_k(u * z_l v) + z_l(z_k u * v) + z_{k+l}(u * v), unit 1.
LinComb stuffle(const Composition& a, const Composition& b);
LinComb stuffle(const LinComb& u, const LinComb& v);

// Shuffle of z-letters: the stuffle without the merge term.
LinComb tshuffle(const Composition& a, const Composition& b);
LinComb tshuffle(const LinComb& u, const LinComb& v);

// Letterwise shuffle on {x,y} words.
XYComb shuffle_xy(const XYWord& a, const XYWord& b);
XYComb shuffle_xy(const XYComb& u, const XYComb& v);

// j-fold stuffle power of y = z_1 (j >= 0; the 0th power is the unit)
LinComb stuffle_power_y(int j);

// componentwise stuffle on tensors: (a(x)b)*(c(x)d) = (a*c)(x)(b*d)
TensorComb tensor_stuffle(const TensorComb& s, const TensorComb& t);

// --- linear maps ------------------------------------------------------------

enum class RingMapName { phi, d }; // phi: x->x, y->x+y; d: x->x, y->-y
XYComb ring_map(RingMapName name, const XYComb& u);

enum class HeadMapName { S, beta, Stilde }; // fix 1, yw -> y g(w); Stilde = S o d
LinComb head_fixed_map(HeadMapName name, const LinComb& u);

// sigma_m: 1 -> delta_{m,0}, yw -> y(w sh x^m)
LinComb sigma_map(int m, const LinComb& u);
AlphaSeries sigma_series(const LinComb& u, int order);

// z_{k_1}...z_{k_r} -> sum_i z_{k_1}...z_{k_i} (x) z_{k_r}...z_{k_{i+1}};
// the second factor is the reversed suffix.
TensorComb coproduct(const LinComb& u);

// psi(w) = sum_{i=0}^{r-1} prefix_i * Stilde(sigma_1(reversed suffix_i)).
// Requires no constant term; the result is checked to lie in yHx.
LinComb psi_map(const LinComb& u);

// psi_bar(w) = sum_{i=0}^{r-1} (-1)^{r-i} prefix_i tsh sigma_1(reversed suffix_i)
LinComb psi_bar_map(const LinComb& u);

// rho(w) = sum_{i=1}^{r} (-1)^{r-i} (prefix_{i-1} tsh reversed suffix_{i+1}) z_{k_i}
LinComb rho_map(const LinComb& u);

enum class IotaVariant { paper, prime };
// paper: w z_l -> l * w z_{l+1};  prime: w z_l -> -1/(l-1) * w z_{l-1}, l >= 2
LinComb iota_map(IotaVariant variant, const LinComb& u);

// lambda(w) = sum_m alpha^m sum_{i=0}^{r} prefix_i * Stilde(sigma_m(reversed suffix_i))
AlphaSeries lambda_truncated(const LinComb& u, int order);

// truncated product of alpha-series with the stuffle on coefficients
AlphaSeries series_stuffle(const AlphaSeries& a, const AlphaSeries& b);

// --- harmonic regularization ------------------------------------------------

// u = sum_j y^{*j} * w_j with every w_j supported on admissible words.
struct RegDecomposition {
    // (j, w_j) sorted by j; zero w_j never stored
    std::vector<std::pair<int, LinComb>> parts;
};

RegDecomposition harmonic_regularize(const LinComb& u);

// re-expansion sum_j y^{*j} * w_j; equals the regularized input exactly
LinComb reg_expand(const RegDecomposition& reg);

} // namespace pmskit

#endif
