#ifndef PMSKIT_LIE_HPP
#define PMSKIT_LIE_HPP

#include <vector>

#include "pmskit/lincomb.hpp"

namespace pmskit {

// Polynomials in the noncommuting letters X_1, X_2, ...; a word X_{k_1}...X_{k_r}
// is stored as the index sequence (k_1,...,k_r). No constant terms arise here.
using XPoly = SparseComb<Composition>;

// [X_{k_1},[X_{k_2},[...,[X_{k_{r-1}},X_{k_r}]...]]] fully expanded.
XPoly nested_bracket(const Composition& k);

// sum_{i=1}^{r} (-1)^{r-i} sum over bijections with
// sigma(1)<...<sigma(i-1)<sigma(i)>sigma(i+1)>...>sigma(r) of X_{k_sigma(1)}...X_{k_sigma(r)};
// equals nested_bracket(k).
XPoly descent_expansion(const Composition& k);

// Kronecker pairing <X-word, z-word>, extended bilinearly.
Rational lie_pairing(const XPoly& a, const LinComb& u);

// Nested brackets over all distinct orderings of the multiset of letters.
// Spans the Lie component of the multidegree slice (possibly redundantly).
std::vector<XPoly> lie_spanning_set(std::vector<int> multidegree);

} // namespace pmskit

#endif
