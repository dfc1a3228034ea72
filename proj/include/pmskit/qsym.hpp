#ifndef PMSKIT_QSYM_HPP
#define PMSKIT_QSYM_HPP

#include <map>
#include <string>
#include <vector>

#include "pmskit/lincomb.hpp"

namespace pmskit {

// Polynomial in t_1..t_n with rational coefficients, exponent vectors stored
// sparsely. Truncation of the quasisymmetric-function realization: identities
// of depth d are faithful once n >= d.
class QSymPoly {
public:
    QSymPoly() = default;
    explicit QSymPoly(int nvars) : nvars_(nvars) {}

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

    void add(const std::vector<int>& expo, const Rational& c);
    Rational coefficient(const std::vector<int>& expo) const;

    QSymPoly& operator+=(const QSymPoly& o);
    QSymPoly& operator*=(const Rational& s);
    friend QSymPoly operator+(QSymPoly a, const QSymPoly& b) { return a += b; }
    friend QSymPoly operator-(QSymPoly a, const QSymPoly& b);
    friend bool operator==(const QSymPoly&, const QSymPoly&) = default;

    std::string to_string() const;

private:
    int nvars_ = 0;
    std::map<std::vector<int>, Rational> terms_;
};

// Monomial quasisymmetric expansion of u in n variables:
//   z_{k_1}...z_{k_r} -> sum_{0<m_1<...<m_r<=n} t_{m_1}^{k_1}...t_{m_r}^{k_r}.
// Throws std::domain_error when n < max depth of u (slice no longer faithful).
QSymPoly phi_qsym(const LinComb& u, int nvars);

// plain commutative product; operands must share nvars
QSymPoly qsym_product(const QSymPoly& p, const QSymPoly& q);

// Right-hand side of the closed-form expansion of Phi(psi(w)):
//   sum_{j=1}^{r} k_j (-1)^{r-j+1} sum_{0<m_1<...<m_j, 0<m_r<=...<=m_j}
//     t_{m_1}^{k_1}...t_{m_r}^{k_r} * t_{m_j}
QSymPoly ttt_rhs(const Composition& k, int nvars);

} // namespace pmskit

#endif
