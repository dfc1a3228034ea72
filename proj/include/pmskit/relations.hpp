#ifndef PMSKIT_RELATIONS_HPP
#define PMSKIT_RELATIONS_HPP

#include <string>
#include <tuple>
#include <vector>

#include "pmskit/algebra.hpp"
#include "pmskit/linalg.hpp"

namespace pmskit {

enum class KernelMap { psi, psi_bar, rho };
enum class ProductKind { stuffle, tshuffle };

// Exact nullspace of the map restricted to the weight slice of yH.
Subspace<Composition> kernel_of(KernelMap map, int weight);

// span{ u <prod> v : u,v words in yH, weights positive, summing to the slice }
Subspace<Composition> product_span(ProductKind product, int weight);

struct KernelEqualityReport {
    int weight = 0;
    size_t dim_slice = 0;
    size_t dim_kernel = 0;
    size_t dim_span = 0;
    bool kernel_in_span = false;
    bool span_in_kernel = false;
    bool equal = false;
};

// mutual exact containment plus dimension equality of ker psi and the
// stuffle span on the weight slice
KernelEqualityReport verify_kernel_equality(int weight);

struct ContainmentReport {
    int weight = 0;
    size_t dim_ker_rho = 0;
    size_t dim_ker_psi_bar = 0;
    size_t dim_sh_span = 0;
    bool rho_in_sh_span = false;
    bool psi_bar_in_rho = false;
    bool psi_bar_in_sh_span = false;
    bool all_hold = false;
};

ContainmentReport containment_checks(int weight);

// One level replaces the top-depth part by stuffle products; replaying
// sum coeff * (u * v) over all levels reproduces the input element.
struct DecompositionLevel {
    std::vector<std::tuple<Composition, Composition, Rational>> pairs;
};

struct DecompositionCertificate {
    LinComb input;
    std::vector<DecompositionLevel> levels;
};

// Constructive membership of ker psi elements in yH * yH by depth induction.
// Throws std::domain_error when psi(u) != 0.
DecompositionCertificate decompose_kernel_element(const LinComb& u);

LinComb replay(const DecompositionCertificate& cert);

struct DimsRow {
    int weight = 0;
    size_t dim_slice = 0;
    size_t dim_kernel = 0;
    size_t dim_span = 0;
    bool equal = false;
};

std::vector<DimsRow> dims_table(int max_weight);

// Exact intersection of span{phi(u*v)x : wt(u)+wt(v) = weight-1} with the
// yHx slice, expressed over admissible compositions.
Subspace<Composition> phi_span_intersect_domain(int weight);

} // namespace pmskit

#endif
