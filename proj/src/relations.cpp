#include "pmskit/relations.hpp"

#include <map>
#include <stdexcept>

namespace pmskit {

namespace {

LinComb apply_kernel_map(KernelMap map, const LinComb& u) {
    switch (map) {
    case KernelMap::psi:
        return psi_map(u);
    case KernelMap::psi_bar:
        return psi_bar_map(u);
    case KernelMap::rho:
        return rho_map(u);
    }
    throw std::invalid_argument("unknown kernel map");
}

int target_weight(KernelMap map, int weight) {
    return map == KernelMap::rho ? weight : weight + 1; // sigma_1 raises weight
}

// columns = source words, rows = target words
RatMatrix map_matrix(KernelMap map, const std::vector<Composition>& source,
                     const std::vector<Composition>& target) {
    std::map<Composition, size_t> index;
    for (size_t i = 0; i < target.size(); ++i)
        index.emplace(target[i], i);
    RatMatrix m(target.size(), source.size());
    for (size_t j = 0; j < source.size(); ++j) {
        LinComb image = apply_kernel_map(map, LinComb(source[j]));
        for (const auto& [w, c] : image.terms())
            m.at(index.at(w), j) = c;
    }
    return m;
}

// unordered pairs (u, v) of yH words with positive weights summing to `weight`
std::vector<std::pair<Composition, Composition>> product_pairs(int weight) {
    std::vector<std::pair<Composition, Composition>> pairs;
    for (int a = 1; 2 * a <= weight; ++a) {
        std::vector<Composition> left = enumerate_words(a, WordSpace::yH);
        std::vector<Composition> right = enumerate_words(weight - a, WordSpace::yH);
        for (const Composition& u : left)
            for (const Composition& v : right) {
                if (a * 2 == weight && v < u)
                    continue;
                pairs.emplace_back(u, v);
            }
    }
    return pairs;
}

} // namespace

Subspace<Composition> kernel_of(KernelMap map, int weight) {
    if (weight < 1)
        throw std::domain_error("kernel_of needs weight >= 1");
    std::vector<Composition> source = enumerate_words(weight, WordSpace::yH);
    std::vector<Composition> target = enumerate_words(target_weight(map, weight), WordSpace::yH);
    RatMatrix null = nullspace(map_matrix(map, source, target));
    return Subspace<Composition>(std::move(source), std::move(null));
}

Subspace<Composition> product_span(ProductKind product, int weight) {
    std::vector<Composition> ambient = enumerate_words(weight, WordSpace::yH);
    std::vector<LinComb> gens;
    if (weight >= 2)
        for (const auto& [u, v] : product_pairs(weight))
            gens.push_back(product == ProductKind::stuffle ? stuffle(LinComb(u), LinComb(v))
                                                           : tshuffle(LinComb(u), LinComb(v)));
    return Subspace<Composition>::span(std::move(ambient), gens);
}

KernelEqualityReport verify_kernel_equality(int weight) {
    if (weight < 2)
        throw std::domain_error("verify_kernel_equality needs weight >= 2");
    KernelEqualityReport rep;
    rep.weight = weight;
    Subspace<Composition> ker = kernel_of(KernelMap::psi, weight);
    Subspace<Composition> span = product_span(ProductKind::stuffle, weight);
    rep.dim_slice = ker.ambient().size();
    rep.dim_kernel = ker.dim();
    rep.dim_span = span.dim();
    rep.kernel_in_span = span.contains_subspace(ker);
    rep.span_in_kernel = ker.contains_subspace(span);
    rep.equal = rep.kernel_in_span && rep.span_in_kernel && rep.dim_kernel == rep.dim_span;
    return rep;
}

ContainmentReport containment_checks(int weight) {
    if (weight < 1)
        throw std::domain_error("containment_checks needs weight >= 1");
    ContainmentReport rep;
    rep.weight = weight;
    Subspace<Composition> ker_rho = kernel_of(KernelMap::rho, weight);
    Subspace<Composition> ker_pb = kernel_of(KernelMap::psi_bar, weight);
    Subspace<Composition> sh_span = product_span(ProductKind::tshuffle, weight);
    rep.dim_ker_rho = ker_rho.dim();
    rep.dim_ker_psi_bar = ker_pb.dim();
    rep.dim_sh_span = sh_span.dim();
    rep.rho_in_sh_span = sh_span.contains_subspace(ker_rho);
    rep.psi_bar_in_rho = ker_rho.contains_subspace(ker_pb);
    rep.psi_bar_in_sh_span = sh_span.contains_subspace(ker_pb);
    rep.all_hold = rep.rho_in_sh_span && rep.psi_bar_in_rho && rep.psi_bar_in_sh_span;
    return rep;
}

DecompositionCertificate decompose_kernel_element(const LinComb& u) {
    if (!psi_map(u).is_zero())
        throw std::domain_error("element is not in ker psi");
    DecompositionCertificate cert;
    cert.input = u;

    LinComb current = u;
    while (!current.is_zero()) {
        int d = max_depth(current);
        LinComb top = depth_part(current, d);
        std::optional<int> w = homogeneous_weight(top);
        if (!w)
            throw std::domain_error("decompose_kernel_element needs weight-homogeneous input");

        // pairs with matching depth sum: the tilde-shuffle is depth graded
        std::vector<std::pair<Composition, Composition>> pairs;
        for (const auto& p : product_pairs(*w))
            if (p.first.depth() + p.second.depth() == d)
                pairs.push_back(p);

        std::vector<Composition> ambient = enumerate_words(*w, WordSpace::yH);
        std::map<Composition, size_t> index;
        for (size_t i = 0; i < ambient.size(); ++i)
            index.emplace(ambient[i], i);
        RatMatrix m(ambient.size(), pairs.size());
        for (size_t j = 0; j < pairs.size(); ++j) {
            LinComb g = tshuffle(LinComb(pairs[j].first), LinComb(pairs[j].second));
            for (const auto& [word, c] : g.terms())
                m.at(index.at(word), j) = c;
        }
        std::vector<Rational> rhs(ambient.size());
        for (const auto& [word, c] : top.terms())
            rhs[index.at(word)] = c;

        auto sol = solve_particular(m, rhs);
        if (!sol)
            throw std::logic_error("top-depth part not in the tilde-shuffle span");

        DecompositionLevel level;
        LinComb subtracted;
        for (size_t j = 0; j < pairs.size(); ++j) {
            if ((*sol)[j] == 0)
                continue;
            level.pairs.emplace_back(pairs[j].first, pairs[j].second, (*sol)[j]);
            LinComb prod = stuffle(LinComb(pairs[j].first), LinComb(pairs[j].second));
            prod *= (*sol)[j];
            subtracted += prod;
        }
        cert.levels.push_back(std::move(level));
        current -= subtracted;
        if (!current.is_zero() && max_depth(current) >= d)
            throw std::logic_error("depth did not decrease in kernel decomposition");
    }
    return cert;
}

LinComb replay(const DecompositionCertificate& cert) {
    LinComb out;
    for (const DecompositionLevel& level : cert.levels)
        for (const auto& [u, v, c] : level.pairs) {
            LinComb prod = stuffle(LinComb(u), LinComb(v));
            prod *= c;
            out += prod;
        }
    return out;
}

std::vector<DimsRow> dims_table(int max_weight) {
    if (max_weight < 2)
        throw std::domain_error("dims_table needs max_weight >= 2");
    std::vector<DimsRow> rows;
    for (int w = 1; w <= max_weight; ++w) {
        DimsRow row;
        row.weight = w;
        row.dim_slice = enumerate_words(w, WordSpace::yH).size();
        if (w >= 2) {
            KernelEqualityReport rep = verify_kernel_equality(w);
            row.dim_kernel = rep.dim_kernel;
            row.dim_span = rep.dim_span;
            row.equal = rep.equal;
        } else {
            row.dim_kernel = kernel_of(KernelMap::psi, 1).dim();
            row.dim_span = 0;
            row.equal = row.dim_kernel == 0;
        }
        rows.push_back(row);
    }
    return rows;
}

Subspace<Composition> phi_span_intersect_domain(int weight) {
    if (weight < 3)
        throw std::domain_error("phi_span_intersect_domain needs weight >= 3");

    std::vector<XYWord> ambient = enumerate_xy_words(weight, /*ends_with_x=*/true);
    std::vector<XYComb> gens;
    for (const auto& [u, v] : product_pairs(weight - 1)) {
        XYComb g = ring_map(RingMapName::phi, xy_form(stuffle(LinComb(u), LinComb(v))));
        XYComb with_x;
        for (const auto& [w, c] : g.terms())
            with_x.add(w.append(Letter::x), c);
        gens.push_back(std::move(with_x));
    }

    // rowspace basis of the generating set
    Subspace<XYWord> span = Subspace<XYWord>::span(ambient, gens);

    // intersect with the coordinate subspace of y-leading words:
    // left kernel of the x-leading block picks out the members
    std::vector<size_t> x_cols;
    for (size_t j = 0; j < ambient.size(); ++j)
        if (!ambient[j].starts_with_y())
            x_cols.push_back(j);

    RatMatrix bx_t(x_cols.size(), span.dim()); // transpose of the x-leading block
    for (size_t i = 0; i < x_cols.size(); ++i)
        for (size_t r = 0; r < span.dim(); ++r)
            bx_t.at(i, r) = span.basis().at(r, x_cols[i]);
    RatMatrix combos = nullspace(bx_t);

    std::vector<Composition> z_ambient = enumerate_words(weight, WordSpace::yHx);
    std::vector<LinComb> members;
    for (size_t i = 0; i < combos.rows(); ++i) {
        XYComb elem;
        for (size_t r = 0; r < span.dim(); ++r) {
            if (combos.at(i, r) == 0)
                continue;
            for (size_t j = 0; j < ambient.size(); ++j)
                elem.add(ambient[j], combos.at(i, r) * span.basis().at(r, j));
        }
        members.push_back(z_form(elem)); // x-leading coordinates cancelled exactly
    }
    return Subspace<Composition>::span(std::move(z_ambient), members);
}

} // namespace pmskit
