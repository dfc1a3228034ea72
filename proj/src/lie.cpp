#include "pmskit/lie.hpp"

#include <algorithm>
#include <stdexcept>

namespace pmskit {

namespace {

XPoly xword_product(const XPoly& a, const XPoly& b) {
    XPoly out;
    for (const auto& [u, cu] : a.terms())
        for (const auto& [v, cv] : b.terms())
            out.add(u.concat(v), cu * cv);
    return out;
}

XPoly bracket(const XPoly& a, const XPoly& b) {
    return xword_product(a, b) - xword_product(b, a);
}

} // namespace

XPoly nested_bracket(const Composition& k) {
    int r = k.depth();
    if (r == 0)
        throw std::domain_error("nested_bracket needs a nonempty composition");
    XPoly acc{Composition({k.parts().back()})};
    for (int i = r - 2; i >= 0; --i)
        acc = bracket(XPoly(Composition({k.parts()[static_cast<size_t>(i)]})), acc);
    return acc;
}

XPoly descent_expansion(const Composition& k) {
    int r = k.depth();
    if (r == 0)
        throw std::domain_error("descent_expansion needs a nonempty composition");
    XPoly out;
    // unimodal bijections: ascending prefix, peak at position i (value r),
    // descending tail; encoded by the subset taken ascending.
    for (std::uint32_t mask = 0; mask < (1u << (r - 1)); ++mask) {
        std::vector<int> word;
        word.reserve(static_cast<size_t>(r));
        int picked = 0;
        for (int p = 0; p < r - 1; ++p)
            if (mask & (1u << p)) {
                word.push_back(k.parts()[static_cast<size_t>(p)]);
                ++picked;
            }
        word.push_back(k.parts().back());
        for (int p = r - 2; p >= 0; --p)
            if (!(mask & (1u << p)))
                word.push_back(k.parts()[static_cast<size_t>(p)]);
        int i = picked + 1; // peak position
        Rational sign = ((r - i) % 2 == 0) ? make_rational(1) : make_rational(-1);
        out.add(Composition(std::move(word)), sign);
    }
    return out;
}

Rational lie_pairing(const XPoly& a, const LinComb& u) {
    Rational acc(0);
    // <X_{k_1}...X_{k_r}, z_{l_1}...z_{l_s}> = delta_{(k),(l)}
    for (const auto& [w, c] : a.terms()) {
        Rational m = u.coefficient(w);
        if (m != 0)
            acc += c * m;
    }
    return acc;
}

std::vector<XPoly> lie_spanning_set(std::vector<int> multidegree) {
    if (multidegree.empty())
        throw std::domain_error("empty multidegree");
    std::sort(multidegree.begin(), multidegree.end());
    std::vector<XPoly> out;
    do {
        out.push_back(nested_bracket(Composition(multidegree)));
    } while (std::next_permutation(multidegree.begin(), multidegree.end()));
    return out;
}

} // namespace pmskit
