#include "pmskit/json_io.hpp"

#include <stdexcept>

namespace pmskit {

json word_json(const Composition& w) {
    json a = json::array();
    for (int k : w.parts())
        a.push_back(k);
    return a;
}

json to_json(const LinComb& u) {
    json terms = json::array();
    for (const auto& [w, c] : u.terms())
        terms.push_back({{"coef", to_string(c)}, {"word", word_json(w)}});
    return {{"terms", terms}};
}

json to_json(const TensorComb& t) {
    json terms = json::array();
    for (const auto& [p, c] : t.terms())
        terms.push_back({{"coef", to_string(c)},
                         {"left", word_json(p.left)},
                         {"right", word_json(p.right)}});
    return {{"terms", terms}};
}

json to_json(const ComplexEstimate& e) {
    return {{"re", e.value.real()}, {"im", e.value.imag()}, {"err", e.error_bound}};
}

json to_json(const Subspace<Composition>& s) {
    json ambient = json::array();
    for (const Composition& w : s.ambient())
        ambient.push_back(word_json(w));
    json basis = json::array();
    for (size_t r = 0; r < s.dim(); ++r)
        basis.push_back(to_json(s.element(r))["terms"]);
    return {{"ambient", ambient}, {"dim", s.dim()}, {"basis", basis}};
}

json to_json(const RegDecomposition& reg) {
    json parts = json::array();
    for (const auto& [j, comb] : reg.parts)
        parts.push_back({{"y_power", j}, {"admissible_part", to_json(comb)["terms"]}});
    return {{"parts", parts}};
}

json to_json(const KernelEqualityReport& rep) {
    return {{"weight", rep.weight},
            {"dim_slice", rep.dim_slice},
            {"dim_kernel", rep.dim_kernel},
            {"dim_span", rep.dim_span},
            {"kernel_in_span", rep.kernel_in_span},
            {"span_in_kernel", rep.span_in_kernel},
            {"equal", rep.equal}};
}

json to_json(const ContainmentReport& rep) {
    return {{"weight", rep.weight},
            {"dim_ker_rho", rep.dim_ker_rho},
            {"dim_ker_psi_bar", rep.dim_ker_psi_bar},
            {"dim_sh_span", rep.dim_sh_span},
            {"rho_in_sh_span", rep.rho_in_sh_span},
            {"psi_bar_in_rho", rep.psi_bar_in_rho},
            {"psi_bar_in_sh_span", rep.psi_bar_in_sh_span},
            {"all_hold", rep.all_hold}};
}

json to_json(const DecompositionCertificate& cert) {
    json levels = json::array();
    for (const DecompositionLevel& level : cert.levels) {
        json pairs = json::array();
        for (const auto& [u, v, c] : level.pairs)
            pairs.push_back({{"coef", to_string(c)},
                             {"left", word_json(u)},
                             {"right", word_json(v)}});
        levels.push_back(pairs);
    }
    return {{"input", to_json(cert.input)["terms"]}, {"levels", levels}};
}

json to_json(const std::vector<DimsRow>& rows) {
    json out = json::array();
    for (const DimsRow& r : rows)
        out.push_back({{"weight", r.weight},
                       {"dim_slice", r.dim_slice},
                       {"dim_kernel", r.dim_kernel},
                       {"dim_span", r.dim_span},
                       {"equal", r.equal}});
    return out;
}

json to_json(const Eq3Report& rep) {
    return {{"lhs", to_json(rep.lhs)},
            {"rhs", to_json(rep.rhs)},
            {"residual", rep.residual},
            {"allowance", rep.allowance},
            {"passed", rep.passed}};
}

json to_json(const KyxReport& rep) {
    return {{"lhs", to_json(rep.lhs)},
            {"rhs", to_json(rep.rhs)},
            {"residual", rep.residual},
            {"passed", rep.passed}};
}

json to_json(const Theorem1Report& rep) {
    json out = {{"symbolic_zero", rep.symbolic_zero},
                {"quadrature_ran", rep.quadrature_ran},
                {"tol", rep.tol},
                {"passed", rep.passed}};
    if (rep.quadrature_ran)
        out["quadrature"] = to_json(rep.quadrature);
    return out;
}

namespace {

void skip_space(const std::string& s, size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
        ++i;
}

} // namespace

LinComb parse_lincomb(const std::string& text) {
    LinComb out;
    size_t i = 0;
    skip_space(text, i);
    if (i == text.size())
        return out;
    bool first = true;
    while (i < text.size()) {
        Rational sign = make_rational(1);
        skip_space(text, i);
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-')
                sign = make_rational(-1);
            ++i;
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' at position " + std::to_string(i));
        }
        first = false;
        skip_space(text, i);

        // optional coefficient followed by '*'
        Rational coef = make_rational(1);
        size_t j = i;
        while (j < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/'))
            ++j;
        size_t k = j;
        skip_space(text, k);
        if (k < text.size() && text[k] == '*') {
            coef = rational_from_string(text.substr(i, j - i));
            i = k + 1;
            skip_space(text, i);
        }

        // word: "(1,2)" or bare "1,2"
        std::string word_text;
        if (i < text.size() && text[i] == '(') {
            size_t close = text.find(')', i);
            if (close == std::string::npos)
                throw std::invalid_argument("unbalanced parenthesis in element literal");
            word_text = text.substr(i + 1, close - i - 1);
            i = close + 1;
        } else {
            size_t end = i;
            while (end < text.size() && text[end] != '+' && text[end] != '-' &&
                   !std::isspace(static_cast<unsigned char>(text[end])))
                ++end;
            word_text = text.substr(i, end - i);
            i = end;
        }
        auto parsed = parse_word(word_text);
        if (std::holds_alternative<XYWord>(parsed))
            out.add(to_composition(std::get<XYWord>(parsed)), sign * coef);
        else
            out.add(std::get<Composition>(parsed), sign * coef);
        skip_space(text, i);
    }
    return out;
}

} // namespace pmskit
