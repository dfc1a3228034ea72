#include "pmskit/qsym.hpp"

#include <functional>
#include <stdexcept>

namespace pmskit {

void QSymPoly::add(const std::vector<int>& expo, const Rational& c) {
    if (c == 0)
        return;
    if (static_cast<int>(expo.size()) != nvars_)
        throw std::domain_error("exponent vector length does not match variable count");
    auto [it, inserted] = terms_.try_emplace(expo, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Rational QSymPoly::coefficient(const std::vector<int>& expo) const {
    auto it = terms_.find(expo);
    return it == terms_.end() ? Rational(0) : it->second;
}

QSymPoly& QSymPoly::operator+=(const QSymPoly& o) {
    if (nvars_ != o.nvars_) {
        if (is_zero())
            nvars_ = o.nvars_;
        else if (!o.is_zero())
            throw std::domain_error("variable count mismatch");
    }
    for (const auto& [e, c] : o.terms_)
        add(e, c);
    return *this;
}

QSymPoly& QSymPoly::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_)
        c *= s;
    return *this;
}

QSymPoly operator-(QSymPoly a, const QSymPoly& b) {
    QSymPoly nb = b;
    nb *= make_rational(-1);
    return a += nb;
}

std::string QSymPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
        if (!s.empty())
            s += " + ";
        s += pmskit::to_string(c);
        for (int i = 0; i < nvars_; ++i)
            if (e[static_cast<size_t>(i)] != 0)
                s += "*t" + std::to_string(i + 1) + "^" + std::to_string(e[static_cast<size_t>(i)]);
    }
    return s;
}

QSymPoly phi_qsym(const LinComb& u, int nvars) {
    if (nvars < 1)
        throw std::domain_error("need at least one variable");
    if (max_depth(u) > nvars)
        throw std::domain_error("n < depth: truncated realization is not injective on this slice");
    QSymPoly out(nvars);
    for (const auto& [w, c] : u.terms()) {
        int r = w.depth();
        std::vector<int> pos(static_cast<size_t>(r));
        // strictly increasing positions 1 <= m_1 < ... < m_r <= n
        std::function<void(int, int)> rec = [&](int idx, int low) {
            if (idx == r) {
                std::vector<int> expo(static_cast<size_t>(nvars), 0);
                for (int i = 0; i < r; ++i)
                    expo[static_cast<size_t>(pos[static_cast<size_t>(i)]) - 1] =
                        w.parts()[static_cast<size_t>(i)];
                out.add(expo, c);
                return;
            }
            for (int m = low; m <= nvars - (r - 1 - idx); ++m) {
                pos[static_cast<size_t>(idx)] = m;
                rec(idx + 1, m + 1);
            }
        };
        rec(0, 1);
    }
    return out;
}

QSymPoly qsym_product(const QSymPoly& p, const QSymPoly& q) {
    if (p.nvars() != q.nvars())
        throw std::domain_error("variable count mismatch");
    QSymPoly out(p.nvars());
    for (const auto& [e1, c1] : p.terms())
        for (const auto& [e2, c2] : q.terms()) {
            std::vector<int> e = e1;
            for (size_t i = 0; i < e.size(); ++i)
                e[i] += e2[i];
            out.add(e, c1 * c2);
        }
    return out;
}

QSymPoly ttt_rhs(const Composition& k, int nvars) {
    int r = k.depth();
    if (r == 0)
        throw std::domain_error("ttt_rhs needs a nonempty word");
    if (nvars < r)
        throw std::domain_error("n < depth");
    QSymPoly out(nvars);
    std::vector<int> m(static_cast<size_t>(r));
    for (int j = 1; j <= r; ++j) {
        Rational coef = make_rational(k.parts()[static_cast<size_t>(j) - 1]);
        if ((r - j + 1) % 2 != 0)
            coef = -coef;
        // m_1 < ... < m_j strictly; m_j >= m_{j+1} >= ... >= m_r weakly
        std::function<void(int)> weak = [&](int idx) {
            if (idx == r) {
                std::vector<int> expo(static_cast<size_t>(nvars), 0);
                for (int i = 0; i < r; ++i)
                    expo[static_cast<size_t>(m[static_cast<size_t>(i)]) - 1] +=
                        k.parts()[static_cast<size_t>(i)];
                expo[static_cast<size_t>(m[static_cast<size_t>(j) - 1]) - 1] += 1;
                out.add(expo, coef);
                return;
            }
            for (int v = 1; v <= m[static_cast<size_t>(idx) - 1]; ++v) {
                m[static_cast<size_t>(idx)] = v;
                weak(idx + 1);
            }
        };
        std::function<void(int, int)> strict = [&](int idx, int low) {
            if (idx == j) {
                weak(j);
                return;
            }
            for (int v = low; v <= nvars - (j - 1 - idx); ++v) {
                m[static_cast<size_t>(idx)] = v;
                strict(idx + 1, v + 1);
            }
        };
        strict(0, 1);
    }
    return out;
}

} // namespace pmskit
