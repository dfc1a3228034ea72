#include "pmskit/algebra.hpp"

#include <map>
#include <stdexcept>

namespace pmskit {

namespace {

// prepend z_k to every word of u
LinComb prepend(int k, const LinComb& u) {
    LinComb out;
    for (const auto& [w, c] : u.terms()) {
        std::vector<int> p;
        p.reserve(w.parts().size() + 1);
        p.push_back(k);
        p.insert(p.end(), w.parts().begin(), w.parts().end());
        out.add(Composition(std::move(p)), c);
    }
    return out;
}

XYComb prepend(Letter l, const XYComb& u) {
    XYComb out;
    for (const auto& [w, c] : u.terms()) {
        std::vector<Letter> v;
        v.reserve(w.letters().size() + 1);
        v.push_back(l);
        v.insert(v.end(), w.letters().begin(), w.letters().end());
        out.add(XYWord(std::move(v)), c);
    }
    return out;
}

LinComb quasi_shuffle(const Composition& a, size_t i, const Composition& b, size_t j,
                      bool with_merge) {
    if (i == a.parts().size()) {
        Composition rest(std::vector<int>(b.parts().begin() + j, b.parts().end()));
        return LinComb(rest);
    }
    if (j == b.parts().size()) {
        Composition rest(std::vector<int>(a.parts().begin() + i, a.parts().end()));
        return LinComb(rest);
    }
    int k = a.parts()[i];
    int l = b.parts()[j];
    LinComb out = prepend(k, quasi_shuffle(a, i + 1, b, j, with_merge));
    out += prepend(l, quasi_shuffle(a, i, b, j + 1, with_merge));
    if (with_merge)
        out += prepend(k + l, quasi_shuffle(a, i + 1, b, j + 1, with_merge));
    return out;
}

LinComb bilinear(const LinComb& u, const LinComb& v,
                 LinComb (*word_product)(const Composition&, const Composition&)) {
    LinComb out;
    for (const auto& [a, ca] : u.terms())
        for (const auto& [b, cb] : v.terms()) {
            LinComb p = word_product(a, b);
            p *= ca * cb;
            out += p;
        }
    return out;
}

} // namespace

LinComb stuffle(const Composition& a, const Composition& b) {
    return quasi_shuffle(a, 0, b, 0, true);
}

LinComb stuffle(const LinComb& u, const LinComb& v) {
    return bilinear(u, v, [](const Composition& a, const Composition& b) { return stuffle(a, b); });
}

LinComb tshuffle(const Composition& a, const Composition& b) {
    return quasi_shuffle(a, 0, b, 0, false);
}

LinComb tshuffle(const LinComb& u, const LinComb& v) {
    return bilinear(u, v, [](const Composition& a, const Composition& b) { return tshuffle(a, b); });
}

namespace {

XYComb shuffle_xy_rec(const XYWord& a, size_t i, const XYWord& b, size_t j) {
    if (i == a.letters().size()) {
        XYWord rest(std::vector<Letter>(b.letters().begin() + j, b.letters().end()));
        return XYComb(rest);
    }
    if (j == b.letters().size()) {
        XYWord rest(std::vector<Letter>(a.letters().begin() + i, a.letters().end()));
        return XYComb(rest);
    }
    XYComb out = prepend(a.letters()[i], shuffle_xy_rec(a, i + 1, b, j));
    out += prepend(b.letters()[j], shuffle_xy_rec(a, i, b, j + 1));
    return out;
}

} // namespace

XYComb shuffle_xy(const XYWord& a, const XYWord& b) {
    return shuffle_xy_rec(a, 0, b, 0);
}

XYComb shuffle_xy(const XYComb& u, const XYComb& v) {
    XYComb out;
    for (const auto& [a, ca] : u.terms())
        for (const auto& [b, cb] : v.terms()) {
            XYComb p = shuffle_xy(a, b);
            p *= ca * cb;
            out += p;
        }
    return out;
}

LinComb stuffle_power_y(int j) {
    if (j < 0)
        throw std::domain_error("negative stuffle power");
    LinComb acc = LinComb::unit();
    LinComb y{Composition({1})};
    for (int i = 0; i < j; ++i)
        acc = stuffle(acc, y);
    return acc;
}

TensorComb tensor_stuffle(const TensorComb& s, const TensorComb& t) {
    TensorComb out;
    for (const auto& [p, cp] : s.terms())
        for (const auto& [q, cq] : t.terms()) {
            LinComb left = stuffle(LinComb(p.left), LinComb(q.left));
            LinComb right = stuffle(LinComb(p.right), LinComb(q.right));
            Rational c = cp * cq;
            for (const auto& [lw, lc] : left.terms())
                for (const auto& [rw, rc] : right.terms())
                    out.add(WordPair{lw, rw}, c * lc * rc);
        }
    return out;
}

XYComb ring_map(RingMapName name, const XYComb& u) {
    XYComb out;
    for (const auto& [w, c] : u.terms()) {
        XYComb acc(XYWord{}, c);
        for (Letter l : w.letters()) {
            XYComb next;
            for (const auto& [p, cp] : acc.terms()) {
                if (l == Letter::x) {
                    next.add(p.append(Letter::x), cp);
                } else if (name == RingMapName::phi) {
                    next.add(p.append(Letter::x), cp);
                    next.add(p.append(Letter::y), cp);
                } else { // d
                    next.add(p.append(Letter::y), Rational(-cp));
                }
            }
            acc = std::move(next);
        }
        out += acc;
    }
    return out;
}

namespace {

XYWord y_prepended(const XYWord& w) {
    std::vector<Letter> v;
    v.reserve(w.letters().size() + 1);
    v.push_back(Letter::y);
    v.insert(v.end(), w.letters().begin(), w.letters().end());
    return XYWord(std::move(v));
}

// letterwise automorphism of the tail used by the head-fixed maps
XYComb tail_automorphism(HeadMapName name, const XYWord& tail) {
    XYComb acc = XYComb(XYWord{});
    for (Letter l : tail.letters()) {
        XYComb next;
        for (const auto& [p, cp] : acc.terms()) {
            switch (name) {
            case HeadMapName::S: // S_1: x -> x, y -> x+y
                if (l == Letter::x) {
                    next.add(p.append(Letter::x), cp);
                } else {
                    next.add(p.append(Letter::x), cp);
                    next.add(p.append(Letter::y), cp);
                }
                break;
            case HeadMapName::beta: // beta_1: swap x and y
                next.add(p.append(l == Letter::x ? Letter::y : Letter::x), cp);
                break;
            default:
                throw std::logic_error("unreachable");
            }
        }
        acc = std::move(next);
    }
    return acc;
}

} // namespace

LinComb head_fixed_map(HeadMapName name, const LinComb& u) {
    if (name == HeadMapName::Stilde) {
        // Stilde = S o d and d scales a z-word by (-1)^depth
        LinComb du;
        for (const auto& [w, c] : u.terms())
            du.add(w, (w.depth() % 2 == 0) ? c : Rational(-c));
        return head_fixed_map(HeadMapName::S, du);
    }
    LinComb out;
    for (const auto& [w, c] : u.terms()) {
        if (w.empty()) {
            out.add(w, c);
            continue;
        }
        XYWord xy = to_xy(w);
        XYWord tail(std::vector<Letter>(xy.letters().begin() + 1, xy.letters().end()));
        XYComb mapped = tail_automorphism(name, tail);
        for (const auto& [p, cp] : mapped.terms())
            out.add(to_composition(y_prepended(p)), c * cp);
    }
    return out;
}

LinComb sigma_map(int m, const LinComb& u) {
    if (m < 0)
        throw std::domain_error("sigma_m needs m >= 0");
    LinComb out;
    XYWord xm(std::vector<Letter>(static_cast<size_t>(m), Letter::x));
    for (const auto& [w, c] : u.terms()) {
        if (w.empty()) {
            if (m == 0)
                out.add(w, c);
            continue;
        }
        XYWord xy = to_xy(w);
        XYWord tail(std::vector<Letter>(xy.letters().begin() + 1, xy.letters().end()));
        XYComb sh = shuffle_xy(tail, xm);
        for (const auto& [p, cp] : sh.terms())
            out.add(to_composition(y_prepended(p)), c * cp);
    }
    return out;
}

AlphaSeries sigma_series(const LinComb& u, int order) {
    if (order < 0)
        throw std::domain_error("negative truncation order");
    AlphaSeries s;
    s.coeff.reserve(static_cast<size_t>(order) + 1);
    for (int m = 0; m <= order; ++m)
        s.coeff.push_back(sigma_map(m, u));
    return s;
}

TensorComb coproduct(const LinComb& u) {
    TensorComb out;
    for (const auto& [w, c] : u.terms()) {
        int r = w.depth();
        for (int i = 0; i <= r; ++i)
            out.add(WordPair{w.prefix(i), w.suffix_reversed(i)}, c);
    }
    return out;
}

LinComb psi_map(const LinComb& u) {
    if (has_constant_term(u))
        throw std::domain_error("psi is defined on yH only (constant term present)");
    LinComb out;
    for (const auto& [w, c] : u.terms()) {
        int r = w.depth();
        for (int i = 0; i < r; ++i) {
            LinComb tail = head_fixed_map(HeadMapName::Stilde,
                                          sigma_map(1, LinComb(w.suffix_reversed(i))));
            LinComb term = stuffle(LinComb(w.prefix(i)), tail);
            term *= c;
            out += term;
        }
    }
    if (!is_admissible_supported(out))
        throw std::logic_error("psi image left yHx; invariant violated");
    return out;
}

LinComb psi_bar_map(const LinComb& u) {
    if (has_constant_term(u))
        throw std::domain_error("psi_bar is defined on yH only (constant term present)");
    LinComb out;
    for (const auto& [w, c] : u.terms()) {
        int r = w.depth();
        for (int i = 0; i < r; ++i) {
            LinComb term = tshuffle(LinComb(w.prefix(i)),
                                    sigma_map(1, LinComb(w.suffix_reversed(i))));
            term *= ((r - i) % 2 == 0) ? c : Rational(-c);
            out += term;
        }
    }
    return out;
}

LinComb rho_map(const LinComb& u) {
    if (has_constant_term(u))
        throw std::domain_error("rho is defined on yH only (constant term present)");
    LinComb out;
    for (const auto& [w, c] : u.terms()) {
        int r = w.depth();
        // i runs 1..r; the i-th letter is removed and re-appended at the end
        for (int i = 1; i <= r; ++i) {
            LinComb sh = tshuffle(LinComb(w.prefix(i - 1)), LinComb(w.suffix_reversed(i)));
            int k_i = w.parts()[static_cast<size_t>(i) - 1];
            Rational sign = ((r - i) % 2 == 0) ? c : Rational(-c);
            for (const auto& [p, cp] : sh.terms())
                out.add(p.append(k_i), sign * cp);
        }
    }
    return out;
}

LinComb iota_map(IotaVariant variant, const LinComb& u) {
    LinComb out;
    for (const auto& [w, c] : u.terms()) {
        if (w.empty())
            throw std::domain_error("iota is defined on yH only (unit word present)");
        int l = w.parts().back();
        if (variant == IotaVariant::paper) {
            out.add(w.drop_last().append(l + 1), c * l);
        } else {
            if (l < 2)
                throw std::domain_error("iota' needs admissible words (last part >= 2)");
            out.add(w.drop_last().append(l - 1), c * Rational(-1, l - 1));
        }
    }
    return out;
}

AlphaSeries lambda_truncated(const LinComb& u, int order) {
    if (order < 0)
        throw std::domain_error("negative truncation order");
    AlphaSeries s;
    s.coeff.assign(static_cast<size_t>(order) + 1, LinComb{});
    for (const auto& [w, c] : u.terms()) {
        int r = w.depth();
        for (int m = 0; m <= order; ++m) {
            LinComb acc;
            for (int i = 0; i <= r; ++i) {
                LinComb tail = head_fixed_map(HeadMapName::Stilde,
                                              sigma_map(m, LinComb(w.suffix_reversed(i))));
                if (tail.is_zero())
                    continue;
                acc += stuffle(LinComb(w.prefix(i)), tail);
            }
            acc *= c;
            s.coeff[static_cast<size_t>(m)] += acc;
        }
    }
    return s;
}

AlphaSeries series_stuffle(const AlphaSeries& a, const AlphaSeries& b) {
    int order = std::min(a.order(), b.order());
    AlphaSeries s;
    s.coeff.assign(static_cast<size_t>(order) + 1, LinComb{});
    for (int m = 0; m <= order; ++m)
        for (int i = 0; i <= m; ++i)
            s.coeff[static_cast<size_t>(m)] += stuffle(a.at(i), b.at(m - i));
    return s;
}

namespace {

using RegParts = std::map<int, LinComb>;

void reg_accumulate(const Composition& w, const Rational& coef, RegParts& out,
                    std::map<Composition, RegParts>& memo);

void reg_accumulate_comb(const LinComb& u, const Rational& scale, RegParts& out,
                         std::map<Composition, RegParts>& memo) {
    for (const auto& [w, c] : u.terms())
        reg_accumulate(w, scale * c, out, memo);
}

// peel trailing z_1 letters: for w = v z_1 with t trailing ones,
//   t * w = y * v - (terms of y * v with fewer trailing ones)
const RegParts& reg_word(const Composition& w, std::map<Composition, RegParts>& memo) {
    auto it = memo.find(w);
    if (it != memo.end())
        return it->second;

    RegParts parts;
    if (w.admissible()) {
        parts[0] = LinComb(w);
    } else {
        int t = 0;
        for (auto rit = w.parts().rbegin(); rit != w.parts().rend() && *rit == 1; ++rit)
            ++t;
        Composition v = w.drop_last();
        LinComb rest = stuffle(LinComb(Composition({1})), LinComb(v));
        rest.add(w, make_rational(-t)); // remaining terms all have < t trailing ones
        Rational inv_t(1, t);

        const RegParts& inner = reg_word(v, memo);
        for (const auto& [j, comb] : inner) {
            LinComb scaled = comb;
            scaled *= inv_t;
            parts[j + 1] += scaled;
        }
        RegParts rest_parts;
        for (const auto& [rw, rc] : rest.terms()) {
            const RegParts& rp = reg_word(rw, memo);
            for (const auto& [j, comb] : rp) {
                LinComb scaled = comb;
                scaled *= rc * Rational(-1) * inv_t;
                rest_parts[j] += scaled;
            }
        }
        for (const auto& [j, comb] : rest_parts)
            parts[j] += comb;
    }
    return memo.emplace(w, std::move(parts)).first->second;
}

void reg_accumulate(const Composition& w, const Rational& coef, RegParts& out,
                    std::map<Composition, RegParts>& memo) {
    const RegParts& parts = reg_word(w, memo);
    for (const auto& [j, comb] : parts) {
        LinComb scaled = comb;
        scaled *= coef;
        out[j] += scaled;
    }
}

} // namespace

RegDecomposition harmonic_regularize(const LinComb& u) {
    std::map<Composition, RegParts> memo;
    RegParts acc;
    reg_accumulate_comb(u, make_rational(1), acc, memo);
    RegDecomposition reg;
    for (auto& [j, comb] : acc)
        if (!comb.is_zero())
            reg.parts.emplace_back(j, std::move(comb));
    return reg;
}

LinComb reg_expand(const RegDecomposition& reg) {
    LinComb out;
    for (const auto& [j, comb] : reg.parts)
        out += stuffle(stuffle_power_y(j), comb);
    return out;
}

} // namespace pmskit
