#ifndef PMSKIT_LINCOMB_HPP
#define PMSKIT_LINCOMB_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "pmskit/rational.hpp"
#include "pmskit/words.hpp"

namespace pmskit {

// Sparse Q-linear combination of words. Zero coefficients are never stored;
// iteration order is the canonical word order, so output is deterministic.
template <class Word>
class SparseComb {
public:
    using term_map = std::map<Word, Rational>;

    SparseComb() = default;
    explicit SparseComb(const Word& w) { terms_.emplace(w, make_rational(1)); }
    SparseComb(const Word& w, const Rational& c) { add(w, c); }

    static SparseComb unit() { return SparseComb(Word()); }

    void add(const Word& w, const Rational& c) {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    const term_map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    Rational coefficient(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    SparseComb& operator+=(const SparseComb& o) {
        for (const auto& [w, c] : o.terms_)
            add(w, c);
        return *this;
    }
    SparseComb& operator-=(const SparseComb& o) {
        for (const auto& [w, c] : o.terms_)
            add(w, Rational(-c));
        return *this;
    }
    SparseComb& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, c] : terms_)
            c *= s;
        return *this;
    }

    friend SparseComb operator+(SparseComb a, const SparseComb& b) { return a += b; }
    friend SparseComb operator-(SparseComb a, const SparseComb& b) { return a -= b; }
    friend SparseComb operator*(const Rational& s, SparseComb a) { return a *= s; }
    friend SparseComb operator-(SparseComb a) { return a *= make_rational(-1); }
    friend bool operator==(const SparseComb&, const SparseComb&) = default;

    std::string to_string() const {
        if (terms_.empty())
            return "0";
        std::string s;
        for (const auto& [w, c] : terms_) {
            if (!s.empty())
                s += " + ";
            s += pmskit::to_string(c) + "*(" + w.to_string() + ")";
        }
        return s;
    }

private:
    term_map terms_;
};

using LinComb = SparseComb<Composition>;
using XYComb = SparseComb<XYWord>;

struct WordPair {
    Composition left;
    Composition right;
    std::string to_string() const { return "(" + left.to_string() + ")x(" + right.to_string() + ")"; }
    friend bool operator==(const WordPair&, const WordPair&) = default;
    friend std::strong_ordering operator<=>(const WordPair&, const WordPair&) = default;
};

using TensorComb = SparseComb<WordPair>;

inline bool has_constant_term(const LinComb& u) {
    return u.coefficient(Composition()) != 0;
}

inline bool is_admissible_supported(const LinComb& u) {
    for (const auto& [w, c] : u.terms())
        if (!w.admissible())
            return false;
    return true;
}

inline int max_depth(const LinComb& u) {
    int d = 0;
    for (const auto& [w, c] : u.terms())
        d = std::max(d, w.depth());
    return d;
}

inline LinComb depth_part(const LinComb& u, int d) {
    LinComb out;
    for (const auto& [w, c] : u.terms())
        if (w.depth() == d)
            out.add(w, c);
    return out;
}

// nullopt when the combination is not weight-homogeneous (or is zero)
inline std::optional<int> homogeneous_weight(const LinComb& u) {
    std::optional<int> w;
    for (const auto& [word, c] : u.terms()) {
        if (!w)
            w = word.weight();
        else if (*w != word.weight())
            return std::nullopt;
    }
    return w;
}

inline XYComb xy_form(const LinComb& u) {
    XYComb out;
    for (const auto& [w, c] : u.terms())
        out.add(to_xy(w), c);
    return out;
}

inline LinComb z_form(const XYComb& u) {
    LinComb out;
    for (const auto& [w, c] : u.terms())
        out.add(to_composition(w), c);
    return out;
}

// Truncated polynomial in the formal deformation variable with LinComb
// coefficients; arithmetic drops everything above the truncation order.
struct AlphaSeries {
    std::vector<LinComb> coeff; // coeff[m] multiplies alpha^m

    int order() const { return static_cast<int>(coeff.size()) - 1; }
    const LinComb& at(int m) const { return coeff.at(static_cast<size_t>(m)); }
};

} // namespace pmskit

#endif
