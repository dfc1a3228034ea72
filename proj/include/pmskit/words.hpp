#ifndef PMSKIT_WORDS_HPP
#define PMSKIT_WORDS_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace pmskit {

// Words of the harmonic algebra in z-letter form: a composition
// (k_1,...,k_r) of positive integers stands for z_{k_1}...z_{k_r},
// z_k = y x^{k-1}. The empty composition is the unit word 1.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const;
    int depth() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // last part >= 2, or the unit word; exactly the convergent indices
    bool admissible() const { return parts_.empty() || parts_.back() >= 2; }

    Composition prefix(int i) const;          // (k_1,...,k_i)
    Composition suffix_reversed(int i) const; // (k_r,...,k_{i+1})
    Composition append(int k) const;
    Composition concat(const Composition& other) const;
    Composition drop_last() const;

    std::string to_string() const; // "1,2"; unit renders as "1" the empty string "" -> "()"... see impl

    friend bool operator==(const Composition&, const Composition&) = default;
    // graded lexicographic: weight, then depth, then parts lex
    friend std::strong_ordering operator<=>(const Composition& a, const Composition& b);

private:
    std::vector<int> parts_;
};

enum class Letter : std::uint8_t { x, y };

// Words of the free algebra on {x,y} in letter form.
class XYWord {
public:
    XYWord() = default;
    explicit XYWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    const std::vector<Letter>& letters() const { return letters_; }
    int size() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    bool starts_with_y() const { return !letters_.empty() && letters_.front() == Letter::y; }
    bool ends_with_x() const { return !letters_.empty() && letters_.back() == Letter::x; }

    XYWord append(Letter l) const;
    XYWord concat(const XYWord& other) const;

    std::string to_string() const; // "yxx"

    friend bool operator==(const XYWord&, const XYWord&) = default;
    // length, then lexicographic with x < y
    friend std::strong_ordering operator<=>(const XYWord& a, const XYWord& b);

private:
    std::vector<Letter> letters_;
};

// z_{k_1}...z_{k_r} <-> y x^{k_1-1} ... y x^{k_r-1}
XYWord to_xy(const Composition& c);
// Throws std::domain_error when the word starts with x (not in H^1).
Composition to_composition(const XYWord& w);

// "1,2" -> Composition, "yxx" -> XYWord. Empty text yields the unit word.
std::variant<Composition, XYWord> parse_word(const std::string& text);

enum class WordSpace { yH, yHx, H1 };

// Graded slice of the chosen space at the given weight, in canonical order.
std::vector<Composition> enumerate_words(int weight, WordSpace space);

// All length-n words over {x,y}, canonical order; ends_with_x filters to Hx.
std::vector<XYWord> enumerate_xy_words(int length, bool ends_with_x);

} // namespace pmskit

#endif
