#include "pmskit/words.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pmskit {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int k : parts_)
        if (k < 1)
            throw std::domain_error("composition parts must be >= 1, got " + std::to_string(k));
}

int Composition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition Composition::prefix(int i) const {
    return Composition(std::vector<int>(parts_.begin(), parts_.begin() + i));
}

Composition Composition::suffix_reversed(int i) const {
    std::vector<int> p(parts_.begin() + i, parts_.end());
    std::reverse(p.begin(), p.end());
    return Composition(std::move(p));
}

Composition Composition::append(int k) const {
    std::vector<int> p = parts_;
    p.push_back(k);
    return Composition(std::move(p));
}

Composition Composition::concat(const Composition& other) const {
    std::vector<int> p = parts_;
    p.insert(p.end(), other.parts_.begin(), other.parts_.end());
    return Composition(std::move(p));
}

Composition Composition::drop_last() const {
    if (parts_.empty())
        throw std::domain_error("drop_last on the unit word");
    return Composition(std::vector<int>(parts_.begin(), parts_.end() - 1));
}

std::string Composition::to_string() const {
    if (parts_.empty())
        return "()";
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
    if (auto c = a.weight() <=> b.weight(); c != 0)
        return c;
    if (auto c = a.depth() <=> b.depth(); c != 0)
        return c;
    return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(),
                                                  b.parts_.begin(), b.parts_.end());
}

XYWord XYWord::append(Letter l) const {
    std::vector<Letter> v = letters_;
    v.push_back(l);
    return XYWord(std::move(v));
}

XYWord XYWord::concat(const XYWord& other) const {
    std::vector<Letter> v = letters_;
    v.insert(v.end(), other.letters_.begin(), other.letters_.end());
    return XYWord(std::move(v));
}

std::string XYWord::to_string() const {
    std::string s;
    for (Letter l : letters_)
        s += (l == Letter::x) ? 'x' : 'y';
    return s;
}

std::strong_ordering operator<=>(const XYWord& a, const XYWord& b) {
    if (auto c = a.size() <=> b.size(); c != 0)
        return c;
    return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                  b.letters_.begin(), b.letters_.end());
}

XYWord to_xy(const Composition& c) {
    std::vector<Letter> v;
    v.reserve(static_cast<size_t>(std::max(c.weight(), 0)));
    for (int k : c.parts()) {
        v.push_back(Letter::y);
        for (int i = 1; i < k; ++i)
            v.push_back(Letter::x);
    }
    return XYWord(std::move(v));
}

Composition to_composition(const XYWord& w) {
    if (w.empty())
        return Composition();
    if (!w.starts_with_y())
        throw std::domain_error("word starts with x, not in H1: " + w.to_string());
    std::vector<int> parts;
    for (Letter l : w.letters()) {
        if (l == Letter::y)
            parts.push_back(1);
        else
            ++parts.back();
    }
    return Composition(std::move(parts));
}

std::variant<Composition, XYWord> parse_word(const std::string& text) {
    if (text.empty())
        return Composition();
    bool letters_only = std::all_of(text.begin(), text.end(),
                                    [](char c) { return c == 'x' || c == 'y'; });
    if (letters_only) {
        std::vector<Letter> v;
        v.reserve(text.size());
        for (char c : text)
            v.push_back(c == 'x' ? Letter::x : Letter::y);
        return XYWord(std::move(v));
    }
    std::vector<int> parts;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                      : comma - pos);
        if (tok.empty())
            throw std::invalid_argument("empty part in word literal: '" + text + "'");
        for (char c : tok)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("bad character '" + std::string(1, c) +
                                            "' in word literal: '" + text + "'");
        long v = std::stol(tok);
        if (v < 1)
            throw std::domain_error("composition parts must be >= 1, got " + tok);
        parts.push_back(static_cast<int>(v));
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return Composition(std::move(parts));
}

namespace {

void gen_compositions(int remaining, std::vector<int>& cur, std::vector<Composition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int k = 1; k <= remaining; ++k) {
        cur.push_back(k);
        gen_compositions(remaining - k, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Composition> enumerate_words(int weight, WordSpace space) {
    if (weight < 0)
        throw std::domain_error("negative weight");
    std::vector<Composition> all;
    if (weight == 0) {
        if (space == WordSpace::H1)
            all.emplace_back();
        return all;
    }
    std::vector<int> cur;
    gen_compositions(weight, cur, all);
    if (space == WordSpace::yHx)
        std::erase_if(all, [](const Composition& c) { return !c.admissible(); });
    std::sort(all.begin(), all.end());
    return all;
}

std::vector<XYWord> enumerate_xy_words(int length, bool ends_with_x) {
    if (length < 0)
        throw std::domain_error("negative length");
    std::vector<XYWord> out;
    int free_letters = ends_with_x ? length - 1 : length;
    if (free_letters < 0)
        return out;
    for (std::uint64_t mask = 0; mask < (1ull << free_letters); ++mask) {
        std::vector<Letter> v;
        v.reserve(static_cast<size_t>(length));
        for (int i = 0; i < free_letters; ++i)
            v.push_back((mask >> (free_letters - 1 - i)) & 1 ? Letter::y : Letter::x);
        if (ends_with_x)
            v.push_back(Letter::x);
        out.emplace_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace pmskit
