#ifndef PMSKIT_LINALG_HPP
#define PMSKIT_LINALG_HPP

#include <optional>
#include <vector>

#include "pmskit/lincomb.hpp"

namespace pmskit {

// Dense exact rational matrix, row major.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rational& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    void append_row(const std::vector<Rational>& row);
    std::vector<Rational> row(size_t i) const;

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Rational> a_;
};

// In-place reduced row echelon form with deterministic pivoting (first
// nonzero column, topmost row). Returns the pivot columns; zero rows are
// dropped, so rows() afterwards equals the rank.
std::vector<size_t> rref(RatMatrix& m);

// Basis of {x : m x = 0} as RREF rows over the column index space.
RatMatrix nullspace(const RatMatrix& m);

// Solves m x = b, free variables set to zero; nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_particular(const RatMatrix& m,
                                                      const std::vector<Rational>& b);

// Row space over an ordered ambient word basis, held in canonical RREF.
// Equality of subspaces coincides with equality of the representation.
template <class Word>
class Subspace {
public:
    Subspace() = default;
    Subspace(std::vector<Word> ambient, RatMatrix rref_basis)
        : ambient_(std::move(ambient)), basis_(std::move(rref_basis)) {}

    static Subspace span(std::vector<Word> ambient,
                         const std::vector<SparseComb<Word>>& generators) {
        RatMatrix m(generators.size(), ambient.size());
        for (size_t i = 0; i < generators.size(); ++i) {
            size_t j = 0;
            for (const Word& w : ambient)
                m.at(i, j++) = generators[i].coefficient(w);
        }
        rref(m);
        return Subspace(std::move(ambient), std::move(m));
    }

    const std::vector<Word>& ambient() const { return ambient_; }
    const RatMatrix& basis() const { return basis_; }
    size_t dim() const { return basis_.rows(); }

    std::vector<Rational> coordinates(const SparseComb<Word>& v) const {
        std::vector<Rational> x(ambient_.size());
        size_t j = 0;
        for (const Word& w : ambient_)
            x[j++] = v.coefficient(w);
        return x;
    }

    SparseComb<Word> element(size_t row) const {
        SparseComb<Word> out;
        for (size_t j = 0; j < ambient_.size(); ++j)
            out.add(ambient_[j], basis_.at(row, j));
        return out;
    }

    bool contains(const SparseComb<Word>& v) const { return contains(coordinates(v)); }

    bool contains(std::vector<Rational> x) const {
        // reduce against the RREF rows
        for (size_t r = 0; r < basis_.rows(); ++r) {
            size_t p = pivot_col(r);
            if (x[p] != 0) {
                Rational f = x[p];
                for (size_t j = p; j < ambient_.size(); ++j)
                    x[j] -= f * basis_.at(r, j);
            }
        }
        for (const Rational& c : x)
            if (c != 0)
                return false;
        return true;
    }

    bool contains_subspace(const Subspace& other) const {
        for (size_t r = 0; r < other.basis_.rows(); ++r)
            if (!contains(other.basis_.row(r)))
                return false;
        return true;
    }

    bool operator==(const Subspace& other) const {
        return ambient_ == other.ambient_ && basis_ == other.basis_;
    }

private:
    size_t pivot_col(size_t row) const {
        for (size_t j = 0; j < basis_.cols(); ++j)
            if (basis_.at(row, j) != 0)
                return j;
        return basis_.cols();
    }

    std::vector<Word> ambient_;
    RatMatrix basis_; // RREF
};

} // namespace pmskit

#endif
