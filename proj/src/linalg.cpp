#include "pmskit/linalg.hpp"

#include <stdexcept>

namespace pmskit {

void RatMatrix::append_row(const std::vector<Rational>& row) {
    if (rows_ == 0 && cols_ == 0)
        cols_ = row.size();
    if (row.size() != cols_)
        throw std::domain_error("row length mismatch");
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
}

std::vector<Rational> RatMatrix::row(size_t i) const {
    return std::vector<Rational>(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                 a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

std::vector<size_t> rref(RatMatrix& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t sel = row;
        while (sel < m.rows() && m.at(sel, col) == 0)
            ++sel;
        if (sel == m.rows())
            continue;
        if (sel != row)
            for (size_t j = col; j < m.cols(); ++j)
                swap(m.at(row, j), m.at(sel, j));
        Rational inv = 1 / m.at(row, col);
        for (size_t j = col; j < m.cols(); ++j)
            m.at(row, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0)
                continue;
            Rational f = m.at(i, col);
            for (size_t j = col; j < m.cols(); ++j)
                m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    // drop zero rows so rows() == rank
    RatMatrix compact(pivots.size(), m.cols());
    for (size_t i = 0; i < pivots.size(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            compact.at(i, j) = m.at(i, j);
    m = std::move(compact);
    return pivots;
}

RatMatrix nullspace(const RatMatrix& m) {
    RatMatrix r = m;
    std::vector<size_t> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t p : pivots)
        is_pivot[p] = true;

    RatMatrix basis(0, m.cols());
    for (size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rational> v(m.cols());
        v[free] = 1;
        for (size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -r.at(i, free);
        basis.append_row(v);
    }
    rref(basis);
    return basis;
}

std::optional<std::vector<Rational>> solve_particular(const RatMatrix& m,
                                                      const std::vector<Rational>& b) {
    if (b.size() != m.rows())
        throw std::domain_error("rhs length mismatch");
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    std::vector<size_t> pivots = rref(aug);
    std::vector<Rational> x(m.cols());
    for (size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == m.cols())
            return std::nullopt; // pivot in the rhs column: inconsistent
        x[pivots[i]] = aug.at(i, m.cols());
    }
    return x;
}

} // namespace pmskit
