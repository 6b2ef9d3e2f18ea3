#include "dunkl/exactla.hpp"

#include <optional>

namespace dunkl {

namespace {

struct Echelon {
    Matrix m;
    std::vector<size_t> pivot_col;   // per pivot row
    std::vector<Scalar> pivots;
};

// Reduced row echelon form (pivots scaled to 1, eliminated above and below).
Echelon rref(Matrix m) {
    size_t rows = m.rows(), cols = m.cols();
    Echelon e{std::move(m), {}, {}};
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t p = row;
        while (p < rows && e.m.at(p, col).is_zero())
            ++p;
        if (p == rows)
            continue;
        if (p != row)
            for (size_t c = 0; c < cols; ++c)
                std::swap(e.m.at(p, c), e.m.at(row, c));
        Scalar piv = e.m.at(row, col);
        e.pivots.push_back(piv);
        Scalar inv = piv.inverse();
        for (size_t c = col; c < cols; ++c)
            e.m.at(row, c) *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == row || e.m.at(r, col).is_zero())
                continue;
            Scalar f = e.m.at(r, col);
            for (size_t c = col; c < cols; ++c)
                e.m.at(r, c) -= f * e.m.at(row, c);
        }
        e.pivot_col.push_back(col);
        ++row;
    }
    return e;
}

}  // namespace

SolveResult solve(const Matrix& A, const std::vector<Scalar>& b) {
    size_t rows = A.rows(), cols = A.cols();
    Matrix aug(rows, cols + 1);
    for (size_t r = 0; r < rows; ++r) {
        for (size_t c = 0; c < cols; ++c)
            aug.at(r, c) = A.at(r, c);
        aug.at(r, cols) = b[r];
    }
    Echelon e = rref(std::move(aug));
    SolveResult res;
    res.pivots = e.pivots;
    // inconsistent iff some pivot lands in the rhs column
    for (size_t i = 0; i < e.pivot_col.size(); ++i) {
        if (e.pivot_col[i] == cols) {
            res.status = SolveStatus::NoSolution;
            return res;
        }
    }
    if (e.pivot_col.size() < cols) {
        res.status = SolveStatus::NonUnique;
        return res;
    }
    res.x.assign(cols, Scalar());
    for (size_t i = 0; i < e.pivot_col.size(); ++i)
        res.x[e.pivot_col[i]] = e.m.at(i, cols);
    return res;
}

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& A) {
    Echelon e = rref(A);
    size_t cols = A.cols();
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : e.pivot_col)
        is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Scalar> v(cols);
        v[free] = Scalar(1);
        for (size_t i = 0; i < e.pivot_col.size(); ++i)
            v[e.pivot_col[i]] = -e.m.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

size_t rank(const Matrix& A) {
    return rref(A).pivot_col.size();
}

}  // namespace dunkl
