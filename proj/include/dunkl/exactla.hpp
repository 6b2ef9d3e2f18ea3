#pragma once

#include <vector>

#include "dunkl/ratfun.hpp"

namespace dunkl {

// Dense matrix over the exact scalar field.
class Matrix {
  public:
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Scalar& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const Scalar& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

  private:
    size_t rows_, cols_;
    std::vector<Scalar> a_;
};

enum class SolveStatus { Ok, NoSolution, NonUnique };

struct SolveResult {
    SolveStatus status = SolveStatus::Ok;
    std::vector<Scalar> x;
    // pivot values used during elimination; each is symbolically nonzero,
    // which is the nonvanishing certificate for the solution's validity
    std::vector<Scalar> pivots;
};

// Field-valued Gaussian elimination, first symbolically-nonzero pivot in
// column order. Distinguishes inconsistent (NoSolution) from
// underdetermined-but-consistent (NonUnique) systems.
SolveResult solve(const Matrix& A, const std::vector<Scalar>& b);

// Exact basis of the right kernel; empty iff A has full column rank.
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& A);

size_t rank(const Matrix& A);

}  // namespace dunkl
