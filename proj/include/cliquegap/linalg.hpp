#pragma once

#include <vector>

#include "cliquegap/field.hpp"

namespace cg {

using Matrix = std::vector<std::vector<Fe>>; // row major

// Gaussian elimination over F_p. Solves A·X = B for square A (B holds one or
// more right-hand sides as columns) and reports det(A). Throws SingularSystem
// when A is singular and a solve was requested.
struct Elimination {
    Fe det = 0;
    Matrix solution; // n x rhs_cols
};

Elimination gauss_solve(const PrimeField& f, Matrix a, Matrix b);

// Determinant only; never throws on singular input.
Fe gauss_det(const PrimeField& f, Matrix a);

// Incremental row-space tracker for greedy full-rank subset selection.
class RankTracker {
public:
    RankTracker(const PrimeField& f, std::size_t cols) : field_(f), cols_(cols) {}

    std::size_t rank() const { return basis_.size(); }

    // Adds the row to the basis if it is independent of the rows kept so far.
    bool try_add(std::vector<Fe> row);

private:
    PrimeField field_;
    std::size_t cols_;
    std::vector<std::vector<Fe>> basis_; // reduced rows
    std::vector<std::size_t> pivots_;    // pivot column of basis_[i]
};

} // namespace cg
