#include "cliquegap/linalg.hpp"

namespace cg {

Elimination gauss_solve(const PrimeField& f, Matrix a, Matrix b) {
    const std::size_t n = a.size();
    for (const auto& row : a) {
        if (row.size() != n) throw DimensionError("gauss_solve needs a square matrix");
    }
    const bool solving = !b.empty();
    const std::size_t rhs = solving ? b[0].size() : 0;
    if (solving && b.size() != n) throw DimensionError("right-hand side row count mismatch");

    Fe det = 1 % f.modulus();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) {
            if (solving) throw SingularSystem("singular linear system");
            return {0, {}};
        }
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            if (solving) std::swap(b[pivot], b[col]);
            det = f.neg(det);
        }
        det = f.mul(det, a[col][col]);
        const Fe piv_inv = f.inv(a[col][col]);
        for (std::size_t j = col; j < n; ++j) a[col][j] = f.mul(a[col][j], piv_inv);
        for (std::size_t j = 0; j < rhs; ++j) b[col][j] = f.mul(b[col][j], piv_inv);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            const Fe factor = a[row][col];
            for (std::size_t j = col; j < n; ++j)
                a[row][j] = f.sub(a[row][j], f.mul(factor, a[col][j]));
            for (std::size_t j = 0; j < rhs; ++j)
                b[row][j] = f.sub(b[row][j], f.mul(factor, b[col][j]));
        }
    }
    return {det, std::move(b)};
}

Fe gauss_det(const PrimeField& f, Matrix a) { return gauss_solve(f, std::move(a), {}).det; }

bool RankTracker::try_add(std::vector<Fe> row) {
    if (row.size() != cols_) throw DimensionError("row width mismatch");
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Fe c = row[pivots_[i]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < cols_; ++j)
            row[j] = field_.sub(row[j], field_.mul(c, basis_[i][j]));
    }
    std::size_t pivot = cols_;
    for (std::size_t j = 0; j < cols_; ++j) {
        if (row[j] != 0) {
            pivot = j;
            break;
        }
    }
    if (pivot == cols_) return false;
    const Fe inv = field_.inv(row[pivot]);
    for (std::size_t j = 0; j < cols_; ++j) row[j] = field_.mul(row[j], inv);
    basis_.push_back(std::move(row));
    pivots_.push_back(pivot);
    return true;
}

} // namespace cg
