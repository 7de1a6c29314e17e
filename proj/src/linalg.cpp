#include "orbrr/linalg.hpp"

namespace orbrr {

std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> A, std::vector<Rational> b)
{
    const std::size_t rows = A.size();
    if (b.size() != rows) throw std::invalid_argument("solve_exact: shape mismatch");
    const std::size_t cols = rows ? A[0].size() : 0;

    std::vector<long> pivot_row(cols, -1);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && A[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(A[p], A[rank]);
        std::swap(b[p], b[rank]);
        Rational inv = 1 / A[rank][c];
        for (std::size_t j = c; j < cols; ++j) A[rank][j] *= inv;
        b[rank] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || A[r][c] == 0) continue;
            Rational f = A[r][c];
            for (std::size_t j = c; j < cols; ++j) A[r][j] -= f * A[rank][j];
            b[r] -= f * b[rank];
        }
        pivot_row[c] = static_cast<long>(rank);
        ++rank;
    }
    for (std::size_t r = rank; r < rows; ++r)
        if (b[r] != 0) throw math_error("solve_exact: inconsistent linear system");
    std::vector<Rational> x(cols);
    for (std::size_t c = 0; c < cols; ++c) {
        if (pivot_row[c] < 0) throw math_error("solve_exact: underdetermined linear system");
        x[c] = b[static_cast<std::size_t>(pivot_row[c])];
    }
    return x;
}

}  // namespace orbrr
