#include "vclab/exact_matrix.hpp"

namespace vclab {

std::size_t exact_rank(const ExactMatrix& mx) {
    const std::size_t rows = mx.rows(), cols = mx.cols();
    if (rows == 0 || cols == 0) return 0;

    // Clear denominators row by row (rank preserving).
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        mpz_class lcm = 1;
        for (std::size_t c = 0; c < cols; ++c)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), mx.at(r, c).get_den().get_mpz_t());
        for (std::size_t c = 0; c < cols; ++c) {
            mpq_class scaled = mx.at(r, c) * mpq_class(lcm);
            a[r][c] = scaled.get_num();  // denominator is 1 after scaling
        }
    }

    mpz_class prev_pivot = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        const mpz_class& p = a[rank][col];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c) {
                mpz_class t = a[r][c] * p - a[r][col] * a[rank][c];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
                a[r][c] = t;
            }
            a[r][col] = 0;
        }
        prev_pivot = p;
        ++rank;
    }
    return rank;
}

}  // namespace vclab
