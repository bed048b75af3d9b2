#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace vclab {

// Dense matrix over exact rationals (GMP mpq).  All arithmetic exact.
class ExactMatrix {
  public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, mpq_class(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpq_class& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const mpq_class& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<mpq_class> data_;
};

// Rank over the rationals by fraction-free (Bareiss) elimination: rows are
// scaled to integers, pivots are the first nonzero entry per column in row
// order, and every intermediate value stays an exact integer.
std::size_t exact_rank(const ExactMatrix& mx);

}  // namespace vclab
