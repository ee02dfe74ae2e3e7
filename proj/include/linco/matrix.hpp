#ifndef LINCO_MATRIX_HPP
#define LINCO_MATRIX_HPP

#include <cstddef>
#include <vector>

namespace linco {

// Dense row-major matrix. Encoder rows are hash-bucket embeddings, so all
// hot paths touch contiguous rows.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double* row(std::size_t r) { return data.data() + r * cols; }
    const double* row(std::size_t r) const { return data.data() + r * cols; }
    double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }
};

} // namespace linco

#endif
