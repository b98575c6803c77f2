#pragma once

#include <cstddef>
#include <vector>

#include "plunet/errors.hpp"

namespace plunet {

// Dense row-major matrix of doubles; the only tensor type in the library.
// Weights, biases, batches, and gradients are all Matrix values.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> values);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    bool same_shape(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);

// Solves a x = b for square a via LU with scaled partial pivoting.
// Throws SingularityError when a pivot falls below 1e-12 relative to its
// row's largest original entry.
Matrix solve_linear(const Matrix& a, const Matrix& b);

// Elementwise helpers used by the network and optimizer.
Matrix add(const Matrix& a, const Matrix& b);
Matrix sub(const Matrix& a, const Matrix& b);
Matrix hadamard(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, double s);

// Largest absolute entry (infinity norm of the flattened matrix).
double max_abs(const Matrix& a);

}  // namespace plunet
