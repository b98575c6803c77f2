#include "plunet/matrix.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <utility>

namespace plunet {

namespace {

// A pivot is singular when it is tiny relative to its row's largest
// original entry; equivalent to a 1e-12 cut on the row-scaled matrix.
constexpr double kSingularPivotTol = 1e-12;

std::string dims(const Matrix& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void check_same_shape(const char* op, const Matrix& a, const Matrix& b) {
    if (!a.same_shape(b)) {
        throw ShapeError(std::string(op) + ": operands are " + dims(a) + " and " + dims(b));
    }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {
    if (rows == 0 || cols == 0) {
        throw ShapeError("matrix dimensions must be positive, got " +
                         std::to_string(rows) + "x" + std::to_string(cols));
    }
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), data_(std::move(values)) {
    if (rows == 0 || cols == 0) {
        throw ShapeError("matrix dimensions must be positive, got " +
                         std::to_string(rows) + "x" + std::to_string(cols));
    }
    if (data_.size() != rows * cols) {
        throw ShapeError("matrix data has " + std::to_string(data_.size()) +
                         " entries, expected " + std::to_string(rows * cols));
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw ShapeError("matmul: lhs is " + dims(a) + ", rhs is " + dims(b));
    }
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

Matrix transpose(const Matrix& a) {
    Matrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out(j, i) = a(i, j);
        }
    }
    return out;
}

Matrix solve_linear(const Matrix& a, const Matrix& b) {
    if (a.rows() != a.cols()) {
        throw ShapeError("solve_linear: coefficient matrix is " + dims(a) + ", must be square");
    }
    if (b.rows() != a.rows()) {
        throw ShapeError("solve_linear: a is " + dims(a) + " but b is " + dims(b));
    }
    const std::size_t n = a.rows();

    Matrix lu = a;
    std::vector<std::size_t> row(n);  // row permutation, row[k] = original index
    std::iota(row.begin(), row.end(), 0);

    std::vector<double> row_scale(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s = std::max(s, std::abs(a(i, j)));
        if (s == 0.0) throw SingularityError(i, 0.0);
        row_scale[i] = s;
    }

    for (std::size_t k = 0; k < n; ++k) {
        // Scaled partial pivoting: compare candidates relative to their row's
        // original magnitude so the choice is invariant under row scaling.
        std::size_t best = k;
        double best_ratio = std::abs(lu(row[k], k)) / row_scale[row[k]];
        for (std::size_t i = k + 1; i < n; ++i) {
            const double ratio = std::abs(lu(row[i], k)) / row_scale[row[i]];
            if (ratio > best_ratio) {
                best = i;
                best_ratio = ratio;
            }
        }
        std::swap(row[k], row[best]);

        const double pivot = lu(row[k], k);
        if (std::abs(pivot) < kSingularPivotTol * row_scale[row[k]]) {
            throw SingularityError(k, std::abs(pivot));
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = lu(row[i], k) / pivot;
            lu(row[i], k) = f;
            for (std::size_t j = k + 1; j < n; ++j) {
                lu(row[i], j) -= f * lu(row[k], j);
            }
        }
    }

    // Forward then back substitution, one right-hand side column at a time.
    Matrix x(a.rows(), b.cols());
    std::vector<double> y(n);
    for (std::size_t col = 0; col < b.cols(); ++col) {
        for (std::size_t i = 0; i < n; ++i) {
            double v = b(row[i], col);
            for (std::size_t j = 0; j < i; ++j) v -= lu(row[i], j) * y[j];
            y[i] = v;
        }
        for (std::size_t ii = n; ii-- > 0;) {
            double v = y[ii];
            for (std::size_t j = ii + 1; j < n; ++j) v -= lu(row[ii], j) * x(j, col);
            x(ii, col) = v / lu(row[ii], ii);
        }
    }
    return x;
}

Matrix add(const Matrix& a, const Matrix& b) {
    check_same_shape("add", a, b);
    Matrix out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out.data()[i] += b.data()[i];
    return out;
}

Matrix sub(const Matrix& a, const Matrix& b) {
    check_same_shape("sub", a, b);
    Matrix out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out.data()[i] -= b.data()[i];
    return out;
}

Matrix hadamard(const Matrix& a, const Matrix& b) {
    check_same_shape("hadamard", a, b);
    Matrix out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out.data()[i] *= b.data()[i];
    return out;
}

Matrix scale(const Matrix& a, double s) {
    Matrix out = a;
    for (double& v : out.data()) v *= s;
    return out;
}

double max_abs(const Matrix& a) {
    double m = 0.0;
    for (double v : a.data()) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace plunet
