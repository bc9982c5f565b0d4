#pragma once

#include "pfaff/error.hpp"
#include "pfaff/polynomial.hpp"
#include "pfaff/rational.hpp"
#include "pfaff/rational_function.hpp"

#include <string>
#include <utility>
#include <vector>

namespace pfaff {

/// Dense row-major matrix.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    /// Builds from a list of rows; every row must have `cols` entries.
    static Matrix from_rows(std::vector<std::vector<T>> rows, std::size_t cols) {
        Matrix m;
        m.rows_ = rows.size();
        m.cols_ = cols;
        m.data_.reserve(m.rows_ * cols);
        for (auto& r : rows) {
            if (r.size() != cols) throw DimensionError("ragged matrix rows");
            for (auto& v : r) m.data_.push_back(std::move(v));
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using PolynomialMatrix = Matrix<Polynomial>;
using FunctionMatrix = Matrix<RationalFunction>;

} // namespace pfaff
