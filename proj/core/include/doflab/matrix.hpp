#pragma once

#include "doflab/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace doflab {

enum class Backend { rational, floating };

std::string backend_name(Backend b);
Backend parse_backend(const std::string& name);

// Dense row-major matrix. Only the storage that matches the backend is used.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, Backend backend);

    static Matrix identity(std::size_t n, Backend backend);
    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols_if_empty = 0);
    static Matrix from_rows(const std::vector<std::vector<double>>& rows, std::size_t cols_if_empty = 0);
    static Matrix from_ints(const std::vector<std::vector<long>>& rows, std::size_t cols_if_empty = 0);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Backend backend() const { return backend_; }
    bool is_rational() const { return backend_ == Backend::rational; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& q(std::size_t r, std::size_t c) { return q_[r * cols_ + c]; }
    const Rational& q(std::size_t r, std::size_t c) const { return q_[r * cols_ + c]; }
    double& f(std::size_t r, std::size_t c) { return f_[r * cols_ + c]; }
    double f(std::size_t r, std::size_t c) const { return f_[r * cols_ + c]; }

    double value(std::size_t r, std::size_t c) const;
    bool is_zero(std::size_t r, std::size_t c) const;
    double max_abs() const;

    Matrix transpose() const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    Matrix column(std::size_t c) const { return block(0, c, rows_, 1); }
    void set_block(std::size_t r0, std::size_t c0, const Matrix& src);

    Matrix to_float() const;
    Matrix to_backend(Backend b) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Backend backend_ = Backend::floating;
    std::vector<Rational> q_;
    std::vector<double> f_;
};

// Mixed operands are promoted to floating.
Backend common_backend(const Matrix& a, const Matrix& b);
Matrix hstack(const std::vector<Matrix>& blocks);
Matrix vstack(const std::vector<Matrix>& blocks);

}  // namespace doflab
