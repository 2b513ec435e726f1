#include "doflab/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace doflab {

std::string backend_name(Backend b) {
    return b == Backend::rational ? "rational" : "float";
}

Backend parse_backend(const std::string& name) {
    if (name == "rational")
        return Backend::rational;
    if (name == "float")
        return Backend::floating;
    throw std::invalid_argument("unknown backend: " + name);
}

Matrix::Matrix(std::size_t rows, std::size_t cols, Backend backend)
    : rows_(rows), cols_(cols), backend_(backend) {
    if (backend == Backend::rational)
        q_.assign(rows * cols, Rational(0));
    else
        f_.assign(rows * cols, 0.0);
}

Matrix Matrix::identity(std::size_t n, Backend backend) {
    Matrix m(n, n, backend);
    for (std::size_t i = 0; i < n; ++i) {
        if (backend == Backend::rational)
            m.q(i, i) = 1;
        else
            m.f(i, i) = 1.0;
    }
    return m;
}

namespace {

template <typename T>
Matrix build_from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols_if_empty, Backend b) {
    std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
    Matrix m(rows.size(), cols, b);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw std::invalid_argument("ragged row in matrix literal");
        for (std::size_t c = 0; c < cols; ++c) {
            if constexpr (std::is_same_v<T, double>)
                m.f(r, c) = rows[r][c];
            else
                m.q(r, c) = Rational(rows[r][c]);
        }
    }
    return m;
}

}  // namespace

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols_if_empty) {
    return build_from_rows(rows, cols_if_empty, Backend::rational);
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows, std::size_t cols_if_empty) {
    return build_from_rows(rows, cols_if_empty, Backend::floating);
}

Matrix Matrix::from_ints(const std::vector<std::vector<long>>& rows, std::size_t cols_if_empty) {
    return build_from_rows(rows, cols_if_empty, Backend::rational);
}

double Matrix::value(std::size_t r, std::size_t c) const {
    return backend_ == Backend::rational ? q(r, c).get_d() : f(r, c);
}

bool Matrix::is_zero(std::size_t r, std::size_t c) const {
    return backend_ == Backend::rational ? sgn(q(r, c)) == 0 : f(r, c) == 0.0;
}

double Matrix::max_abs() const {
    double best = 0.0;
    if (backend_ == Backend::rational) {
        for (const auto& x : q_)
            best = std::max(best, std::fabs(x.get_d()));
    } else {
        for (double x : f_)
            best = std::max(best, std::fabs(x));
    }
    return best;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, backend_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            if (backend_ == Backend::rational)
                t.q(c, r) = q(r, c);
            else
                t.f(c, r) = f(r, c);
        }
    return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_)
        throw std::out_of_range("matrix block out of range");
    Matrix b(nr, nc, backend_);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c) {
            if (backend_ == Backend::rational)
                b.q(r, c) = q(r0 + r, c0 + c);
            else
                b.f(r, c) = f(r0 + r, c0 + c);
        }
    return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& src) {
    if (r0 + src.rows() > rows_ || c0 + src.cols() > cols_)
        throw std::out_of_range("matrix block out of range");
    const Matrix s = src.to_backend(backend_);
    for (std::size_t r = 0; r < s.rows(); ++r)
        for (std::size_t c = 0; c < s.cols(); ++c) {
            if (backend_ == Backend::rational)
                q(r0 + r, c0 + c) = s.q(r, c);
            else
                f(r0 + r, c0 + c) = s.f(r, c);
        }
}

Matrix Matrix::to_float() const {
    if (backend_ == Backend::floating)
        return *this;
    Matrix m(rows_, cols_, Backend::floating);
    for (std::size_t i = 0; i < q_.size(); ++i)
        m.f_[i] = q_[i].get_d();
    return m;
}

Matrix Matrix::to_backend(Backend b) const {
    if (b == backend_)
        return *this;
    if (b == Backend::floating)
        return to_float();
    Matrix m(rows_, cols_, Backend::rational);
    for (std::size_t i = 0; i < f_.size(); ++i) {
        if (!std::isfinite(f_[i]))
            throw std::invalid_argument("non-finite entry cannot become rational");
        m.q_[i] = Rational(f_[i]);
    }
    return m;
}

Backend common_backend(const Matrix& a, const Matrix& b) {
    return (a.is_rational() && b.is_rational()) ? Backend::rational : Backend::floating;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("matrix product shape mismatch");
    const Backend be = common_backend(a, b);
    const Matrix x = a.to_backend(be);
    const Matrix y = b.to_backend(be);
    Matrix out(a.rows_, b.cols_, be);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (x.is_zero(i, k))
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (be == Backend::rational)
                    out.q(i, j) += x.q(i, k) * y.q(k, j);
                else
                    out.f(i, j) += x.f(i, k) * y.f(k, j);
            }
        }
    return out;
}

Matrix operator-(const Matrix& a) {
    Matrix m(a);
    for (auto& x : m.q_)
        x = -x;
    for (auto& x : m.f_)
        x = -x;
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.backend_ == b.backend_ && a.q_ == b.q_ &&
           a.f_ == b.f_;
}

Matrix hstack(const std::vector<Matrix>& blocks) {
    if (blocks.empty())
        throw std::invalid_argument("hstack of nothing");
    std::size_t rows = blocks.front().rows();
    std::size_t cols = 0;
    Backend be = Backend::rational;
    for (const auto& b : blocks) {
        if (b.rows() != rows)
            throw std::invalid_argument("hstack row mismatch");
        cols += b.cols();
        if (!b.is_rational())
            be = Backend::floating;
    }
    Matrix out(rows, cols, be);
    std::size_t c0 = 0;
    for (const auto& b : blocks) {
        out.set_block(0, c0, b);
        c0 += b.cols();
    }
    return out;
}

Matrix vstack(const std::vector<Matrix>& blocks) {
    if (blocks.empty())
        throw std::invalid_argument("vstack of nothing");
    std::size_t cols = blocks.front().cols();
    std::size_t rows = 0;
    Backend be = Backend::rational;
    for (const auto& b : blocks) {
        if (b.cols() != cols)
            throw std::invalid_argument("vstack column mismatch");
        rows += b.rows();
        if (!b.is_rational())
            be = Backend::floating;
    }
    Matrix out(rows, cols, be);
    std::size_t r0 = 0;
    for (const auto& b : blocks) {
        out.set_block(r0, 0, b);
        r0 += b.rows();
    }
    return out;
}

}  // namespace doflab
