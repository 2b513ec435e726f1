#include "doflab/exact_linalg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <utility>

namespace doflab {

namespace {

Eigen::MatrixXd to_eigen(const Matrix& m) {
    Eigen::MatrixXd e(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            e(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m.value(r, c);
    return e;
}

Matrix from_eigen(const Eigen::MatrixXd& e) {
    Matrix m(static_cast<std::size_t>(e.rows()), static_cast<std::size_t>(e.cols()), Backend::floating);
    for (Eigen::Index r = 0; r < e.rows(); ++r)
        for (Eigen::Index c = 0; c < e.cols(); ++c)
            m.f(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = e(r, c);
    return m;
}

// Bareiss elimination over integers after scaling each row by its
// denominators' lcm; row scaling does not change the rank.
std::size_t rank_rational(const Matrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<mpz_class> a(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < cols; ++c)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.q(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < cols; ++c)
            a[r * cols + c] = m.q(r, c).get_num() * (l / m.q(r, c).get_den());
    }
    auto at = [&](std::size_t r, std::size_t c) -> mpz_class& { return a[r * cols + c]; };

    std::size_t rank = 0;
    mpz_class prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && at(piv, c) == 0)
            ++piv;
        if (piv == rows)
            continue;
        if (piv != rank)
            for (std::size_t k = 0; k < cols; ++k)
                std::swap(at(piv, k), at(rank, k));
        const mpz_class p = at(rank, c);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const mpz_class f = at(r, c);
            for (std::size_t k = c + 1; k < cols; ++k) {
                mpz_class v = p * at(r, k) - f * at(rank, k);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                at(r, k) = v;
            }
            at(r, c) = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

// Gaussian elimination with full pivoting; a pivot counts when it exceeds tau.
std::size_t rank_float(const Matrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    if (rows == 0 || cols == 0)
        return 0;
    const double tau = float_tolerance(m);
    std::vector<double> a(rows * cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            a[r * cols + c] = m.value(r, c);
    std::vector<std::size_t> colperm(cols);
    for (std::size_t c = 0; c < cols; ++c)
        colperm[c] = c;
    auto at = [&](std::size_t r, std::size_t c) -> double& { return a[r * cols + colperm[c]]; };

    std::size_t rank = 0;
    const std::size_t steps = std::min(rows, cols);
    for (std::size_t k = 0; k < steps; ++k) {
        std::size_t br = k, bc = k;
        double best = -1.0;
        for (std::size_t r = k; r < rows; ++r)
            for (std::size_t c = k; c < cols; ++c) {
                const double v = std::fabs(at(r, c));
                if (v > best) {
                    best = v;
                    br = r;
                    bc = c;
                }
            }
        if (!(best > tau))
            break;
        std::swap(colperm[k], colperm[bc]);
        if (br != k)
            for (std::size_t c = 0; c < cols; ++c)
                std::swap(a[br * cols + c], a[k * cols + c]);
        const double p = at(k, k);
        for (std::size_t r = k + 1; r < rows; ++r) {
            const double f = at(r, k) / p;
            if (f == 0.0)
                continue;
            for (std::size_t c = k; c < cols; ++c)
                at(r, c) -= f * at(k, c);
        }
        ++rank;
    }
    return rank;
}

}  // namespace

double float_tolerance(const Matrix& m) {
    return static_cast<double>(std::max(m.rows(), m.cols())) * kEpsScale * m.max_abs();
}

std::size_t rank(const Matrix& m) {
    return m.is_rational() ? rank_rational(m) : rank_float(m);
}

Rref rref(const Matrix& input) {
    Matrix m = input.to_backend(Backend::rational);
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < rows; ++c) {
        std::size_t piv = row;
        while (piv < rows && sgn(m.q(piv, c)) == 0)
            ++piv;
        if (piv == rows)
            continue;
        if (piv != row)
            for (std::size_t k = 0; k < cols; ++k)
                std::swap(m.q(piv, k), m.q(row, k));
        const Rational inv = 1 / m.q(row, c);
        for (std::size_t k = c; k < cols; ++k)
            m.q(row, k) *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || sgn(m.q(r, c)) == 0)
                continue;
            const Rational f = m.q(r, c);
            for (std::size_t k = c; k < cols; ++k)
                m.q(r, k) -= f * m.q(row, k);
        }
        pivots.push_back(c);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

Matrix null_space(const Matrix& m) {
    const std::size_t cols = m.cols();
    if (m.is_rational()) {
        const Rref red = rref(m);
        std::vector<bool> is_pivot(cols, false);
        for (std::size_t p : red.pivots)
            is_pivot[p] = true;
        Matrix basis(cols, cols - red.pivots.size(), Backend::rational);
        std::size_t out = 0;
        for (std::size_t free = 0; free < cols; ++free) {
            if (is_pivot[free])
                continue;
            basis.q(free, out) = 1;
            for (std::size_t i = 0; i < red.pivots.size(); ++i)
                basis.q(red.pivots[i], out) = -red.reduced.q(i, free);
            ++out;
        }
        return basis;
    }

    const std::size_t r = rank(m);
    const std::size_t nullity = cols - r;
    if (nullity == 0)
        return Matrix(cols, 0, Backend::floating);
    if (r == 0)
        return Matrix::identity(cols, Backend::floating);
    Eigen::MatrixXd e = to_eigen(m);
    if (e.rows() < e.cols()) {
        Eigen::MatrixXd padded = Eigen::MatrixXd::Zero(e.cols(), e.cols());
        padded.topRows(e.rows()) = e;
        e = padded;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(e, Eigen::ComputeFullV);
    const Eigen::MatrixXd v = svd.matrixV().rightCols(static_cast<Eigen::Index>(nullity));
    return from_eigen(v);
}

Matrix orthonormal_column_basis(const Matrix& m, std::size_t r) {
    if (r == 0)
        return Matrix(m.rows(), 0, Backend::floating);
    Eigen::MatrixXd e = to_eigen(m);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(e, Eigen::ComputeThinU);
    return from_eigen(svd.matrixU().leftCols(static_cast<Eigen::Index>(r)));
}

}  // namespace doflab
