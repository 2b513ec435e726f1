#include "doflab/subspace.hpp"

#include "doflab/exact_linalg.hpp"
#include "doflab/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace doflab {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient())
        throw std::invalid_argument("ambient dimension mismatch");
}

Matrix canonical_basis(const Matrix& columns) {
    if (columns.is_rational()) {
        const Rref red = rref(columns.transpose());
        return red.reduced.block(0, 0, red.pivots.size(), columns.rows()).transpose();
    }
    return orthonormal_column_basis(columns, rank(columns));
}

template <typename T>
Subspace columns_to_subspace(std::size_t ambient, const std::vector<std::vector<T>>& vectors, Backend b) {
    Matrix m(ambient, vectors.size(), b);
    for (std::size_t c = 0; c < vectors.size(); ++c) {
        if (vectors[c].size() != ambient)
            throw std::invalid_argument("vector length does not match ambient dimension");
        for (std::size_t r = 0; r < ambient; ++r) {
            if constexpr (std::is_same_v<T, double>)
                m.f(r, c) = vectors[c][r];
            else
                m.q(r, c) = Rational(vectors[c][r]);
        }
    }
    return Subspace::span(m);
}

Subspace promote(const Subspace& s, Backend b) {
    return s.backend() == b ? s : Subspace::span(s.basis().to_backend(b));
}

Backend common(const Subspace& a, const Subspace& b) {
    return (a.backend() == Backend::rational && b.backend() == Backend::rational) ? Backend::rational
                                                                                  : Backend::floating;
}

}  // namespace

Subspace::Subspace(std::size_t ambient, Backend backend) : basis_(ambient, 0, backend) {}

Subspace Subspace::span(const Matrix& columns) {
    Subspace s;
    s.basis_ = columns.cols() == 0 ? Matrix(columns.rows(), 0, columns.backend()) : canonical_basis(columns);
    return s;
}

Subspace Subspace::full(std::size_t ambient, Backend backend) {
    return span(Matrix::identity(ambient, backend));
}

Subspace from_columns(std::size_t ambient, const std::vector<std::vector<Rational>>& vectors) {
    return columns_to_subspace(ambient, vectors, Backend::rational);
}

Subspace from_columns(std::size_t ambient, const std::vector<std::vector<double>>& vectors) {
    return columns_to_subspace(ambient, vectors, Backend::floating);
}

Subspace from_columns(std::size_t ambient, const std::vector<std::vector<long>>& vectors) {
    return columns_to_subspace(ambient, vectors, Backend::rational);
}

Subspace complement(const Subspace& s) {
    if (s.dim() == 0)
        return Subspace::full(s.ambient(), s.backend());
    return Subspace::span(null_space(s.basis().transpose()));
}

Subspace union_span(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b);
    return Subspace::span(hstack({a.basis(), b.basis()}));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b);
    const Backend be = common(a, b);
    if (a.dim() == 0 || b.dim() == 0)
        return Subspace(a.ambient(), be);
    if (be == Backend::rational)
        return complement(union_span(complement(a), complement(b)));
    const Subspace fa = promote(a, be);
    const Subspace fb = promote(b, be);
    const Matrix coeffs = null_space(hstack({fa.basis(), -fb.basis()}));
    if (coeffs.cols() == 0)
        return Subspace(a.ambient(), be);
    return Subspace::span(fa.basis() * coeffs.block(0, 0, fa.dim(), coeffs.cols()));
}

Subspace subtract(const Subspace& a, const Subspace& b) {
    const Subspace common_part = intersect(a, b);
    if (common_part.dim() == 0)
        return promote(a, common_part.backend());
    return intersect(a, complement(common_part));
}

bool contains(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b);
    if (b.dim() == 0)
        return true;
    return rank(hstack({a.basis(), b.basis()})) == a.dim();
}

bool span_equal(const Subspace& a, const Subspace& b) {
    return a.dim() == b.dim() && contains(a, b);
}

Subspace map_through(const Subspace& s, const Matrix& m) {
    if (m.cols() != s.ambient())
        throw std::invalid_argument("map_through shape mismatch");
    if (s.dim() == 0)
        return Subspace(m.rows(), common_backend(m, s.basis()));
    return Subspace::span(m * s.basis());
}

Subspace random_generic(std::size_t ambient, std::size_t dim, std::uint64_t seed, Backend backend) {
    if (dim > ambient)
        throw std::invalid_argument("generic subspace dimension exceeds ambient dimension");
    Rng rng(seed);
    Matrix m(ambient, dim, backend);
    for (std::size_t c = 0; c < dim; ++c)
        for (std::size_t r = 0; r < ambient; ++r) {
            const double z = rng.normal();
            if (backend == Backend::rational)
                m.q(r, c) = Rational(static_cast<long>(std::lround(z * 1024.0)), 1024);
            else
                m.f(r, c) = z;
        }
    if (backend == Backend::rational)
        for (std::size_t c = 0; c < dim; ++c)
            for (std::size_t r = 0; r < ambient; ++r)
                m.q(r, c).canonicalize();
    return Subspace::span(m);
}

double collinearity_error(const Subspace& line, const std::vector<double>& v) {
    if (line.dim() != 1 || v.size() != line.ambient())
        throw std::invalid_argument("collinearity check needs a line and a vector of matching length");
    double nu = 0.0, nv = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        nu += line.basis().value(i, 0) * line.basis().value(i, 0);
        nv += v[i] * v[i];
    }
    nu = std::sqrt(nu);
    nv = std::sqrt(nv);
    double dminus = 0.0, dplus = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double u = line.basis().value(i, 0) / nu;
        const double w = v[i] / nv;
        dminus += (u - w) * (u - w);
        dplus += (u + w) * (u + w);
    }
    return std::sqrt(std::min(dminus, dplus));
}

}  // namespace doflab
