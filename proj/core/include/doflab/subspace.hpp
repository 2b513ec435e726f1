#pragma once

#include "doflab/matrix.hpp"

#include <cstdint>
#include <vector>

namespace doflab {

// A subspace of R^ambient held as a canonical basis (columns): the transposed
// nonzero rows of the RREF on the rational backend, orthonormal columns on the
// float backend.
class Subspace {
public:
    Subspace() = default;
    Subspace(std::size_t ambient, Backend backend);  // the zero subspace

    static Subspace span(const Matrix& columns);
    static Subspace full(std::size_t ambient, Backend backend);

    std::size_t ambient() const { return basis_.rows(); }
    std::size_t dim() const { return basis_.cols(); }
    Backend backend() const { return basis_.backend(); }
    const Matrix& basis() const { return basis_; }

    // Basis vectors as rows (dim x ambient), the form used for genie rows.
    Matrix rows() const { return basis_.transpose(); }

private:
    Matrix basis_;
};

Subspace from_columns(std::size_t ambient, const std::vector<std::vector<Rational>>& vectors);
Subspace from_columns(std::size_t ambient, const std::vector<std::vector<double>>& vectors);
Subspace from_columns(std::size_t ambient, const std::vector<std::vector<long>>& vectors);

Subspace complement(const Subspace& s);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace subtract(const Subspace& a, const Subspace& b);
Subspace union_span(const Subspace& a, const Subspace& b);
bool contains(const Subspace& a, const Subspace& b);
bool span_equal(const Subspace& a, const Subspace& b);
Subspace map_through(const Subspace& s, const Matrix& m);

// `dim` i.i.d. standard-normal vectors from Rng(seed). On the rational backend
// each draw is rounded to the grid 2^-10 so the entries stay short exact
// rationals.
Subspace random_generic(std::size_t ambient, std::size_t dim, std::uint64_t seed,
                        Backend backend = Backend::floating);

// Distance between a 1-dim subspace and the line through v after unit
// normalization, minimized over the sign: min(|u - w|, |u + w|).
double collinearity_error(const Subspace& line, const std::vector<double>& v);

}  // namespace doflab
