#pragma once

#include <optional>
#include <vector>

#include "epsring/scalar.hpp"

namespace epsring {

using Vec = std::vector<Scalar>;

Vec zero_vec(const FieldSpec& spec, std::size_t n);
Vec unit_vec(const FieldSpec& spec, std::size_t n, std::size_t i);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scaled(const Vec& v, const Scalar& c);
// dst += c * src, skipping zero entries of src.
void add_scaled(Vec& dst, const Vec& src, const Scalar& c);

/// Dense row-major matrix over an exact field.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(const FieldSpec& spec, std::size_t rows, std::size_t cols);
    static Matrix identity(const FieldSpec& spec, std::size_t n);
    static Matrix from_rows(const FieldSpec& spec, std::size_t cols,
                            const std::vector<Vec>& rows);

    const FieldSpec& spec() const { return spec_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    Vec row(std::size_t i) const;

    Vec apply(const Vec& x) const;  // A * x
    Matrix mul(const Matrix& o) const;
    Matrix transpose() const;

    bool operator==(const Matrix& o) const;

private:
    FieldSpec spec_;
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

/// Incremental reduced-row-echelon basis. Rows are kept fully reduced and
/// sorted by pivot column, so the row list is the canonical RREF of the
/// span at every point.
class RowReducer {
public:
    RowReducer(const FieldSpec& spec, std::size_t cols) : spec_(spec), cols_(cols) {}

    // Reduce v against the basis and absorb the residual. Returns true when
    // the rank grew.
    bool insert(Vec v);
    // Residual of v after eliminating all pivot columns.
    Vec reduce(Vec v) const;
    bool contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

    const FieldSpec& spec() const { return spec_; }
    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

private:
    FieldSpec spec_;
    std::size_t cols_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;  // ascending
};

Matrix rref(const Matrix& m);

/// A linear subspace of k^n, stored as the RREF basis of its span. Equality
/// of subspaces is entry-wise equality of the stored bases.
class Subspace {
public:
    Subspace() : ambient_(0) {}
    Subspace(const FieldSpec& spec, std::size_t ambient);  // zero space
    static Subspace span(const FieldSpec& spec, std::size_t ambient,
                         const std::vector<Vec>& vectors);
    static Subspace full(const FieldSpec& spec, std::size_t ambient);

    const FieldSpec& spec() const { return spec_; }
    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    Vec reduce(const Vec& v) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;
    bool operator==(const Subspace& other) const;

private:
    FieldSpec spec_;
    std::size_t ambient_;
    std::vector<Vec> basis_;
    std::vector<std::size_t> pivots_;
};

struct AffineSolution {
    Vec particular;
    Subspace kernel;
};

// Solve a x = b exactly; nullopt when b is outside the column space.
std::optional<AffineSolution> solve_affine(const Matrix& a, const Vec& b);

Subspace kernel(const Matrix& a);

// Functional lambda with lambda^T a = 0 and lambda^T b = 1; exists exactly
// when a x = b is infeasible.
std::optional<Vec> infeasibility_certificate(const Matrix& a, const Vec& b);

/// Section data for v/w: coset representatives plus the projection
/// v -> coordinates over them, whose kernel is exactly w.
class QuotientSection {
public:
    QuotientSection(const Subspace& v, const Subspace& w);  // requires w <= v

    std::size_t dim() const { return coset_basis_.size(); }
    const std::vector<Vec>& coset_basis() const { return coset_basis_; }
    // Coordinates of x over the coset basis; throws if x is outside v.
    Vec project(const Vec& x) const;
    // Lift coordinates back to a representative in v.
    Vec lift(const Vec& coords) const;

private:
    Subspace w_;
    std::vector<Vec> coset_basis_;        // RREF rows
    std::vector<std::size_t> coset_pivots_;
};

}  // namespace epsring
