#include "epsring/matrix.hpp"

#include <algorithm>

namespace epsring {

Vec zero_vec(const FieldSpec& spec, std::size_t n) {
    return Vec(n, Scalar::zero(spec));
}

Vec unit_vec(const FieldSpec& spec, std::size_t n, std::size_t i) {
    Vec v = zero_vec(spec, n);
    v[i] = Scalar::one(spec);
    return v;
}

bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw Error("vector dimension mismatch");
    Vec out = a;
    for (std::size_t i = 0; i < b.size(); ++i)
        if (!b[i].is_zero()) out[i] += b[i];
    return out;
}

Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw Error("vector dimension mismatch");
    Vec out = a;
    for (std::size_t i = 0; i < b.size(); ++i)
        if (!b[i].is_zero()) out[i] -= b[i];
    return out;
}

Vec scaled(const Vec& v, const Scalar& c) {
    Vec out = v;
    for (auto& x : out)
        if (!x.is_zero()) x *= c;
    return out;
}

void add_scaled(Vec& dst, const Vec& src, const Scalar& c) {
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < src.size(); ++i)
        if (!src[i].is_zero()) dst[i] += src[i] * c;
}

Matrix::Matrix(const FieldSpec& spec, std::size_t rows, std::size_t cols)
    : spec_(spec), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(spec)) {}

Matrix Matrix::identity(const FieldSpec& spec, std::size_t n) {
    Matrix m(spec, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(spec);
    return m;
}

Matrix Matrix::from_rows(const FieldSpec& spec, std::size_t cols,
                         const std::vector<Vec>& rows) {
    Matrix m(spec, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw Error("row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Vec Matrix::row(std::size_t i) const {
    return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

Vec Matrix::apply(const Vec& x) const {
    if (x.size() != cols_) throw Error("matrix-vector dimension mismatch");
    Vec out = zero_vec(spec_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Scalar acc = Scalar::zero(spec_);
        for (std::size_t j = 0; j < cols_; ++j) {
            const Scalar& m = a_[i * cols_ + j];
            if (!m.is_zero() && !x[j].is_zero()) acc += m * x[j];
        }
        out[i] = acc;
    }
    return out;
}

Matrix Matrix::mul(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix product dimension mismatch");
    Matrix out(spec_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& m = a_[i * cols_ + k];
            if (m.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (!o.at(k, j).is_zero()) out.at(i, j) += m * o.at(k, j);
        }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(spec_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = a_[i * cols_ + j];
    return out;
}

bool Matrix::operator==(const Matrix& o) const {
    return spec_ == o.spec_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Vec RowReducer::reduce(Vec v) const {
    if (v.size() != cols_) throw Error("row length mismatch");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Scalar& c = v[pivots_[k]];
        if (c.is_zero()) continue;
        Scalar factor = -c;
        add_scaled(v, rows_[k], factor);
    }
    return v;
}

bool RowReducer::insert(Vec v) {
    v = reduce(std::move(v));
    std::size_t piv = cols_;
    for (std::size_t j = 0; j < cols_; ++j)
        if (!v[j].is_zero()) { piv = j; break; }
    if (piv == cols_) return false;
    Scalar lead = v[piv];
    if (!lead.is_one()) {
        Scalar inv = lead.inv();
        for (auto& x : v)
            if (!x.is_zero()) x *= inv;
    }
    // clear the new pivot column in existing rows
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Scalar& c = rows_[k][piv];
        if (c.is_zero()) continue;
        Scalar factor = -c;
        add_scaled(rows_[k], v, factor);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
    std::size_t idx = pos - pivots_.begin();
    pivots_.insert(pos, piv);
    rows_.insert(rows_.begin() + idx, std::move(v));
    return true;
}

Matrix rref(const Matrix& m) {
    RowReducer red(m.spec(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) red.insert(m.row(i));
    return Matrix::from_rows(m.spec(), m.cols(), red.rows());
}

Subspace::Subspace(const FieldSpec& spec, std::size_t ambient)
    : spec_(spec), ambient_(ambient) {}

Subspace Subspace::span(const FieldSpec& spec, std::size_t ambient,
                        const std::vector<Vec>& vectors) {
    RowReducer red(spec, ambient);
    for (const auto& v : vectors) red.insert(v);
    Subspace s(spec, ambient);
    s.basis_ = red.rows();
    s.pivots_ = red.pivots();
    return s;
}

Subspace Subspace::full(const FieldSpec& spec, std::size_t ambient) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < ambient; ++i) rows.push_back(unit_vec(spec, ambient, i));
    return span(spec, ambient, rows);
}

Vec Subspace::reduce(const Vec& v) const {
    if (v.size() != ambient_) throw Error("vector not in ambient space");
    Vec r = v;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        const Scalar& c = r[pivots_[k]];
        if (c.is_zero()) continue;
        Scalar factor = -c;
        add_scaled(r, basis_[k], factor);
    }
    return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    for (const auto& b : other.basis_)
        if (!contains(b)) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (ambient_ != other.ambient_ || spec_ != other.spec_)
        throw Error("subspace ambient mismatch");
    std::vector<Vec> all = basis_;
    all.insert(all.end(), other.basis_.begin(), other.basis_.end());
    return span(spec_, ambient_, all);
}

// Zassenhaus: reduce rows [v|v] for v in V and [w|0] for w in W; basis rows
// whose left half vanish carry an intersection basis in the right half.
Subspace Subspace::intersect(const Subspace& other) const {
    if (ambient_ != other.ambient_ || spec_ != other.spec_)
        throw Error("subspace ambient mismatch");
    RowReducer red(spec_, 2 * ambient_);
    for (const auto& v : basis_) {
        Vec r = v;
        r.insert(r.end(), v.begin(), v.end());
        red.insert(std::move(r));
    }
    for (const auto& w : other.basis_) {
        Vec r = w;
        r.resize(2 * ambient_, Scalar::zero(spec_));
        red.insert(std::move(r));
    }
    std::vector<Vec> inter;
    for (const auto& row : red.rows()) {
        bool left_zero = true;
        for (std::size_t j = 0; j < ambient_; ++j)
            if (!row[j].is_zero()) { left_zero = false; break; }
        if (left_zero) inter.emplace_back(row.begin() + ambient_, row.end());
    }
    return span(spec_, ambient_, inter);
}

bool Subspace::operator==(const Subspace& other) const {
    return spec_ == other.spec_ && ambient_ == other.ambient_ && basis_ == other.basis_;
}

std::optional<AffineSolution> solve_affine(const Matrix& a, const Vec& b) {
    if (a.rows() != b.size()) throw Error("solve dimension mismatch");
    const std::size_t n = a.cols();
    RowReducer red(a.spec(), n + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Vec row = a.row(i);
        row.push_back(b[i]);
        red.insert(std::move(row));
    }
    Vec particular = zero_vec(a.spec(), n);
    for (std::size_t k = 0; k < red.rank(); ++k) {
        if (red.pivots()[k] == n) return std::nullopt;  // pivot in the rhs column
        particular[red.pivots()[k]] = red.rows()[k][n];
    }
    // kernel from the coefficient part of the echelon rows
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : red.pivots()) is_pivot[p] = true;
    std::vector<Vec> kern;
    for (std::size_t j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        Vec v = zero_vec(a.spec(), n);
        v[j] = Scalar::one(a.spec());
        for (std::size_t k = 0; k < red.rank(); ++k)
            v[red.pivots()[k]] = -red.rows()[k][j];
        kern.push_back(std::move(v));
    }
    return AffineSolution{std::move(particular), Subspace::span(a.spec(), n, kern)};
}

Subspace kernel(const Matrix& a) {
    auto sol = solve_affine(a, zero_vec(a.spec(), a.rows()));
    return sol->kernel;
}

std::optional<Vec> infeasibility_certificate(const Matrix& a, const Vec& b) {
    // lambda^T a = 0, lambda^T b = 1 as a system in lambda
    Matrix at = a.transpose();
    Matrix sys(a.spec(), at.rows() + 1, a.rows());
    for (std::size_t i = 0; i < at.rows(); ++i)
        for (std::size_t j = 0; j < at.cols(); ++j) sys.at(i, j) = at.at(i, j);
    for (std::size_t j = 0; j < b.size(); ++j) sys.at(at.rows(), j) = b[j];
    Vec rhs = zero_vec(a.spec(), at.rows() + 1);
    rhs.back() = Scalar::one(a.spec());
    auto sol = solve_affine(sys, rhs);
    if (!sol) return std::nullopt;
    return sol->particular;
}

QuotientSection::QuotientSection(const Subspace& v, const Subspace& w) : w_(w) {
    if (!v.contains(w)) throw Error("quotient: not a subspace of the given space");
    RowReducer red(v.spec(), v.ambient_dim());
    for (const auto& b : v.basis()) {
        Vec r = w.reduce(b);
        red.insert(std::move(r));
    }
    coset_basis_ = red.rows();
    coset_pivots_ = red.pivots();
}

Vec QuotientSection::project(const Vec& x) const {
    Vec r = w_.reduce(x);
    Vec coords = zero_vec(w_.spec(), coset_basis_.size());
    for (std::size_t k = 0; k < coset_basis_.size(); ++k) {
        const Scalar& c = r[coset_pivots_[k]];
        if (c.is_zero()) continue;
        coords[k] = c;
        Scalar factor = -c;
        add_scaled(r, coset_basis_[k], factor);
    }
    if (!is_zero_vec(r)) throw Error("quotient projection: vector outside the space");
    return coords;
}

Vec QuotientSection::lift(const Vec& coords) const {
    if (coords.size() != coset_basis_.size()) throw Error("lift dimension mismatch");
    Vec out = zero_vec(w_.spec(), w_.ambient_dim());
    for (std::size_t k = 0; k < coords.size(); ++k) add_scaled(out, coset_basis_[k], coords[k]);
    return out;
}

}  // namespace epsring
