#include "epsring/tensor.hpp"

namespace epsring {

namespace {

Subspace full_space(const FieldSpec& spec, std::size_t n) { return Subspace::full(spec, n); }

}  // namespace

Vec TensorOverBase::ambient_tensor(const Vec& a, const Vec& b) const {
    Vec out = zero_vec(alg_.field(), n_ * n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < n_; ++j)
            if (!b[j].is_zero()) out[i * n_ + j] += a[i] * b[j];
    }
    return out;
}

Vec TensorOverBase::mult_ambient(const Vec& ambient) const {
    Vec out = zero_vec(alg_.field(), n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            const Scalar& c = ambient[i * n_ + j];
            if (!c.is_zero()) add_scaled(out, alg_.basis_product(i, j), c);
        }
    return out;
}

TensorOverBase::TensorOverBase(const StructureAlgebra& s, const Subspace& r_basis)
    : alg_(s),
      n_(s.dim()),
      relations_(s.field(), n_ * n_),
      section_(full_space(s.field(), 0), Subspace(s.field(), 0)) {
    const FieldSpec& spec = alg_.field();
    if (r_basis.ambient_dim() != n_) throw Error("base subring ambient mismatch");
    if (!r_basis.contains(alg_.unit()))
        throw ValidationError("base subring does not contain the unit");
    for (const auto& a : r_basis.basis())
        for (const auto& b : r_basis.basis())
            if (!r_basis.contains(alg_.multiply(a, b)))
                throw ValidationError("base is not closed under multiplication");

    RowReducer red(spec, n_ * n_);
    for (std::size_t i = 0; i < n_; ++i) {
        Vec ei = unit_vec(spec, n_, i);
        for (const auto& r : r_basis.basis()) {
            Vec sr = alg_.multiply(ei, r);
            for (std::size_t k = 0; k < n_; ++k) {
                Vec rel = zero_vec(spec, n_ * n_);
                for (std::size_t a = 0; a < n_; ++a)
                    if (!sr[a].is_zero()) rel[a * n_ + k] += sr[a];
                Vec rt = alg_.multiply(r, unit_vec(spec, n_, k));
                for (std::size_t b = 0; b < n_; ++b)
                    if (!rt[b].is_zero()) rel[i * n_ + b] -= rt[b];
                if (!is_zero_vec(rel)) {
                    // the multiplication map must vanish on every relation
                    if (!is_zero_vec(mult_ambient(rel)))
                        throw TheoremViolation("multiplication map does not kill a relation");
                    red.insert(std::move(rel));
                }
            }
        }
    }
    Subspace rel_space(spec, n_ * n_);
    {
        std::vector<Vec> rows = red.rows();
        rel_space = Subspace::span(spec, n_ * n_, rows);
    }
    relations_ = rel_space;
    section_ = QuotientSection(full_space(spec, n_ * n_), relations_);
    const std::size_t q = section_.dim();

    // both actions must stabilize the relation space
    for (std::size_t i = 0; i < n_; ++i) {
        Vec ei = unit_vec(spec, n_, i);
        for (const auto& w : relations_.basis()) {
            Vec lw = zero_vec(spec, n_ * n_);
            Vec rw = zero_vec(spec, n_ * n_);
            for (std::size_t a = 0; a < n_; ++a)
                for (std::size_t b = 0; b < n_; ++b) {
                    const Scalar& c = w[a * n_ + b];
                    if (c.is_zero()) continue;
                    const Vec& ia = alg_.basis_product(i, a);
                    for (std::size_t c2 = 0; c2 < n_; ++c2)
                        if (!ia[c2].is_zero()) lw[c2 * n_ + b] += ia[c2] * c;
                    const Vec& bi = alg_.basis_product(b, i);
                    for (std::size_t c2 = 0; c2 < n_; ++c2)
                        if (!bi[c2].is_zero()) rw[a * n_ + c2] += bi[c2] * c;
                }
            if (!relations_.contains(lw) || !relations_.contains(rw))
                throw TheoremViolation("module action does not descend to the quotient");
        }
    }

    mult_ = Matrix(spec, n_, q);
    left_.assign(n_, Matrix(spec, q, q));
    right_.assign(n_, Matrix(spec, q, q));
    for (std::size_t k = 0; k < q; ++k) {
        Vec rep = section_.coset_basis()[k];
        Vec mk = mult_ambient(rep);
        for (std::size_t c = 0; c < n_; ++c) mult_.at(c, k) = mk[c];
        for (std::size_t i = 0; i < n_; ++i) {
            Vec lw = zero_vec(spec, n_ * n_);
            Vec rw = zero_vec(spec, n_ * n_);
            for (std::size_t a = 0; a < n_; ++a)
                for (std::size_t b = 0; b < n_; ++b) {
                    const Scalar& c = rep[a * n_ + b];
                    if (c.is_zero()) continue;
                    const Vec& ia = alg_.basis_product(i, a);
                    for (std::size_t c2 = 0; c2 < n_; ++c2)
                        if (!ia[c2].is_zero()) lw[c2 * n_ + b] += ia[c2] * c;
                    const Vec& bi = alg_.basis_product(b, i);
                    for (std::size_t c2 = 0; c2 < n_; ++c2)
                        if (!bi[c2].is_zero()) rw[a * n_ + c2] += bi[c2] * c;
                }
            Vec lq = section_.project(lw);
            Vec rq = section_.project(rw);
            for (std::size_t c = 0; c < q; ++c) {
                left_[i].at(c, k) = lq[c];
                right_[i].at(c, k) = rq[c];
            }
        }
    }
}

Vec TensorOverBase::simple_tensor(const Vec& a, const Vec& b) const {
    return section_.project(ambient_tensor(a, b));
}

Vec TensorOverBase::mult(const Vec& coords) const { return mult_.apply(coords); }

Vec TensorOverBase::act_left(const Vec& s, const Vec& coords) const {
    Vec out = zero_vec(alg_.field(), dim());
    for (std::size_t i = 0; i < n_; ++i)
        if (!s[i].is_zero()) add_scaled(out, left_[i].apply(coords), s[i]);
    return out;
}

Vec TensorOverBase::act_right(const Vec& coords, const Vec& s) const {
    Vec out = zero_vec(alg_.field(), dim());
    for (std::size_t i = 0; i < n_; ++i)
        if (!s[i].is_zero()) add_scaled(out, right_[i].apply(coords), s[i]);
    return out;
}

}  // namespace epsring
