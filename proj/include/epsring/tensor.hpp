#pragma once

#include "epsring/algebra.hpp"

namespace epsring {

/// Model of S (x)_R S as a quotient of S (x)_k S by the balancing relations
/// (s r) (x) t - s (x) (r t). Ambient coordinates index basis pairs, entry
/// (a, b) at a*n + b. The multiplication map and both S-actions are
/// precomputed on the quotient.
class TensorOverBase {
public:
    TensorOverBase(const StructureAlgebra& s, const Subspace& r_basis);

    const StructureAlgebra& algebra() const { return alg_; }
    std::size_t ambient_dim() const { return n_ * n_; }
    std::size_t dim() const { return section_.dim(); }
    const Subspace& relations() const { return relations_; }

    Vec project(const Vec& ambient) const { return section_.project(ambient); }
    Vec lift(const Vec& coords) const { return section_.lift(coords); }
    // class of a (x) b
    Vec simple_tensor(const Vec& a, const Vec& b) const;

    // multiplication map m(a (x) b) = a b, quotient coords -> S coords
    Vec mult(const Vec& coords) const;
    // left and right S-module actions on the quotient
    Vec act_left(const Vec& s, const Vec& coords) const;
    Vec act_right(const Vec& coords, const Vec& s) const;

private:
    Vec ambient_tensor(const Vec& a, const Vec& b) const;
    Vec mult_ambient(const Vec& ambient) const;

    StructureAlgebra alg_;
    std::size_t n_;
    Subspace relations_;
    QuotientSection section_;
    Matrix mult_;                 // n x q
    std::vector<Matrix> left_;    // per basis element, q x q
    std::vector<Matrix> right_;
};

}  // namespace epsring
