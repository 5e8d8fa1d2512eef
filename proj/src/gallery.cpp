#include "epsring/gallery.hpp"

#include <algorithm>

namespace epsring {

namespace {

// positions of the 3x3 block pattern; comps = number of F x F coordinates
// kept at that position (2 for A, 1 for the ideal B = F x {0})
struct BlockSpec {
    int row, col;
    int comps;
};

GradedRing dade_like(const FieldSpec& field, bool restrict_off_diagonal) {
    // A = F x F with basis a1 = (1,0), a2 = (0,1); B = F x {0} = span{a1}
    const std::vector<std::pair<int, int>> diag_deg0 = {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}};
    const std::vector<std::pair<int, int>> off_deg1 = {{0, 2}, {1, 2}, {2, 0}, {2, 1}};
    std::vector<BlockSpec> blocks;
    for (auto [r, c] : diag_deg0) blocks.push_back({r, c, 2});
    for (auto [r, c] : off_deg1) blocks.push_back({r, c, restrict_off_diagonal ? 1 : 2});

    std::size_t dim = 0;
    for (const auto& b : blocks) dim += b.comps;
    AlgebraBuilder builder(field, dim);

    // index of (row, col, component)
    auto index_of = [&](int r, int c, int comp) -> int {
        std::size_t at = 0;
        for (const auto& b : blocks) {
            if (b.row == r && b.col == c) return comp < b.comps ? static_cast<int>(at) + comp : -1;
            at += b.comps;
        }
        return -1;
    };

    std::size_t at_i = 0;
    for (const auto& bi : blocks) {
        for (int ci = 0; ci < bi.comps; ++ci) {
            std::size_t at_j = 0;
            for (const auto& bj : blocks) {
                for (int cj = 0; cj < bj.comps; ++cj) {
                    // (e_{r,c} x a_ci)(e_{r',c'} x a_cj) = delta e_{r,c'} x (a_ci a_cj)
                    if (bi.col == bj.row && ci == cj) {
                        int k = index_of(bi.row, bj.col, ci);
                        if (k < 0)
                            throw TheoremViolation("block pattern is not closed");
                        builder.add(at_i + ci, at_j + cj, static_cast<std::size_t>(k), 1);
                    }
                }
                at_j += bj.comps;
            }
        }
        at_i += bi.comps;
    }
    for (auto [r, c] : diag_deg0)
        if (r == c)
            for (int comp = 0; comp < 2; ++comp)
                builder.unit[index_of(r, c, comp)] = Scalar::one(field);

    std::vector<GroupElt> degrees;
    for (const auto& b : blocks) {
        bool off = (b.row == 2) != (b.col == 2);
        for (int comp = 0; comp < b.comps; ++comp) degrees.emplace_back(off ? 1 : 0);
    }
    return GradedRing(builder.build(), GradingGroup::cyclic(2), std::move(degrees));
}

}  // namespace

GradedRing dade_modified(const FieldSpec& field) { return dade_like(field, true); }

GradedRing dade_original(const FieldSpec& field) { return dade_like(field, false); }

void validate_context(const MoritaContext& ctx) {
    auto fail = [](const std::string& what) {
        throw ValidationError("morita context: " + what);
    };
    const FieldSpec& spec = ctx.a.field();
    if (!ctx.a.validate().ok() || !ctx.b.validate().ok()) fail("base algebras invalid");
    const std::size_t da = ctx.a.dim(), db = ctx.b.dim(), dm = ctx.dim_m, dn = ctx.dim_n;
    if (ctx.m_left.size() != da || ctx.m_right.size() != db || ctx.n_left.size() != db ||
        ctx.n_right.size() != da)
        fail("action table sizes");

    auto act = [&](const std::vector<Matrix>& mats, const Vec& coeffs, const Vec& v) {
        Vec out = zero_vec(spec, v.size());
        for (std::size_t i = 0; i < mats.size(); ++i)
            if (!coeffs[i].is_zero()) add_scaled(out, mats[i].apply(v), coeffs[i]);
        return out;
    };

    // unit acts as the identity
    for (std::size_t k = 0; k < dm; ++k) {
        Vec ek = unit_vec(spec, dm, k);
        if (act(ctx.m_left, ctx.a.unit(), ek) != ek) fail("1_A does not fix M");
        if (act(ctx.m_right, ctx.b.unit(), ek) != ek) fail("1_B does not fix M");
    }
    for (std::size_t k = 0; k < dn; ++k) {
        Vec ek = unit_vec(spec, dn, k);
        if (act(ctx.n_left, ctx.b.unit(), ek) != ek) fail("1_B does not fix N");
        if (act(ctx.n_right, ctx.a.unit(), ek) != ek) fail("1_A does not fix N");
    }
    // associativity of the module actions
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) {
            Matrix prod(spec, dm, dm);
            const Vec& ab = ctx.a.basis_product(i, j);
            for (std::size_t c = 0; c < da; ++c)
                if (!ab[c].is_zero())
                    for (std::size_t x = 0; x < dm; ++x)
                        for (std::size_t y = 0; y < dm; ++y)
                            prod.at(x, y) += ctx.m_left[c].at(x, y) * ab[c];
            if (!(prod == ctx.m_left[i].mul(ctx.m_left[j]))) fail("A-action on M not associative");
        }
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j < db; ++j) {
            Matrix prod(spec, dm, dm);
            const Vec& bb = ctx.b.basis_product(i, j);
            for (std::size_t c = 0; c < db; ++c)
                if (!bb[c].is_zero())
                    for (std::size_t x = 0; x < dm; ++x)
                        for (std::size_t y = 0; y < dm; ++y)
                            prod.at(x, y) += ctx.m_right[c].at(x, y) * bb[c];
            // right action reverses composition
            if (!(prod == ctx.m_right[j].mul(ctx.m_right[i]))) fail("B-action on M not associative");
        }
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j)
            if (!(ctx.m_left[i].mul(ctx.m_right[j]) == ctx.m_right[j].mul(ctx.m_left[i])))
                fail("M bimodule actions do not commute");
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j < db; ++j) {
            Matrix prod(spec, dn, dn);
            const Vec& bb = ctx.b.basis_product(i, j);
            for (std::size_t c = 0; c < db; ++c)
                if (!bb[c].is_zero())
                    for (std::size_t x = 0; x < dn; ++x)
                        for (std::size_t y = 0; y < dn; ++y)
                            prod.at(x, y) += ctx.n_left[c].at(x, y) * bb[c];
            if (!(prod == ctx.n_left[i].mul(ctx.n_left[j]))) fail("B-action on N not associative");
        }
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) {
            Matrix prod(spec, dn, dn);
            const Vec& aa = ctx.a.basis_product(i, j);
            for (std::size_t c = 0; c < da; ++c)
                if (!aa[c].is_zero())
                    for (std::size_t x = 0; x < dn; ++x)
                        for (std::size_t y = 0; y < dn; ++y)
                            prod.at(x, y) += ctx.n_right[c].at(x, y) * aa[c];
            if (!(prod == ctx.n_right[j].mul(ctx.n_right[i]))) fail("A-action on N not associative");
        }
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j < da; ++j)
            if (!(ctx.n_left[i].mul(ctx.n_right[j]) == ctx.n_right[j].mul(ctx.n_left[i])))
                fail("N bimodule actions do not commute");

    if (ctx.phi.size() != dm || ctx.psi.size() != dn) fail("pairing table sizes");
    auto phi_of = [&](const Vec& m, const Vec& n) {
        Vec out = zero_vec(spec, da);
        for (std::size_t i = 0; i < dm; ++i)
            if (!m[i].is_zero())
                for (std::size_t j = 0; j < dn; ++j)
                    if (!n[j].is_zero()) add_scaled(out, ctx.phi[i][j], m[i] * n[j]);
        return out;
    };
    auto psi_of = [&](const Vec& n, const Vec& m) {
        Vec out = zero_vec(spec, db);
        for (std::size_t i = 0; i < dn; ++i)
            if (!n[i].is_zero())
                for (std::size_t j = 0; j < dm; ++j)
                    if (!m[j].is_zero()) add_scaled(out, ctx.psi[i][j], n[i] * m[j]);
        return out;
    };

    // bimodule-map and balance laws for the pairings
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t k = 0; k < dm; ++k)
            for (std::size_t l = 0; l < dn; ++l) {
                Vec am = ctx.m_left[i].apply(unit_vec(spec, dm, k));
                Vec lhs = phi_of(am, unit_vec(spec, dn, l));
                Vec rhs = ctx.a.multiply(unit_vec(spec, da, i), ctx.phi[k][l]);
                if (lhs != rhs) fail("phi is not left A-linear");
                Vec na = ctx.n_right[i].apply(unit_vec(spec, dn, l));
                lhs = phi_of(unit_vec(spec, dm, k), na);
                rhs = ctx.a.multiply(ctx.phi[k][l], unit_vec(spec, da, i));
                if (lhs != rhs) fail("phi is not right A-linear");
            }
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t k = 0; k < dm; ++k)
            for (std::size_t l = 0; l < dn; ++l) {
                Vec mb = ctx.m_right[i].apply(unit_vec(spec, dm, k));
                Vec bn = ctx.n_left[i].apply(unit_vec(spec, dn, l));
                if (phi_of(mb, unit_vec(spec, dn, l)) != phi_of(unit_vec(spec, dm, k), bn))
                    fail("phi is not B-balanced");
            }
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t l = 0; l < dn; ++l)
            for (std::size_t k = 0; k < dm; ++k) {
                Vec bn = ctx.n_left[i].apply(unit_vec(spec, dn, l));
                Vec lhs = psi_of(bn, unit_vec(spec, dm, k));
                Vec rhs = ctx.b.multiply(unit_vec(spec, db, i), ctx.psi[l][k]);
                if (lhs != rhs) fail("psi is not left B-linear");
                Vec mb = ctx.m_right[i].apply(unit_vec(spec, dm, k));
                lhs = psi_of(unit_vec(spec, dn, l), mb);
                rhs = ctx.b.multiply(ctx.psi[l][k], unit_vec(spec, db, i));
                if (lhs != rhs) fail("psi is not right B-linear");
            }
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t l = 0; l < dn; ++l)
            for (std::size_t k = 0; k < dm; ++k) {
                Vec na = ctx.n_right[i].apply(unit_vec(spec, dn, l));
                Vec am = ctx.m_left[i].apply(unit_vec(spec, dm, k));
                if (psi_of(na, unit_vec(spec, dm, k)) != psi_of(unit_vec(spec, dn, l), am))
                    fail("psi is not A-balanced");
            }

    // pairing associativity: phi(m (x) n) m' = m psi(n (x) m') and the
    // symmetric law
    for (std::size_t k = 0; k < dm; ++k)
        for (std::size_t l = 0; l < dn; ++l)
            for (std::size_t k2 = 0; k2 < dm; ++k2) {
                Vec lhs = act(ctx.m_left, ctx.phi[k][l], unit_vec(spec, dm, k2));
                Vec rhs = act(ctx.m_right, ctx.psi[l][k2], unit_vec(spec, dm, k));
                if (lhs != rhs) fail("pairing associativity on M");
            }
    for (std::size_t l = 0; l < dn; ++l)
        for (std::size_t k = 0; k < dm; ++k)
            for (std::size_t l2 = 0; l2 < dn; ++l2) {
                Vec lhs = act(ctx.n_left, ctx.psi[l][k], unit_vec(spec, dn, l2));
                Vec rhs = act(ctx.n_right, ctx.phi[k][l2], unit_vec(spec, dn, l));
                if (lhs != rhs) fail("pairing associativity on N");
            }

    // strictness: both pairings surjective
    {
        std::vector<Vec> imgs;
        for (std::size_t k = 0; k < dm; ++k)
            for (std::size_t l = 0; l < dn; ++l) imgs.push_back(ctx.phi[k][l]);
        if (Subspace::span(spec, da, imgs).dim() != da) fail("phi is not surjective");
        imgs.clear();
        for (std::size_t l = 0; l < dn; ++l)
            for (std::size_t k = 0; k < dm; ++k) imgs.push_back(ctx.psi[l][k]);
        if (Subspace::span(spec, db, imgs).dim() != db) fail("psi is not surjective");
    }
}

MoritaContext trivial_context(const FieldSpec& field) {
    AlgebraBuilder ka(field, 1);
    ka.add(0, 0, 0, 1);
    ka.unit[0] = Scalar::one(field);
    AlgebraBuilder kb(field, 1);
    kb.add(0, 0, 0, 1);
    kb.unit[0] = Scalar::one(field);
    MoritaContext ctx{ka.build(), kb.build(), 1, 1, {}, {}, {}, {}, {}, {}};
    ctx.m_left = {Matrix::identity(field, 1)};
    ctx.m_right = {Matrix::identity(field, 1)};
    ctx.n_left = {Matrix::identity(field, 1)};
    ctx.n_right = {Matrix::identity(field, 1)};
    ctx.phi = {{unit_vec(field, 1, 0)}};
    ctx.psi = {{unit_vec(field, 1, 0)}};
    return ctx;
}

MoritaContext column_row_context(const FieldSpec& field, std::size_t r) {
    // A = M_r(k) with basis e_{ij} at index i*r + j, B = k, M = columns,
    // N = rows, phi = outer product, psi = inner product
    AlgebraBuilder a(field, r * r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k)
                a.add(i * r + j, j * r + k, i * r + k, 1);
    for (std::size_t i = 0; i < r; ++i) a.unit[i * r + i] = Scalar::one(field);
    AlgebraBuilder b(field, 1);
    b.add(0, 0, 0, 1);
    b.unit[0] = Scalar::one(field);

    MoritaContext ctx{a.build(), b.build(), r, r, {}, {}, {}, {}, {}, {}};
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            Matrix m(field, r, r);
            m.at(i, j) = Scalar::one(field);  // e_ij acting on columns
            ctx.m_left.push_back(std::move(m));
            Matrix n(field, r, r);
            n.at(j, i) = Scalar::one(field);  // rows pick up the transpose
            ctx.n_right.push_back(std::move(n));
        }
    ctx.m_right = {Matrix::identity(field, r)};
    ctx.n_left = {Matrix::identity(field, r)};
    ctx.phi.assign(r, std::vector<Vec>(r, zero_vec(field, r * r)));
    ctx.psi.assign(r, std::vector<Vec>(r, zero_vec(field, 1)));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            ctx.phi[i][j][i * r + j] = Scalar::one(field);  // col_i (x) row_j -> e_ij
            if (i == j) ctx.psi[i][j][0] = Scalar::one(field);
        }
    return ctx;
}

GradedRing morita_ring(const MoritaContext& ctx) {
    validate_context(ctx);
    const FieldSpec& spec = ctx.a.field();
    const std::size_t da = ctx.a.dim(), dm = ctx.dim_m, dn = ctx.dim_n, db = ctx.b.dim();
    const std::size_t oa = 0, om = da, on = da + dm, ob = da + dm + dn;
    const std::size_t total = da + dm + dn + db;
    AlgebraBuilder bld(spec, total);

    auto put = [&](std::size_t i, std::size_t j, std::size_t off, const Vec& coords) {
        for (std::size_t c = 0; c < coords.size(); ++c)
            if (!coords[c].is_zero()) bld.add(i, j, off + c, coords[c]);
    };

    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) put(oa + i, oa + j, oa, ctx.a.basis_product(i, j));
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j < db; ++j) put(ob + i, ob + j, ob, ctx.b.basis_product(i, j));
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t k = 0; k < dm; ++k)
            put(oa + i, om + k, om, ctx.m_left[i].apply(unit_vec(spec, dm, k)));
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t l = 0; l < dn; ++l)
            put(on + l, oa + i, on, ctx.n_right[i].apply(unit_vec(spec, dn, l)));
    for (std::size_t j = 0; j < db; ++j)
        for (std::size_t k = 0; k < dm; ++k)
            put(om + k, ob + j, om, ctx.m_right[j].apply(unit_vec(spec, dm, k)));
    for (std::size_t j = 0; j < db; ++j)
        for (std::size_t l = 0; l < dn; ++l)
            put(ob + j, on + l, on, ctx.n_left[j].apply(unit_vec(spec, dn, l)));
    for (std::size_t k = 0; k < dm; ++k)
        for (std::size_t l = 0; l < dn; ++l) put(om + k, on + l, oa, ctx.phi[k][l]);
    for (std::size_t l = 0; l < dn; ++l)
        for (std::size_t k = 0; k < dm; ++k) put(on + l, om + k, ob, ctx.psi[l][k]);

    for (std::size_t c = 0; c < da; ++c) bld.unit[oa + c] = ctx.a.unit()[c];
    for (std::size_t c = 0; c < db; ++c) bld.unit[ob + c] = ctx.b.unit()[c];

    std::vector<GroupElt> degrees(total, GroupElt(0));
    for (std::size_t k = 0; k < dm; ++k) degrees[om + k] = GroupElt(1);
    for (std::size_t l = 0; l < dn; ++l) degrees[on + l] = GroupElt(-1);

    GradedRing ring(bld.build(), GradingGroup::integers(), std::move(degrees));
    auto issue = ring.algebra().validate();
    if (!issue.ok())
        throw ValidationError("morita ring is not associative: " + issue.detail);
    if (!ring.validate_grading().ok())
        throw TheoremViolation("morita ring grading is not homogeneous");
    return ring;
}

GradedRing morita_from_strong(const GradedRing& t, const GroupElt& g) {
    const auto& alg = t.algebra();
    const FieldSpec& spec = alg.field();
    GroupElt ginv = t.group().inv(g);
    if (!(t.component_product(g, ginv) == t.principal_subspace()) ||
        !(t.component_product(ginv, g) == t.principal_subspace()))
        throw Error("component pairings at the chosen degree are not surjective");

    const auto& ie = t.principal_indices();
    const auto& ig = t.component_indices(g);
    const auto& in = t.component_indices(ginv);
    StructureAlgebra base = alg.restrict_to_indices(ie);

    auto compress = [&](const Vec& v, const std::vector<std::size_t>& idx) {
        Vec out = zero_vec(spec, idx.size());
        for (std::size_t k = 0; k < idx.size(); ++k) out[k] = v[idx[k]];
        return out;
    };

    MoritaContext ctx{base, base, ig.size(), in.size(), {}, {}, {}, {}, {}, {}};
    for (std::size_t a = 0; a < ie.size(); ++a) {
        Matrix ml(spec, ig.size(), ig.size());
        Matrix nr(spec, in.size(), in.size());
        for (std::size_t k = 0; k < ig.size(); ++k) {
            Vec prod = compress(alg.basis_product(ie[a], ig[k]), ig);
            for (std::size_t c = 0; c < ig.size(); ++c) ml.at(c, k) = prod[c];
        }
        for (std::size_t l = 0; l < in.size(); ++l) {
            Vec prod = compress(alg.basis_product(in[l], ie[a]), in);
            for (std::size_t c = 0; c < in.size(); ++c) nr.at(c, l) = prod[c];
        }
        ctx.m_left.push_back(std::move(ml));
        ctx.n_right.push_back(std::move(nr));
    }
    for (std::size_t b = 0; b < ie.size(); ++b) {
        Matrix mr(spec, ig.size(), ig.size());
        Matrix nl(spec, in.size(), in.size());
        for (std::size_t k = 0; k < ig.size(); ++k) {
            Vec prod = compress(alg.basis_product(ig[k], ie[b]), ig);
            for (std::size_t c = 0; c < ig.size(); ++c) mr.at(c, k) = prod[c];
        }
        for (std::size_t l = 0; l < in.size(); ++l) {
            Vec prod = compress(alg.basis_product(ie[b], in[l]), in);
            for (std::size_t c = 0; c < in.size(); ++c) nl.at(c, l) = prod[c];
        }
        ctx.m_right.push_back(std::move(mr));
        ctx.n_left.push_back(std::move(nl));
    }
    ctx.phi.assign(ig.size(), std::vector<Vec>(in.size(), zero_vec(spec, ie.size())));
    ctx.psi.assign(in.size(), std::vector<Vec>(ig.size(), zero_vec(spec, ie.size())));
    for (std::size_t k = 0; k < ig.size(); ++k)
        for (std::size_t l = 0; l < in.size(); ++l) {
            ctx.phi[k][l] = compress(alg.basis_product(ig[k], in[l]), ie);
            ctx.psi[l][k] = compress(alg.basis_product(in[l], ig[k]), ie);
        }
    return morita_ring(ctx);
}

GradedRing group_algebra(const GradingGroup& g, const FieldSpec& field) {
    if (!g.is_finite()) throw Error("group algebras require a finite group");
    const std::size_t n = g.order();
    AlgebraBuilder bld(field, n);
    auto elems = g.elements();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            GroupElt prod = g.mul(elems[i], elems[j]);
            bld.add(i, j, static_cast<std::size_t>(prod.convert_to<std::int64_t>()), 1);
        }
    bld.unit[static_cast<std::size_t>(g.identity().convert_to<std::int64_t>())] =
        Scalar::one(field);
    std::vector<GroupElt> degrees = elems;
    return GradedRing(bld.build(), g, std::move(degrees));
}

GradedRing twisted_z2_group_algebra(const FieldSpec& field, const Scalar& lambda) {
    if (lambda.is_zero()) throw Error("twist scalar must be a unit");
    AlgebraBuilder bld(field, 2);
    bld.add(0, 0, 0, 1);
    bld.add(0, 1, 1, 1);
    bld.add(1, 0, 1, 1);
    bld.add(1, 1, 0, lambda);
    bld.unit[0] = Scalar::one(field);
    return GradedRing(bld.build(), GradingGroup::cyclic(2), {GroupElt(0), GroupElt(1)});
}

GradedRing matrix_pattern_ring(const FieldSpec& field, const GradingGroup& g,
                               const std::vector<GroupElt>& row_labels) {
    const std::size_t r = row_labels.size();
    AlgebraBuilder bld(field, r * r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k) bld.add(i * r + j, j * r + k, i * r + k, 1);
    for (std::size_t i = 0; i < r; ++i) bld.unit[i * r + i] = Scalar::one(field);
    std::vector<GroupElt> degrees;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            degrees.push_back(g.mul(row_labels[i], g.inv(row_labels[j])));
    return GradedRing(bld.build(), g, std::move(degrees));
}

GradedRing trivially_graded(StructureAlgebra alg, GradingGroup group) {
    std::vector<GroupElt> degrees(alg.dim(), group.identity());
    return GradedRing(std::move(alg), std::move(group), std::move(degrees));
}

GradedRing truncated_polynomial_ring(const FieldSpec& field, std::size_t nil) {
    AlgebraBuilder bld(field, nil);
    for (std::size_t i = 0; i < nil; ++i)
        for (std::size_t j = 0; j < nil; ++j)
            if (i + j < nil) bld.add(i, j, i + j, 1);
    bld.unit[0] = Scalar::one(field);
    std::vector<GroupElt> degrees;
    for (std::size_t i = 0; i < nil; ++i) degrees.emplace_back(i);
    return GradedRing(bld.build(), GradingGroup::integers(), std::move(degrees));
}

GradedRing upper_triangular_z2(const FieldSpec& field) {
    // basis e11, e22, e12
    AlgebraBuilder bld(field, 3);
    bld.add(0, 0, 0, 1);
    bld.add(1, 1, 1, 1);
    bld.add(0, 2, 2, 1);
    bld.add(2, 1, 2, 1);
    bld.unit[0] = Scalar::one(field);
    bld.unit[1] = Scalar::one(field);
    return GradedRing(bld.build(), GradingGroup::cyclic(2),
                      {GroupElt(0), GroupElt(0), GroupElt(1)});
}

namespace {

StructureAlgebra split_algebra(const FieldSpec& field, std::size_t m) {
    AlgebraBuilder bld(field, m);
    for (std::size_t i = 0; i < m; ++i) {
        bld.add(i, i, i, 1);
        bld.unit[i] = Scalar::one(field);
    }
    return bld.build();
}

}  // namespace

TwistedPartialAction kxk_z2_action(const FieldSpec& field) {
    TwistedPartialAction a{split_algebra(field, 2), GradingGroup::cyclic(2),
                           {GroupElt(0), GroupElt(1)}, {}, {}, {}};
    Vec one0 = add(unit_vec(field, 2, 0), unit_vec(field, 2, 1));
    Vec one1 = unit_vec(field, 2, 0);
    a.idempotent[GroupElt(0)] = one0;
    a.idempotent[GroupElt(1)] = one1;
    a.alpha[GroupElt(0)] = Matrix::identity(field, 2);
    a.alpha[GroupElt(1)] = Matrix::identity(field, 2);
    a.twist[{GroupElt(0), GroupElt(0)}] = one0;
    a.twist[{GroupElt(0), GroupElt(1)}] = one1;
    a.twist[{GroupElt(1), GroupElt(0)}] = one1;
    a.twist[{GroupElt(1), GroupElt(1)}] = one1;  // D_1 D_0 corner
    return a;
}

TwistedPartialAction restriction_action(const FieldSpec& field, const GradingGroup& g,
                                        const std::vector<std::vector<int>>& perms,
                                        const std::vector<int>& idem) {
    const std::size_t m = idem.size();
    auto elems = g.elements();
    if (perms.size() != elems.size()) throw Error("permutation table size mismatch");

    // the action lives on the corner cut by the idempotent: base coords are
    // the supporting indices of e, and 1_g marks e * beta_g(e)
    std::vector<std::size_t> keep;
    std::vector<int> pos(m, -1);
    for (std::size_t c = 0; c < m; ++c)
        if (idem[c]) {
            pos[c] = static_cast<int>(keep.size());
            keep.push_back(c);
        }
    if (keep.empty()) throw Error("corner idempotent is zero");
    const std::size_t mm = keep.size();

    TwistedPartialAction a{split_algebra(field, mm), g, elems, {}, {}, {}};
    for (std::size_t gi = 0; gi < elems.size(); ++gi) {
        Vec og = zero_vec(field, mm);
        Matrix mtx(field, mm, mm);
        for (std::size_t c = 0; c < mm; ++c) {
            int img = perms[gi][keep[c]];
            if (pos[img] >= 0) {
                mtx.at(static_cast<std::size_t>(pos[img]), c) = Scalar::one(field);
                og[static_cast<std::size_t>(pos[img])] = Scalar::one(field);
            }
        }
        a.idempotent[elems[gi]] = std::move(og);
        a.alpha[elems[gi]] = std::move(mtx);
    }
    for (const auto& gg : elems)
        for (const auto& hh : elems) {
            GroupElt gh = g.mul(gg, hh);
            Vec w = a.one(gg);
            Vec ogh = a.one(gh);
            for (std::size_t c = 0; c < mm; ++c) w[c] *= ogh[c];
            a.twist[{gg, hh}] = std::move(w);
        }
    return a;
}

TwistedPartialAction twisted_z2_partial_action(const FieldSpec& field, std::size_t m,
                                               const std::vector<int>& corner,
                                               const std::vector<int>& involution,
                                               const std::vector<long long>& weights) {
    TwistedPartialAction a{split_algebra(field, m), GradingGroup::cyclic(2),
                           {GroupElt(0), GroupElt(1)}, {}, {}, {}};
    Vec one0 = zero_vec(field, m);
    for (std::size_t c = 0; c < m; ++c) one0[c] = Scalar::one(field);
    Vec one1 = zero_vec(field, m);
    for (std::size_t c = 0; c < m; ++c)
        if (corner[c]) one1[c] = Scalar::one(field);
    a.idempotent[GroupElt(0)] = one0;
    a.idempotent[GroupElt(1)] = one1;
    a.alpha[GroupElt(0)] = Matrix::identity(field, m);
    Matrix inv_m(field, m, m);
    for (std::size_t c = 0; c < m; ++c)
        inv_m.at(static_cast<std::size_t>(involution[c]), c) = Scalar::one(field);
    a.alpha[GroupElt(1)] = std::move(inv_m);
    Vec w11 = zero_vec(field, m);
    for (std::size_t c = 0; c < m; ++c)
        if (corner[c]) w11[c] = Scalar(field, weights[c]);
    a.twist[{GroupElt(0), GroupElt(0)}] = one0;
    a.twist[{GroupElt(0), GroupElt(1)}] = one1;
    a.twist[{GroupElt(1), GroupElt(0)}] = one1;
    a.twist[{GroupElt(1), GroupElt(1)}] = w11;
    return a;
}

}  // namespace epsring
