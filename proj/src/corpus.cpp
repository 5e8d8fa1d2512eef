#include "epsring/corpus.hpp"

#include <algorithm>
#include <random>

namespace epsring {

namespace {

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    std::size_t below(std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(eng);
    }
    long long range(long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(eng);
    }
    std::vector<int> subset_nonempty(std::size_t m) {
        std::vector<int> out(m, 0);
        for (auto& x : out) x = static_cast<int>(below(2));
        out[below(m)] = 1;
        return out;
    }
    std::vector<int> random_involution(std::size_t m, const std::vector<int>& mask) {
        std::vector<int> perm(m);
        for (std::size_t i = 0; i < m; ++i) perm[i] = static_cast<int>(i);
        std::vector<std::size_t> pool;
        for (std::size_t i = 0; i < m; ++i)
            if (mask.empty() || mask[i]) pool.push_back(i);
        std::shuffle(pool.begin(), pool.end(), eng);
        for (std::size_t i = 0; i + 1 < pool.size(); i += 2)
            if (below(2)) std::swap(perm[pool[i]], perm[pool[i + 1]]);
        return perm;
    }
};

std::vector<int> identity_perm(std::size_t m) {
    std::vector<int> p(m);
    for (std::size_t i = 0; i < m; ++i) p[i] = static_cast<int>(i);
    return p;
}

std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g) {
    std::vector<int> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[g[i]];
    return out;
}

// permutation representation beta : G -> Sym(m); elements indexed as in
// GradingGroup::elements()
std::vector<std::vector<int>> hom_for_group(const GradingGroup& g, Rng& rng, std::size_t m) {
    const std::size_t n = g.order();
    std::vector<std::vector<int>> perms(n, identity_perm(m));
    if (n == 2) {
        perms[1] = rng.random_involution(m, {});
    } else if (n == 3) {
        // identity or a 3-cycle
        if (m >= 3 && rng.below(2)) {
            std::size_t a = rng.below(m), b = (a + 1) % m, c = (a + 2) % m;
            auto& p = perms[1];
            p[a] = static_cast<int>(b);
            p[b] = static_cast<int>(c);
            p[c] = static_cast<int>(a);
        }
        perms[2] = compose(perms[1], perms[1]);
    } else if (n == 4) {
        // Klein four-group as product of two commuting involutions: use
        // disjoint transpositions; element (i,j) has index i*2 + j
        std::vector<int> pa = identity_perm(m), pb = identity_perm(m);
        if (m >= 4) {
            std::vector<std::size_t> pool(m);
            for (std::size_t i = 0; i < m; ++i) pool[i] = i;
            std::shuffle(pool.begin(), pool.end(), rng.eng);
            if (rng.below(2)) std::swap(pa[pool[0]], pa[pool[1]]);
            if (rng.below(2)) std::swap(pb[pool[2]], pb[pool[3]]);
        }
        perms[1] = pb;                 // (0,1)
        perms[2] = pa;                 // (1,0)
        perms[3] = compose(pa, pb);    // (1,1)
    }
    return perms;
}

StructureAlgebra dual_numbers(const FieldSpec& field) {
    AlgebraBuilder bld(field, 2);
    bld.add(0, 0, 0, 1);
    bld.add(0, 1, 1, 1);
    bld.add(1, 0, 1, 1);
    bld.unit[0] = Scalar::one(field);
    return bld.build();
}

StructureAlgebra split2(const FieldSpec& field) {
    AlgebraBuilder bld(field, 2);
    bld.add(0, 0, 0, 1);
    bld.add(1, 1, 1, 1);
    bld.unit[0] = Scalar::one(field);
    bld.unit[1] = Scalar::one(field);
    return bld.build();
}

std::vector<GroupElt> random_labels(const GradingGroup& g, Rng& rng, std::size_t r) {
    auto elems = g.elements();
    std::vector<GroupElt> out;
    for (std::size_t i = 0; i < r; ++i) out.push_back(elems[rng.below(elems.size())]);
    return out;
}

void push_crossed(std::vector<CorpusInstance>& out, const std::string& name,
                  TwistedPartialAction action) {
    CrossedProduct cp = crossed_product(action);
    out.push_back(CorpusInstance{name, cp.ring, std::move(cp), std::move(action)});
}

std::size_t crossed_dim(const TwistedPartialAction& a) {
    std::size_t total = 0;
    for (const auto& g : a.support) {
        Vec one = a.one(g);
        for (const auto& x : one)
            if (!x.is_zero()) ++total;
    }
    return total;
}

void batch(std::vector<CorpusInstance>& out, const FieldSpec& field, std::uint64_t seed,
           bool include_fixed) {
    Rng rng(seed);
    const std::string f = field.str();
    GradingGroup z1 = GradingGroup::cyclic(1);
    GradingGroup z2 = GradingGroup::cyclic(2);
    GradingGroup z3 = GradingGroup::cyclic(3);
    GradingGroup klein = GradingGroup::direct_product(z2, z2);

    if (include_fixed) {
        {
            AlgebraBuilder k(field, 1);
            k.add(0, 0, 0, 1);
            k.unit[0] = Scalar::one(field);
            out.push_back({"trivial-k/" + f, trivially_graded(k.build(), z1), {}, {}});
        }
        out.push_back({"trivial-kxk/" + f, trivially_graded(split2(field), z2), {}, {}});
        out.push_back({"trivial-dual/" + f, trivially_graded(dual_numbers(field), z1), {}, {}});
        out.push_back({"group-z2/" + f, group_algebra(z2, field), {}, {}});
        out.push_back({"group-z3/" + f, group_algebra(z3, field), {}, {}});
        out.push_back({"group-klein/" + f, group_algebra(klein, field), {}, {}});
        if (field.characteristic() != 2)
            out.push_back({"twisted-z2/" + f,
                           twisted_z2_group_algebra(field, Scalar(field, 2)), {}, {}});
        push_crossed(out, "kxk-action/" + f, kxk_z2_action(field));
        out.push_back({"morita-trivial/" + f, morita_ring(trivial_context(field)), {}, {}});
        out.push_back({"morita-colrow2/" + f, morita_ring(column_row_context(field, 2)), {}, {}});
        out.push_back({"morita-from-z2/" + f,
                       morita_from_strong(group_algebra(z2, field), GroupElt(1)), {}, {}});
        out.push_back({"morita-from-m2/" + f,
                       morita_from_strong(matrix_pattern_ring(field, z2,
                                                              {GroupElt(0), GroupElt(1)}),
                                          GroupElt(1)),
                       {}, {}});
    }

    // matrix-pattern gradings
    for (int t = 0; t < 2; ++t) {
        out.push_back({"pattern-m2-z2/" + f, matrix_pattern_ring(field, z2, random_labels(z2, rng, 2)), {}, {}});
        out.push_back({"pattern-m3-z3/" + f, matrix_pattern_ring(field, z3, random_labels(z3, rng, 3)), {}, {}});
        out.push_back({"pattern-m3-klein/" + f,
                       matrix_pattern_ring(field, klein, random_labels(klein, rng, 3)), {}, {}});
    }

    // partial crossed products from restricted global actions; retry until
    // the total dimension fits the corpus bound
    for (const auto* grp : {&z1, &z2, &z3, &klein}) {
        std::size_t m = 3 + rng.below(2);
        if (grp->order() == 4) m = 4;
        for (int attempt = 0;; ++attempt) {
            auto perms = hom_for_group(*grp, rng, m);
            auto idem = attempt < 10 ? rng.subset_nonempty(m) : std::vector<int>{1};
            if (attempt >= 10) perms = hom_for_group(*grp, rng, 1);
            auto action = restriction_action(field, *grp, perms, idem);
            if (crossed_dim(action) <= 10) {
                push_crossed(out, "restriction-g" + std::to_string(grp->order()) + "/" + f,
                             std::move(action));
                break;
            }
        }
    }

    // twisted Z_2 partial actions
    for (int t = 0; t < 2; ++t) {
        std::size_t m = 4;
        auto corner = rng.subset_nonempty(m);
        auto invol = rng.random_involution(m, corner);
        std::vector<long long> weights(m, 1);
        // weights must be constant on involution orbits and nonzero
        const std::int64_t p = field.characteristic();
        for (std::size_t c = 0; c < m; ++c) {
            if (!corner[c]) continue;
            long long w = 1 + rng.range(0, p == 0 ? 3 : p - 2);
            weights[c] = w;
            weights[static_cast<std::size_t>(invol[c])] = w;
        }
        push_crossed(out, "twisted-partial-z2/" + f,
                     twisted_z2_partial_action(field, m, corner, invol, weights));
    }
}

}  // namespace

std::vector<CorpusInstance> make_corpus(std::uint64_t seed, std::size_t min_count) {
    std::vector<FieldSpec> fields = {FieldSpec::gf(2), FieldSpec::gf(3), FieldSpec::gf(5),
                                     FieldSpec::rationals()};
    std::vector<CorpusInstance> out;
    std::uint64_t round = 0;
    while (out.size() < min_count) {
        for (std::size_t fi = 0; fi < fields.size(); ++fi)
            batch(out, fields[fi], seed * 1000003 + round * 17 + fi, round == 0);
        ++round;
        if (round > 64) throw Error("corpus generation stalled");
    }
    return out;
}

std::vector<CorpusInstance> negative_instances() {
    std::vector<CorpusInstance> out;
    for (const auto& field : {FieldSpec::gf(2), FieldSpec::gf(3), FieldSpec::rationals()}) {
        const std::string f = field.str();
        out.push_back({"kt3/" + f, truncated_polynomial_ring(field, 3), {}, {}});
        out.push_back({"kt4/" + f, truncated_polynomial_ring(field, 4), {}, {}});
        out.push_back({"upper2-z2/" + f, upper_triangular_z2(field), {}, {}});
        {
            // k[x]/(x^2) with deg x = 1 over Z_2
            AlgebraBuilder bld(field, 2);
            bld.add(0, 0, 0, 1);
            bld.add(0, 1, 1, 1);
            bld.add(1, 0, 1, 1);
            bld.unit[0] = Scalar::one(field);
            out.push_back({"dual-z2/" + f,
                           GradedRing(bld.build(), GradingGroup::cyclic(2),
                                      {GroupElt(0), GroupElt(1)}),
                           {}, {}});
        }
        {
            // full upper-triangular 3x3 with deg(e_ij) = j - i mod 3
            // basis order: e11 e22 e33 e12 e23 e13
            AlgebraBuilder bld(field, 6);
            auto idx = [](int i, int j) {
                if (i == j) return i;
                if (j == i + 1) return 3 + i;
                return 5;
            };
            for (int i = 0; i < 3; ++i)
                for (int j = i; j < 3; ++j)
                    for (int k = j; k < 3; ++k)
                        bld.add(idx(i, j), idx(j, k), idx(i, k), 1);
            for (int i = 0; i < 3; ++i) bld.unit[i] = Scalar::one(field);
            out.push_back({"upper3-z3/" + f,
                           GradedRing(bld.build(), GradingGroup::cyclic(3),
                                      {GroupElt(0), GroupElt(0), GroupElt(0), GroupElt(1),
                                       GroupElt(1), GroupElt(2)}),
                           {}, {}});
        }
    }
    return out;
}

namespace {

bool has_axiom(const std::vector<ActionViolation>& vs, const std::string& tag) {
    for (const auto& v : vs)
        if (v.axiom == tag) return true;
    return false;
}

bool has_structure(const std::vector<ActionViolation>& vs) { return has_axiom(vs, "structure"); }

std::optional<ViolationSeed> try_tamper(const TwistedPartialAction& base,
                                        TwistedPartialAction tampered, const std::string& tag) {
    if (!validate_action(base).empty()) return std::nullopt;
    auto vs = validate_action(tampered);
    if (vs.empty() || has_structure(vs) || !has_axiom(vs, tag)) return std::nullopt;
    return ViolationSeed{std::move(tampered), base, tag};
}

}  // namespace

ViolationSeed seeded_axiom_violation(std::uint64_t seed, int which) {
    Rng rng(seed * 7919 + which);
    std::vector<FieldSpec> fields = {FieldSpec::gf(3), FieldSpec::gf(5),
                                     FieldSpec::rationals()};
    const std::string tag = "P" + std::to_string(which);

    for (int attempt = 0; attempt < 200; ++attempt) {
        const FieldSpec& field = fields[rng.below(fields.size())];
        const std::size_t m = 4 + rng.below(2);

        if (which == 1) {
            GradingGroup z2 = GradingGroup::cyclic(2);
            auto perms = hom_for_group(z2, rng, m);
            auto base = restriction_action(field, z2, perms, rng.subset_nonempty(m));
            const std::size_t mm = base.base.dim();
            if (mm < 2) continue;
            auto bad = base;
            Matrix swp(field, mm, mm);
            std::size_t a = rng.below(mm), b = (a + 1 + rng.below(mm - 1)) % mm;
            for (std::size_t c = 0; c < mm; ++c)
                swp.at(c == a ? b : (c == b ? a : c), c) = Scalar::one(field);
            bad.alpha[GroupElt(0)] = swp;
            if (auto v = try_tamper(base, bad, tag)) return *v;
        } else if (which == 2) {
            GradingGroup z3 = GradingGroup::cyclic(3);
            auto perms = hom_for_group(z3, rng, m);
            auto base = restriction_action(field, z3, perms, rng.subset_nonempty(m));
            const std::size_t mm = base.base.dim();
            auto bad = base;
            // permute the corner of some nonzero D_{g^-1} so product corners move
            GroupElt g(1 + static_cast<int>(rng.below(2)));
            Vec og = base.one(base.group.inv(g));
            std::vector<std::size_t> supp_idx;
            for (std::size_t c = 0; c < mm; ++c)
                if (!og[c].is_zero()) supp_idx.push_back(c);
            if (supp_idx.size() < 2) continue;
            std::size_t a = supp_idx[rng.below(supp_idx.size())];
            std::size_t b = supp_idx[rng.below(supp_idx.size())];
            if (a == b) continue;
            Matrix swp = Matrix::identity(field, mm);
            swp.at(a, a) = Scalar::zero(field);
            swp.at(b, b) = Scalar::zero(field);
            swp.at(b, a) = Scalar::one(field);
            swp.at(a, b) = Scalar::one(field);
            bad.alpha[g] = bad.alpha[g].mul(swp);
            if (auto v = try_tamper(base, bad, tag)) return *v;
        } else if (which == 3) {
            // a 3-cycle is not an involution, so alpha_1 . alpha_1 != alpha_0
            std::vector<int> corner(m, 1);
            auto invol = identity_perm(m);
            auto base =
                twisted_z2_partial_action(field, m, corner, invol, std::vector<long long>(m, 1));
            auto bad = base;
            Matrix cyc(field, m, m);
            std::size_t a = rng.below(m);
            std::size_t b = (a + 1) % m, c = (a + 2) % m;
            for (std::size_t i = 0; i < m; ++i) {
                std::size_t img = i == a ? b : (i == b ? c : (i == c ? a : i));
                cyc.at(img, i) = Scalar::one(field);
            }
            bad.alpha[GroupElt(1)] = cyc;
            if (auto v = try_tamper(base, bad, tag)) return *v;
        } else if (which == 4) {
            GradingGroup z2 = GradingGroup::cyclic(2);
            auto perms = hom_for_group(z2, rng, m);
            auto base = restriction_action(field, z2, perms, rng.subset_nonempty(m));
            auto bad = base;
            GroupElt g(1);
            if (is_zero_vec(base.one(g))) continue;
            bool left = rng.below(2);
            auto key = left ? std::make_pair(GroupElt(0), g) : std::make_pair(g, GroupElt(0));
            bad.twist[key] = scaled(base.one(g), Scalar(field, 2));
            if (auto v = try_tamper(base, bad, tag)) return *v;
        } else if (which == 5) {
            GradingGroup z3 = GradingGroup::cyclic(3);
            auto perms = hom_for_group(z3, rng, m);
            auto base = restriction_action(field, z3, perms, rng.subset_nonempty(m));
            auto bad = base;
            GroupElt g(1 + static_cast<int>(rng.below(2)));
            GroupElt h(1 + static_cast<int>(rng.below(2)));
            Vec w = base.twist_at(g, h);
            if (is_zero_vec(w)) continue;
            bad.twist[{g, h}] = scaled(w, Scalar(field, 2));
            if (auto v = try_tamper(base, bad, tag)) return *v;
        }
    }
    throw Error("could not seed a violation for axiom P" + std::to_string(which));
}

}  // namespace epsring
