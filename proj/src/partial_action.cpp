#include "epsring/partial_action.hpp"

#include <algorithm>
#include <set>

namespace epsring {

bool TwistedPartialAction::in_support(const GroupElt& g) const {
    return std::find(support.begin(), support.end(), g) != support.end();
}

Vec TwistedPartialAction::one(const GroupElt& g) const {
    auto it = idempotent.find(g);
    if (it != idempotent.end()) return it->second;
    return zero_vec(base.field(), base.dim());
}

Vec TwistedPartialAction::twist_at(const GroupElt& g, const GroupElt& h) const {
    auto it = twist.find({g, h});
    if (it != twist.end()) return it->second;
    return zero_vec(base.field(), base.dim());
}

Vec TwistedPartialAction::apply_alpha(const GroupElt& g, const Vec& v) const {
    Vec masked = base.multiply(v, one(group.inv(g)));
    auto it = alpha.find(g);
    if (it == alpha.end()) return zero_vec(base.field(), base.dim());
    return it->second.apply(masked);
}

Subspace TwistedPartialAction::domain(const GroupElt& g) const {
    std::vector<Vec> gens;
    Vec og = one(g);
    for (std::size_t i = 0; i < base.dim(); ++i)
        gens.push_back(base.multiply(unit_vec(base.field(), base.dim(), i), og));
    return Subspace::span(base.field(), base.dim(), gens);
}

namespace {

Subspace image_of(const TwistedPartialAction& a, const GroupElt& g, const Subspace& sub) {
    std::vector<Vec> img;
    for (const auto& v : sub.basis()) img.push_back(a.apply_alpha(g, v));
    return Subspace::span(a.base.field(), a.base.dim(), img);
}

std::string pair_label(const TwistedPartialAction& a, const GroupElt& g, const GroupElt& h) {
    return "(" + a.group.label(g) + ", " + a.group.label(h) + ")";
}

}  // namespace

std::vector<ActionViolation> validate_action(const TwistedPartialAction& a) {
    std::vector<ActionViolation> out;
    const auto& alg = a.base;
    const FieldSpec& spec = alg.field();
    const std::size_t n = alg.dim();
    const GroupElt e = a.group.identity();

    if (!a.in_support(e)) {
        out.push_back({"structure", "support does not contain the identity"});
        return out;
    }
    for (const auto& g : a.support)
        if (!a.in_support(a.group.inv(g))) {
            out.push_back({"structure",
                           "support is not closed under inversion at " + a.group.label(g)});
            return out;
        }
    if (a.one(e) != alg.unit())
        out.push_back({"structure", "1_e is not the ring unit"});
    for (const auto& g : a.support) {
        Vec og = a.one(g);
        if (!alg.is_idempotent(og))
            out.push_back({"structure", "1_" + a.group.label(g) + " is not idempotent"});
        if (!alg.is_central(og))
            out.push_back({"structure", "1_" + a.group.label(g) + " is not central"});
    }
    if (!out.empty()) return out;

    // alpha_g restricts to a ring isomorphism D_{g^-1} -> D_g
    std::map<GroupElt, Subspace> dom;
    for (const auto& g : a.support) dom.emplace(g, a.domain(g));
    for (const auto& g : a.support) {
        const Subspace& dginv = dom.at(a.group.inv(g));
        Subspace img = image_of(a, g, dginv);
        if (!(img == dom.at(g)) || img.dim() != dginv.dim()) {
            out.push_back({"structure",
                           "alpha_" + a.group.label(g) +
                               " does not map D_{g^-1} bijectively onto D_g"});
            continue;
        }
        for (const auto& x : dginv.basis())
            for (const auto& y : dginv.basis())
                if (a.apply_alpha(g, alg.multiply(x, y)) !=
                    alg.multiply(a.apply_alpha(g, x), a.apply_alpha(g, y))) {
                    out.push_back({"structure",
                                   "alpha_" + a.group.label(g) + " is not multiplicative"});
                    goto next_g;
                }
    next_g:;
    }
    if (!out.empty()) return out;

    // twists are corner units of D_g D_{gh}
    std::map<std::pair<GroupElt, GroupElt>, Vec> twist_inv;
    for (const auto& g : a.support)
        for (const auto& h : a.support) {
            GroupElt gh = a.group.mul(g, h);
            Vec w = a.twist_at(g, h);
            Vec corner_unit = alg.multiply(a.one(g), a.one(gh));
            if (alg.multiply(alg.multiply(corner_unit, w), corner_unit) != w) {
                out.push_back({"structure",
                               "w_" + pair_label(a, g, h) + " lies outside D_g D_{gh}"});
                continue;
            }
            auto inv = alg.corner_inverse(w, corner_unit);
            if (!inv) {
                out.push_back({"structure",
                               "w_" + pair_label(a, g, h) + " is not invertible in its corner"});
                continue;
            }
            twist_inv[{g, h}] = *inv;
        }
    if (!out.empty()) return out;

    // (P1) alpha_e = id
    for (std::size_t i = 0; i < n; ++i) {
        Vec ei = unit_vec(spec, n, i);
        if (a.apply_alpha(e, ei) != ei) {
            out.push_back({"P1", "alpha_e is not the identity map"});
            break;
        }
    }

    // (P2) alpha_g(D_{g^-1} D_h) = D_g D_{gh}
    for (const auto& g : a.support)
        for (const auto& h : a.support) {
            GroupElt gh = a.group.mul(g, h);
            Subspace lhs_dom = alg.subspace_product(dom.at(a.group.inv(g)), dom.at(h));
            Subspace lhs = image_of(a, g, lhs_dom);
            Subspace rhs = a.in_support(gh)
                               ? alg.subspace_product(dom.at(g), dom.at(gh))
                               : Subspace(spec, n);
            if (!(lhs == rhs))
                out.push_back({"P2", "fails at " + pair_label(a, g, h)});
        }

    // (P3) alpha_g(alpha_h(r)) = w_{g,h} alpha_{gh}(r) w_{g,h}^-1
    for (const auto& g : a.support)
        for (const auto& h : a.support) {
            GroupElt gh = a.group.mul(g, h);
            Subspace rdom = alg.subspace_product(dom.at(a.group.inv(h)),
                                                 a.in_support(gh) ? a.domain(a.group.inv(gh))
                                                                  : Subspace(spec, n));
            if (rdom.dim() == 0) continue;  // zero corner, vacuous
            Vec w = a.twist_at(g, h);
            Vec winv = twist_inv.count({g, h}) ? twist_inv[{g, h}] : zero_vec(spec, n);
            for (const auto& r : rdom.basis()) {
                Vec lhs = a.apply_alpha(g, a.apply_alpha(h, r));
                Vec mid = a.in_support(gh) ? a.apply_alpha(gh, r) : zero_vec(spec, n);
                Vec rhs = alg.multiply(alg.multiply(w, mid), winv);
                if (lhs != rhs) {
                    out.push_back({"P3", "fails at " + pair_label(a, g, h)});
                    break;
                }
            }
        }

    // (P4) w_{e,g} = w_{g,e} = 1_g
    for (const auto& g : a.support) {
        if (a.twist_at(e, g) != a.one(g))
            out.push_back({"P4", "w_(e, " + a.group.label(g) + ") differs from 1_g"});
        if (a.twist_at(g, e) != a.one(g))
            out.push_back({"P4", "w_(" + a.group.label(g) + ", e) differs from 1_g"});
    }

    // (P5) alpha_g(r w_{h,l}) w_{g,hl} = alpha_g(r) w_{g,h} w_{gh,l}
    for (const auto& g : a.support)
        for (const auto& h : a.support)
            for (const auto& l : a.support) {
                GroupElt hl = a.group.mul(h, l);
                if (!a.in_support(hl)) continue;  // D_{hl} = 0, vacuous
                Subspace rdom = alg.subspace_product(
                    alg.subspace_product(dom.at(a.group.inv(g)), dom.at(h)), dom.at(hl));
                if (rdom.dim() == 0) continue;
                GroupElt gh = a.group.mul(g, h);
                GroupElt ghl = a.group.mul(g, hl);
                Vec w_hl = a.twist_at(h, l);
                Vec w_ghl = a.twist_at(g, hl);
                Vec w_gh = a.twist_at(g, h);
                Vec w_gh_l = a.in_support(gh) ? a.twist_at(gh, l) : zero_vec(spec, n);
                (void)ghl;
                for (const auto& r : rdom.basis()) {
                    Vec lhs = alg.multiply(a.apply_alpha(g, alg.multiply(r, w_hl)), w_ghl);
                    Vec rhs = alg.multiply(alg.multiply(a.apply_alpha(g, r), w_gh), w_gh_l);
                    if (lhs != rhs) {
                        out.push_back({"P5", "fails at (" + a.group.label(g) + ", " +
                                                 a.group.label(h) + ", " + a.group.label(l) + ")"});
                        break;
                    }
                }
            }
    return out;
}

namespace {

// coordinates of v over an RREF basis; throws when v is outside the span
Vec coords_over(const std::vector<Vec>& rref_basis, const Vec& v, const FieldSpec& spec) {
    Vec coords = zero_vec(spec, rref_basis.size());
    Vec r = v;
    for (std::size_t k = 0; k < rref_basis.size(); ++k) {
        std::size_t piv = 0;
        while (piv < rref_basis[k].size() && rref_basis[k][piv].is_zero()) ++piv;
        const Scalar& c = r[piv];
        if (c.is_zero()) continue;
        coords[k] = c;
        Scalar factor = -c;
        add_scaled(r, rref_basis[k], factor);
    }
    if (!is_zero_vec(r)) throw TheoremViolation("element escapes its component ideal");
    return coords;
}

}  // namespace

Vec CrossedProduct::embed(const GroupElt& g, const Vec& d) const {
    auto it = d_basis.find(g);
    if (it == d_basis.end()) {
        if (!is_zero_vec(d)) throw Error("element of an empty component");
        return zero_vec(ring.algebra().field(), ring.algebra().dim());
    }
    Vec coords = coords_over(it->second, d, ring.algebra().field());
    Vec out = zero_vec(ring.algebra().field(), ring.algebra().dim());
    std::size_t off = block_offset.at(g);
    for (std::size_t k = 0; k < coords.size(); ++k) out[off + k] = coords[k];
    return out;
}

CrossedProduct crossed_product(const TwistedPartialAction& a) {
    auto violations = validate_action(a);
    if (!violations.empty())
        throw ActionAxiomError(violations.front().axiom + ": " + violations.front().detail);

    const auto& alg = a.base;
    const FieldSpec& spec = alg.field();

    std::vector<GroupElt> supp;
    for (const auto& g : a.support)
        if (!is_zero_vec(a.one(g))) supp.push_back(g);
    std::sort(supp.begin(), supp.end());

    std::size_t total = 0;
    std::map<GroupElt, std::vector<Vec>> d_basis;
    std::map<GroupElt, std::size_t> offset;
    std::vector<std::pair<GroupElt, Vec>> labels;
    for (const auto& g : supp) {
        Subspace dg = a.domain(g);
        offset[g] = total;
        d_basis[g] = dg.basis();
        for (const auto& b : dg.basis()) labels.emplace_back(g, b);
        total += dg.dim();
    }

    std::vector<Vec> table(total * total, zero_vec(spec, total));
    for (std::size_t i = 0; i < total; ++i)
        for (std::size_t j = 0; j < total; ++j) {
            const auto& [g, r] = labels[i];
            const auto& [h, rp] = labels[j];
            GroupElt gh = a.group.mul(g, h);
            // (r delta_g)(r' delta_h) = r alpha_g(r' 1_{g^-1}) w_{g,h} delta_{gh}
            Vec val = alg.multiply(alg.multiply(r, a.apply_alpha(g, rp)), a.twist_at(g, h));
            if (is_zero_vec(val)) continue;
            auto it = d_basis.find(gh);
            if (it == d_basis.end())
                throw TheoremViolation("crossed product multiplication escapes the support");
            Vec coords = coords_over(it->second, val, spec);
            Vec& cell = table[i * total + j];
            std::size_t off = offset.at(gh);
            for (std::size_t k = 0; k < coords.size(); ++k) cell[off + k] = coords[k];
        }

    Vec unit = zero_vec(spec, total);
    {
        Vec coords = coords_over(d_basis.at(a.group.identity()), alg.unit(), spec);
        std::size_t off = offset.at(a.group.identity());
        for (std::size_t k = 0; k < coords.size(); ++k) unit[off + k] = coords[k];
    }

    StructureAlgebra product(spec, total, std::move(table), std::move(unit));
    auto issue = product.validate();
    if (!issue.ok())
        throw TheoremViolation("crossed product is not associative/unital: " + issue.detail);

    std::vector<GroupElt> degrees;
    for (const auto& [g, d] : labels) degrees.push_back(g);
    GradedRing ring(std::move(product), a.group, std::move(degrees));
    if (!ring.validate_grading().ok())
        throw TheoremViolation("crossed product grading is not homogeneous");

    CrossedProduct cp{std::move(ring), std::move(labels), std::move(d_basis),
                      std::move(offset), {}};
    for (const auto& g : supp) cp.corner_one[g] = a.one(g);

    // the component identities must be exactly 1_g delta_e
    EpsilonData eps = compute_epsilon(cp.ring);
    for (const auto& g : supp) {
        Vec expected = cp.embed(a.group.identity(), a.one(g));
        if (eps.eps(g, spec, cp.ring.algebra().dim()) != expected)
            throw TheoremViolation("component identity differs from 1_g delta_e");
    }
    return cp;
}

std::optional<Vec> epsilon_inverse(const GradedRing& s, const EpsilonData& eps,
                                   const GroupElt& g, const Vec& elem) {
    const auto& alg = s.algebra();
    const FieldSpec& spec = alg.field();
    const std::size_t n = alg.dim();
    for (std::size_t i = 0; i < n; ++i)
        if (!elem[i].is_zero() && s.degrees()[i] != g)
            throw Error("element is not homogeneous of the requested degree");
    GroupElt ginv = s.group().inv(g);
    const auto& ti = s.component_indices(ginv);
    Matrix sys(spec, 2 * n, ti.size());
    for (std::size_t a = 0; a < ti.size(); ++a) {
        Vec t = unit_vec(spec, n, ti[a]);
        Vec st = alg.multiply(elem, t);
        Vec ts = alg.multiply(t, elem);
        for (std::size_t c = 0; c < n; ++c) {
            sys.at(c, a) = st[c];
            sys.at(n + c, a) = ts[c];
        }
    }
    Vec rhs = eps.eps(g, spec, n);
    Vec rhs2 = eps.eps(ginv, spec, n);
    rhs.insert(rhs.end(), rhs2.begin(), rhs2.end());
    auto sol = solve_affine(sys, rhs);
    if (!sol) return std::nullopt;
    if (sol->kernel.dim() != 0)
        throw TheoremViolation("epsilon-inverse is not unique");
    Vec t = zero_vec(spec, n);
    for (std::size_t a = 0; a < ti.size(); ++a) t[ti[a]] = sol->particular[a];
    return t;
}

EpsilonInvertibleSearch find_epsilon_invertible(const GradedRing& s, const EpsilonData& eps,
                                                const GroupElt& g, std::uint64_t budget,
                                                std::uint64_t seed) {
    const auto& alg = s.algebra();
    const FieldSpec& spec = alg.field();
    const std::size_t n = alg.dim();
    const auto& gi = s.component_indices(g);
    EpsilonInvertibleSearch res;

    auto try_candidate = [&](const Vec& v) -> bool {
        ++res.tried;
        auto inv = epsilon_inverse(s, eps, g, v);
        if (inv) {
            res.outcome = SearchOutcome::Found;
            res.element = v;
            res.inverse = *inv;
            return true;
        }
        return false;
    };

    if (try_candidate(zero_vec(spec, n))) return res;

    if (!spec.is_rationals()) {
        const std::int64_t p = spec.characteristic();
        // epsilon-invertibility is invariant under scaling, so projective
        // representatives decide existence
        std::uint64_t count = 1, power = 1;
        bool over = false;
        for (std::size_t i = 0; i < gi.size(); ++i) {
            count += power;
            if (count > budget || power > budget) { over = true; break; }
            power *= static_cast<std::uint64_t>(p);
        }
        if (over) {
            res.outcome = SearchOutcome::BudgetExceeded;
            return res;
        }
        std::vector<std::int64_t> digits(gi.size(), 0);
        for (std::size_t lead = 0; lead < gi.size(); ++lead) {
            std::fill(digits.begin(), digits.end(), 0);
            bool done = false;
            while (!done) {
                Vec v = zero_vec(spec, n);
                v[gi[lead]] = Scalar::one(spec);
                for (std::size_t j = lead + 1; j < gi.size(); ++j)
                    if (digits[j] != 0) v[gi[j]] = Scalar(spec, digits[j]);
                if (try_candidate(v)) return res;
                done = true;
                for (std::size_t j = gi.size(); j-- > lead + 1;) {
                    if (++digits[j] < p) { done = false; break; }
                    digits[j] = 0;
                }
            }
        }
        res.outcome = SearchOutcome::ProvenAbsent;
        return res;
    }

    // rationals: structured probes plus seeded random small-integer combos
    for (std::size_t i : gi)
        if (try_candidate(unit_vec(spec, n, i))) return res;
    for (std::size_t i = 0; i < gi.size(); ++i)
        for (std::size_t j = i + 1; j < gi.size(); ++j) {
            if (try_candidate(add(unit_vec(spec, n, gi[i]), unit_vec(spec, n, gi[j])))) return res;
            if (try_candidate(sub(unit_vec(spec, n, gi[i]), unit_vec(spec, n, gi[j])))) return res;
        }
    std::uint64_t state = seed * 6364136223846793005ull + 1442695040888963407ull;
    auto next = [&]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (int trial = 0; trial < 64 && res.tried < budget; ++trial) {
        Vec v = zero_vec(spec, n);
        for (std::size_t i : gi) v[i] = Scalar(spec, static_cast<long long>(next() % 7) - 3);
        if (is_zero_vec(v)) continue;
        if (try_candidate(v)) return res;
    }
    res.outcome = SearchOutcome::Inconclusive;
    return res;
}

TwistedPartialAction extract_action(const GradedRing& s, const EpsilonData& eps,
                                    const std::map<GroupElt, Vec>& sections) {
    const auto& alg = s.algebra();
    const FieldSpec& spec = alg.field();
    const std::size_t n = alg.dim();
    const GroupElt e = s.group().identity();
    const auto& ri = s.principal_indices();

    std::map<GroupElt, Vec> sec = sections;
    sec[e] = alg.unit();
    std::map<GroupElt, Vec> tinv;
    for (const auto& [g, sg] : sec) {
        auto t = epsilon_inverse(s, eps, g, sg);
        if (!t)
            throw SearchExhausted("section at degree " + s.group().label(g) +
                                  " is not epsilon-invertible");
        tinv[s.group().inv(g)] = *t;
    }

    auto compress = [&](const Vec& v) {
        Vec out = zero_vec(spec, ri.size());
        for (std::size_t c = 0; c < n; ++c) {
            if (v[c].is_zero()) continue;
            auto it = std::find(ri.begin(), ri.end(), c);
            if (it == ri.end())
                throw TheoremViolation("extracted datum escapes the principal component");
            out[it - ri.begin()] = v[c];
        }
        return out;
    };

    TwistedPartialAction act{alg.restrict_to_indices(ri), s.group(), {}, {}, {}, {}};
    std::set<GroupElt> supp;
    for (const auto& g : s.support()) supp.insert(g);
    supp.insert(e);
    act.support.assign(supp.begin(), supp.end());

    for (const auto& g : act.support) {
        if (!sec.count(g))
            throw Error("missing section for degree " + s.group().label(g));
        act.idempotent[g] = compress(eps.eps(g, spec, n));
        // alpha_g(r eps_{g^-1}) = s_g r t_{g^-1}
        Matrix m(spec, ri.size(), ri.size());
        const Vec& sg = sec.at(g);
        const Vec& tg = tinv.at(s.group().inv(g));
        for (std::size_t a = 0; a < ri.size(); ++a) {
            Vec img = compress(alg.multiply(alg.multiply(sg, unit_vec(spec, n, ri[a])), tg));
            for (std::size_t c = 0; c < ri.size(); ++c) m.at(c, a) = img[c];
        }
        act.alpha[g] = std::move(m);
    }
    for (const auto& g : act.support)
        for (const auto& h : act.support) {
            GroupElt gh = s.group().mul(g, h);
            if (!act.in_support(gh)) continue;
            // w_{g,h} = s_g s_h t_{(gh)^-1}
            Vec w = alg.multiply(alg.multiply(sec.at(g), sec.at(h)), tinv.at(s.group().inv(gh)));
            act.twist[{g, h}] = compress(w);
        }

    auto violations = validate_action(act);
    if (!violations.empty())
        throw TheoremViolation("extracted action violates " + violations.front().axiom + ": " +
                               violations.front().detail);
    return act;
}

bool graded_iso_check(const GradedRing& s1, const GradedRing& s2, const Matrix& map) {
    if (!(s1.group() == s2.group())) return false;
    const auto& a1 = s1.algebra();
    const auto& a2 = s2.algebra();
    if (a1.dim() != a2.dim() || map.rows() != a2.dim() || map.cols() != a1.dim()) return false;
    // bijective
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < map.cols(); ++j) {
        Vec c = zero_vec(a1.field(), map.rows());
        for (std::size_t i = 0; i < map.rows(); ++i) c[i] = map.at(i, j);
        cols.push_back(std::move(c));
    }
    if (Subspace::span(a1.field(), map.rows(), cols).dim() != a1.dim()) return false;
    // unit-preserving
    if (map.apply(a1.unit()) != a2.unit()) return false;
    // multiplicative on basis pairs
    for (std::size_t i = 0; i < a1.dim(); ++i)
        for (std::size_t j = 0; j < a1.dim(); ++j) {
            Vec lhs = map.apply(a1.basis_product(i, j));
            Vec rhs = a2.multiply(cols[i], cols[j]);
            if (lhs != rhs) return false;
        }
    // degree-preserving
    for (std::size_t i = 0; i < a1.dim(); ++i) {
        const GroupElt& d = s1.degrees()[i];
        for (std::size_t c = 0; c < a2.dim(); ++c)
            if (!cols[i][c].is_zero() && s2.degrees()[c] != d) return false;
    }
    return true;
}

Vec trace_alpha(const TwistedPartialAction& a, const Vec& r) {
    if (!a.base.is_central(r)) throw Error("trace argument is not central in the base");
    Vec out = zero_vec(a.base.field(), a.base.dim());
    for (const auto& g : a.support) out = add(out, a.apply_alpha(g, r));
    return out;
}

}  // namespace epsring
