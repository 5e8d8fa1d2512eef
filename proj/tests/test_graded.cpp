#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "epsring/gallery.hpp"

using namespace epsring;

namespace {

const FieldSpec Q = FieldSpec::rationals();

GradedRing m2_checkerboard(const FieldSpec& spec) {
    return matrix_pattern_ring(spec, GradingGroup::cyclic(2), {GroupElt(0), GroupElt(1)});
}

// index helpers for the block-pattern rings built by dade_modified: basis
// order is (1,1)A2 (1,2)A2 (2,1)A2 (2,2)A2 (3,3)A2 then (1,3) (2,3) (3,1)
// (3,2) with one B coordinate each
constexpr std::size_t D11 = 0, D22 = 6, D33 = 8, B13 = 10, B23 = 11, B31 = 12, B32 = 13;

}  // namespace

TEST_CASE("grading validation") {
    GradedRing good = m2_checkerboard(Q);
    CHECK(good.validate_grading().ok());

    // scramble one degree: e21 moved to degree 0 breaks homogeneity
    GradedRing bad(good.algebra(), good.group(),
                   {GroupElt(0), GroupElt(1), GroupElt(0), GroupElt(0)});
    auto issue = bad.validate_grading();
    CHECK(!issue.ok());
    CHECK(issue.code == "not_homogeneous");

    GradedRing trivial = trivially_graded(good.algebra(), GradingGroup::cyclic(2));
    CHECK(trivial.validate_grading().ok());
}

TEST_CASE("component products") {
    GradedRing s = m2_checkerboard(Q);
    CHECK(s.component_product(GroupElt(1), GroupElt(1)) == s.component(GroupElt(0)));
    CHECK(s.component_product(GroupElt(0), GroupElt(1)) == s.component(GroupElt(1)));

    GradedRing morita = morita_ring(trivial_context(Q));
    // the support is not closed under multiplication: S_g S_g = 0
    CHECK(morita.component_product(GroupElt(1), GroupElt(1)).dim() == 0);
    CHECK(morita.component(GroupElt(2)).dim() == 0);
}

TEST_CASE("epsilon computation on the block-pattern ring") {
    GradedRing dade = dade_modified(Q);
    CHECK(dade.algebra().dim() == 14);
    EpsilonData eps = compute_epsilon(dade);
    Vec eps1 = zero_vec(Q, 14);
    eps1[D11] = eps1[D22] = eps1[D33] = Scalar::one(Q);  // diag(1_B, 1_B, 1_B)
    CHECK(eps.eps(GroupElt(1), Q, 14) == eps1);
    CHECK(eps.eps(GroupElt(0), Q, 14) == dade.algebra().unit());
}

TEST_CASE("trivial gradings have epsilon zero away from the identity") {
    GradedRing s = trivially_graded(m2_checkerboard(Q).algebra(), GradingGroup::cyclic(2));
    EpsilonData eps = compute_epsilon(s);
    CHECK(eps.eps(GroupElt(0), Q, 4) == s.algebra().unit());
    CHECK(is_zero_vec(eps.eps(GroupElt(1), Q, 4)));
    CHECK(eps.nonzero_degrees().size() == 1);
}

TEST_CASE("truncated polynomial rings are not epsilon-strong") {
    GradedRing kt3 = truncated_polynomial_ring(Q, 3);
    auto result = try_compute_epsilon(kt3);
    auto* fail = std::get_if<EpsilonFailure>(&result);
    REQUIRE(fail);
    CHECK(fail->degree == GroupElt(1));
    CHECK_THROWS_AS(compute_epsilon(kt3), NotEpsilonStrongError);
}

TEST_CASE("classification of the worked examples") {
    auto dade_mod = classify(dade_modified(Q));
    CHECK(dade_mod.is_epsilon_strong);
    CHECK(!dade_mod.is_strong);
    CHECK(dade_mod.char_i);
    CHECK(dade_mod.char_ii);
    CHECK(dade_mod.char_iii);
    CHECK(dade_mod.char_iv);

    auto dade_orig = classify(dade_original(Q));
    CHECK(dade_orig.is_strong);
    CHECK(dade_orig.is_epsilon_strong);

    auto kt3 = classify(truncated_polynomial_ring(Q, 3));
    CHECK(!kt3.is_symmetric);
    CHECK(!kt3.is_epsilon_strong);
    CHECK(!kt3.char_i);
    CHECK(!kt3.char_ii);
    CHECK(!kt3.char_iii);
    CHECK(!kt3.char_iv);
    CHECK(kt3.char_ii_failure_mode == "not_symmetric");

    auto morita = classify(morita_ring(trivial_context(Q)));
    CHECK(morita.is_epsilon_strong);
    CHECK(!morita.is_strong);
}

TEST_CASE("strong gradings have all component identities equal to one") {
    GradedRing s = dade_original(FieldSpec::gf(3));
    EpsilonData eps = compute_epsilon(s);
    for (const auto& g : s.group().elements())
        CHECK(eps.eps(g, s.algebra().field(), s.algebra().dim()) == s.algebra().unit());
}

TEST_CASE("right dual map") {
    GradedRing strong = m2_checkerboard(Q);
    auto rep = right_dual_map_bijective(strong, GroupElt(1));
    CHECK(rep.bijective);
    CHECK(rep.dim_component == 2);
    CHECK(rep.dim_hom == 2);

    GradedRing kt3 = truncated_polynomial_ring(Q, 3);
    auto rep2 = right_dual_map_bijective(kt3, GroupElt(1));
    CHECK(!rep2.bijective);
    CHECK(rep2.dim_hom == 0);  // S_{-1} = 0
    CHECK(rep2.dim_component == 1);

    // vacuous case: both components zero
    auto rep3 = right_dual_map_bijective(strong, GroupElt(0) /* identity has both */);
    CHECK(rep3.bijective);
    GradedRing morita = morita_ring(trivial_context(Q));
    auto rep4 = right_dual_map_bijective(morita, GroupElt(5));
    CHECK(rep4.bijective);
    CHECK(rep4.dim_component == 0);
    CHECK(rep4.dim_hom == 0);
}

TEST_CASE("dual bases") {
    GradedRing dade = dade_modified(Q);
    EpsilonData eps = compute_epsilon(dade);
    // identity degree: the single pair (1, identity functional)
    auto at_e = dual_basis(dade, eps, GroupElt(0));
    REQUIRE(at_e.size() == 1);
    CHECK(at_e[0].v == dade.algebra().unit());
    CHECK(at_e[0].u == dade.algebra().unit());
    // degree one: verified internally against the component basis
    auto at_one = dual_basis(dade, eps, GroupElt(1));
    CHECK(at_one.size() >= 3);

    GradedRing morita = morita_ring(trivial_context(Q));
    EpsilonData meps = compute_epsilon(morita);
    auto pairs = dual_basis(morita, meps, GroupElt(1));
    CHECK(pairs.size() == 1);
}

TEST_CASE("gamma on the block-pattern ring matches the displayed map") {
    GradedRing dade = dade_modified(Q);
    EpsilonData eps = compute_epsilon(dade);
    // r = diag(a, a, a') with a = (2,5), a' = (3,7) in F x F coordinates
    Vec r = zero_vec(Q, 14);
    r[D11] = r[D22] = Scalar(Q, 2);
    r[D11 + 1] = r[D22 + 1] = Scalar(Q, 5);
    r[D33] = Scalar(Q, 3);
    r[D33 + 1] = Scalar(Q, 7);
    CHECK(in_z_fin(dade, r));
    // gamma_1(diag(a,a,a')) = diag(1_B a', 1_B a', 1_B a)
    Vec expect = zero_vec(Q, 14);
    expect[D11] = expect[D22] = Scalar(Q, 3);
    expect[D33] = Scalar(Q, 2);
    CHECK(gamma_apply(dade, eps, GroupElt(1), r) == expect);
    // gamma at the identity is the identity map
    CHECK(gamma_apply(dade, eps, GroupElt(0), r) == r);
}

TEST_CASE("gamma on the Morita ring") {
    GradedRing s = morita_ring(trivial_context(Q));
    EpsilonData eps = compute_epsilon(s);
    // basis order: A, M, N, B; diag(a, b) = a e_11 + b e_22
    Vec r = zero_vec(Q, 4);
    r[0] = Scalar(Q, 5);
    r[3] = Scalar(Q, 9);
    Vec expect = zero_vec(Q, 4);
    expect[0] = Scalar(Q, 9);  // gamma_g(diag(a,b)) = b e_11
    CHECK(gamma_apply(s, eps, GroupElt(1), r) == expect);
    // component identities match the displayed idempotents
    CHECK(eps.eps(GroupElt(1), Q, 4) == unit_vec(Q, 4, 0));
    CHECK(eps.eps(GroupElt(-1), Q, 4) == unit_vec(Q, 4, 3));
    CHECK(eps.eps(GroupElt(0), Q, 4) == add(unit_vec(Q, 4, 0), unit_vec(Q, 4, 3)));
}

TEST_CASE("trace maps") {
    GradedRing morita = morita_ring(trivial_context(Q));
    EpsilonData meps = compute_epsilon(morita);
    // tr(1_A e_11) = e_11 + e_22 = 1
    CHECK(trace_gamma(morita, meps, unit_vec(Q, 4, 0)) == morita.algebra().unit());

    GradedRing dade = dade_modified(Q);
    EpsilonData deps = compute_epsilon(dade);
    Vec tr1 = trace_gamma(dade, deps, dade.algebra().unit());
    // diag(1_A + 1_B, ...) = (2,1) at every diagonal slot
    Vec expect = zero_vec(Q, 14);
    expect[D11] = expect[D22] = expect[D33] = Scalar(Q, 2);
    expect[D11 + 1] = expect[D22 + 1] = expect[D33 + 1] = Scalar(Q, 1);
    CHECK(tr1 == expect);

    GradedRing trivial = trivially_graded(dade.algebra(), GradingGroup::cyclic(2));
    EpsilonData teps = compute_epsilon(trivial);
    Vec r = zero_vec(Q, 14);
    r[D11] = r[D11 + 1] = r[D22] = r[D22 + 1] = r[D33] = r[D33 + 1] = Scalar(Q, 4);
    CHECK(trace_gamma(trivial, teps, r) == r);

    // arguments outside Z(R)_fin are rejected
    CHECK_THROWS_AS(trace_gamma(dade, deps, unit_vec(Q, 14, B13)), Error);
}

TEST_CASE("z_fin subspaces") {
    GradedRing dade = dade_modified(Q);
    EpsilonData eps = compute_epsilon(dade);
    Subspace z = z_fin(dade, eps, ZFinKind::Plain);
    CHECK(z.dim() == 4);  // diag(a, a, a') with a, a' in F x F
    CHECK(z == center_of_principal(dade));
    Subspace zg = z_fin(dade, eps, ZFinKind::GammaFixed);
    CHECK(zg.dim() <= z.dim());
    for (const auto& b : zg.basis())
        for (const auto& g : eps.nonzero_degrees())
            CHECK(gamma_apply(dade, eps, g, b) ==
                  dade.algebra().multiply(b, eps.eps(g, Q, 14)));

    // strongly graded group algebra: gamma_1 is the identity on the center
    GradedRing kz2 = group_algebra(GradingGroup::cyclic(2), Q);
    EpsilonData keps = compute_epsilon(kz2);
    Subspace kz = z_fin(kz2, keps, ZFinKind::GammaFixed);
    CHECK(kz.dim() == 1);
    CHECK(kz.contains(kz2.algebra().unit()));
}

TEST_CASE("graded ideal closure") {
    GradedRing dade = dade_modified(Q);
    EpsilonData eps = compute_epsilon(dade);
    CHECK(graded_ideal_closure(dade, {dade.algebra().unit()}).dim() == 14);
    CHECK(graded_ideal_closure(dade, {}).dim() == 0);
    Subspace from_eps1 = graded_ideal_closure(dade, {eps.eps(GroupElt(1), Q, 14)});
    CHECK(from_eps1.dim() > 0);
    CHECK(from_eps1.dim() < 14);
    // non-homogeneous generators are rejected
    Vec mixed = add(unit_vec(Q, 14, D11), unit_vec(Q, 14, B13));
    CHECK_THROWS_AS(graded_ideal_closure(dade, {mixed}), ValidationError);
}

TEST_CASE("structure checks on small prime-field instances") {
    GradedRing s = m2_checkerboard(FieldSpec::gf(2));
    auto rep = structure_checks(s);
    CHECK(rep.maximal_commutative);  // the diagonal is maximal commutative in M_2
    CHECK(rep.simple.status == CheckStatus::Done);
    CHECK(rep.simple.verdict);
    CHECK(rep.simple.exhaustive);
    CHECK(rep.graded_simple.verdict);
    CHECK(rep.right_nondegenerate.verdict);
    CHECK(rep.right_nondegenerate.exhaustive);

    GradedRing split = trivially_graded(
        morita_ring(trivial_context(FieldSpec::gf(2))).algebra().restrict_to_indices({0, 3}),
        GradingGroup::cyclic(1));
    auto rep2 = structure_checks(split);
    CHECK(!rep2.simple.verdict);  // k x k has a proper ideal

    // exhaustive modes refuse the rationals
    auto rep3 = structure_checks(m2_checkerboard(Q));
    CHECK(rep3.simple.status == CheckStatus::FieldUnsupported);
    CHECK(rep3.graded_simple.status == CheckStatus::FieldUnsupported);
    CHECK(rep3.right_nondegenerate.verdict);
    CHECK(!rep3.right_nondegenerate.exhaustive);

    // budget exhaustion is reported, not silently truncated
    auto rep4 = structure_checks(dade_modified(FieldSpec::gf(5)), 10);
    CHECK(rep4.simple.status == CheckStatus::BudgetExceeded);
}

TEST_CASE("right nondegeneracy agrees with the exact kernel computation") {
    for (const auto& field : {FieldSpec::gf(2), FieldSpec::gf(3)}) {
        for (const auto& ring :
             {m2_checkerboard(field), dade_modified(field), morita_ring(trivial_context(field))}) {
            auto rep = structure_checks(ring);
            // kernel-based oracle: s |-> (s t)_t on each component
            bool nondeg = true;
            const auto& alg = ring.algebra();
            for (const auto& g : ring.support()) {
                const auto& gi = ring.component_indices(g);
                const auto& ti = ring.component_indices(ring.group().inv(g));
                Matrix sys(field, ti.size() * alg.dim(), gi.size());
                for (std::size_t a = 0; a < gi.size(); ++a) {
                    std::size_t row = 0;
                    for (std::size_t t : ti) {
                        Vec prod = alg.multiply(unit_vec(field, alg.dim(), gi[a]),
                                                unit_vec(field, alg.dim(), t));
                        for (std::size_t c = 0; c < alg.dim(); ++c) sys.at(row + c, a) = prod[c];
                        row += alg.dim();
                    }
                }
                if (kernel(sys).dim() != 0) nondeg = false;
            }
            CHECK(rep.right_nondegenerate.verdict == nondeg);
        }
    }
}
