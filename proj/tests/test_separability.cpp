#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "epsring/gallery.hpp"
#include "epsring/separability.hpp"

using namespace epsring;

namespace {

const FieldSpec Q = FieldSpec::rationals();

constexpr std::size_t D11 = 0, D22 = 6, D33 = 8;

bool decides_separable(const GradedRing& s) {
    EpsilonData eps = compute_epsilon(s);
    return std::holds_alternative<SeparabilityCertificate>(decide_separability(s, eps, nullptr));
}

}  // namespace

TEST_CASE("block-pattern ring: separable with the displayed witness") {
    for (const auto& field : {FieldSpec::gf(2), FieldSpec::gf(3), Q}) {
        GradedRing dade = dade_modified(field);
        EpsilonData eps = compute_epsilon(dade);
        TensorOverBase tensor(dade.algebra(), dade.principal_subspace());
        auto outcome = decide_separability(dade, eps, &tensor);
        auto* cert = std::get_if<SeparabilityCertificate>(&outcome);
        REQUIRE(cert);
        CHECK(cert->checked);
        CHECK(cert->m_of_x_is_one);
        CHECK(cert->x_central);

        // the displayed witness diag(1_A, 1_A, 1_A - 1_B) also verifies
        Vec c = zero_vec(field, 14);
        c[D11] = c[D11 + 1] = c[D22] = c[D22 + 1] = Scalar::one(field);
        c[D33 + 1] = Scalar::one(field);  // 1_A - 1_B = (0, 1)
        auto paper_cert = certificate_from_witness(dade, eps, c, &tensor);
        CHECK(paper_cert.m_of_x_is_one);
        CHECK(paper_cert.x_central);
    }
}

TEST_CASE("group algebra of Z2 over GF(2) is not separable") {
    GradedRing s = group_algebra(GradingGroup::cyclic(2), FieldSpec::gf(2));
    EpsilonData eps = compute_epsilon(s);
    auto outcome = decide_separability(s, eps, nullptr);
    auto* notsep = std::get_if<NotSeparable>(&outcome);
    REQUIRE(notsep);
    // the infeasibility functional kills the trace image but not the unit
    const Vec& lambda = notsep->infeasibility_functional;
    Subspace z = z_fin(s, eps, ZFinKind::Plain);
    for (const auto& zb : z.basis()) {
        Vec tr = trace_gamma(s, eps, zb);
        Scalar dot = Scalar::zero(s.algebra().field());
        for (std::size_t i = 0; i < tr.size(); ++i) dot += lambda[i] * tr[i];
        CHECK(dot.is_zero());
    }
    Scalar at_unit = Scalar::zero(s.algebra().field());
    for (std::size_t i = 0; i < lambda.size(); ++i)
        at_unit += lambda[i] * s.algebra().unit()[i];
    CHECK(at_unit.is_one());

    auto oracle = oracle_separability(s.algebra(), s.principal_subspace());
    CHECK(!oracle.separable);
}

TEST_CASE("trivially graded rings are separable over themselves") {
    GradedRing s = trivially_graded(group_algebra(GradingGroup::cyclic(2), Q).algebra(),
                                    GradingGroup::cyclic(2));
    EpsilonData eps = compute_epsilon(s);
    TensorOverBase tensor(s.algebra(), s.principal_subspace());
    auto outcome = decide_separability(s, eps, &tensor);
    auto* cert = std::get_if<SeparabilityCertificate>(&outcome);
    REQUIRE(cert);
    CHECK(cert->witness_c == s.algebra().unit());
}

TEST_CASE("oracle on classical cases") {
    // S = R: the class of 1 (x) 1 is a separability element
    GradedRing m2 = matrix_pattern_ring(Q, GradingGroup::cyclic(2), {GroupElt(0), GroupElt(1)});
    auto self = oracle_separability(m2.algebra(), Subspace::full(Q, 4));
    CHECK(self.separable);

    // k[Z2] over the rationals: x = (1/2)(1 (x) 1 + u (x) u)
    GradedRing kz2 = group_algebra(GradingGroup::cyclic(2), Q);
    TensorOverBase t(kz2.algebra(), kz2.principal_subspace());
    auto res = oracle_separability(kz2.algebra(), kz2.principal_subspace(), &t);
    REQUIRE(res.separable);
    Vec expected = zero_vec(Q, t.dim());
    Vec one = kz2.algebra().unit(), u = unit_vec(Q, 2, 1);
    expected = add(t.simple_tensor(one, one), t.simple_tensor(u, u));
    expected = scaled(expected, Scalar::rational(1, 2));
    CHECK(t.mult(expected) == one);
    CHECK(t.mult(*res.x_quotient) == one);

    // dual numbers over the base field: the classical non-separable algebra
    AlgebraBuilder b(Q, 2);
    b.add(0, 0, 0, 1);
    b.add(0, 1, 1, 1);
    b.add(1, 0, 1, 1);
    b.unit[0] = Scalar::one(Q);
    StructureAlgebra dual = b.build();
    auto res2 = oracle_separability(dual, Subspace::span(Q, 2, {dual.unit()}));
    CHECK(!res2.separable);
}

TEST_CASE("frobenius systems") {
    GradedRing trivial = trivially_graded(group_algebra(GradingGroup::cyclic(2), Q).algebra(),
                                          GradingGroup::cyclic(2));
    EpsilonData teps = compute_epsilon(trivial);
    FrobeniusSystem fs = frobenius_system(trivial, teps);
    CHECK(fs.pairs.size() == 1);
    CHECK(fs.identities_verified);

    GradedRing dade = dade_modified(FieldSpec::gf(3));
    EpsilonData deps = compute_epsilon(dade);
    FrobeniusSystem dfs = frobenius_system(dade, deps);
    CHECK(dfs.pairs.size() == 4);  // one pair at the identity, three at degree one
    CHECK(dfs.identities_verified);
    CHECK(dfs.finite_group);

    // Frobenius without separability
    GradedRing kz2 = group_algebra(GradingGroup::cyclic(2), FieldSpec::gf(2));
    EpsilonData keps = compute_epsilon(kz2);
    FrobeniusSystem kfs = frobenius_system(kz2, keps);
    CHECK(kfs.identities_verified);
    CHECK(!decides_separable(kz2));

    // integer-graded with finite support: the identities still hold and the
    // theorem hypothesis is reported false
    GradedRing morita = morita_ring(trivial_context(Q));
    EpsilonData meps = compute_epsilon(morita);
    FrobeniusSystem mfs = frobenius_system(morita, meps);
    CHECK(!mfs.finite_group);
    CHECK(mfs.identities_verified);
}

TEST_CASE("kadison criterion agrees with the trace decision") {
    for (const auto& field : {FieldSpec::gf(2), FieldSpec::gf(3), Q}) {
        for (const auto& ring :
             {dade_modified(field), group_algebra(GradingGroup::cyclic(2), field),
              trivially_graded(dade_modified(field).algebra(), GradingGroup::cyclic(2))}) {
            EpsilonData eps = compute_epsilon(ring);
            FrobeniusSystem fs = frobenius_system(ring, eps);
            REQUIRE(fs.identities_verified);
            bool decided = std::holds_alternative<SeparabilityCertificate>(
                decide_separability(ring, eps, nullptr));
            CHECK(kadison_separable(ring, fs) == decided);
        }
    }
}

TEST_CASE("invertibility of the trace of one") {
    // char 2: not invertible yet separable; char != 2: invertible
    GradedRing d2 = dade_modified(FieldSpec::gf(2));
    EpsilonData e2 = compute_epsilon(d2);
    auto rep2 = trace_of_one_invertible(d2, e2);
    CHECK(!rep2.invertible);
    CHECK(decides_separable(d2));

    GradedRing dq = dade_modified(Q);
    EpsilonData eq = compute_epsilon(dq);
    auto repq = trace_of_one_invertible(dq, eq);
    CHECK(repq.invertible);
    CHECK(repq.implies_separable_checked.value());

    GradedRing d3 = dade_modified(FieldSpec::gf(3));
    EpsilonData e3 = compute_epsilon(d3);
    CHECK(trace_of_one_invertible(d3, e3).invertible);

    GradedRing trivial = trivially_graded(dq.algebra(), GradingGroup::cyclic(2));
    EpsilonData te = compute_epsilon(trivial);
    auto rept = trace_of_one_invertible(trivial, te);
    CHECK(rept.invertible);
    CHECK(rept.trace_of_one == trivial.algebra().unit());
}

TEST_CASE("group algebra separability over various fields") {
    // k[Z2] over GF(2): 2 = 0; over the rationals: separable
    CHECK(!decides_separable(group_algebra(GradingGroup::cyclic(2), FieldSpec::gf(2))));
    CHECK(decides_separable(group_algebra(GradingGroup::cyclic(2), Q)));
    // k[Z3]: 3 = 0 over GF(3), but 3 = 1 over GF(2)
    CHECK(!decides_separable(group_algebra(GradingGroup::cyclic(3), FieldSpec::gf(3))));
    CHECK(decides_separable(group_algebra(GradingGroup::cyclic(3), FieldSpec::gf(2))));
}
