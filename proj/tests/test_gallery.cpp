#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "epsring/corpus.hpp"
#include "epsring/separability.hpp"

using namespace epsring;

namespace {
const FieldSpec Q = FieldSpec::rationals();
}

TEST_CASE("block-pattern rings have the stated dimensions and verdicts") {
    GradedRing mod = dade_modified(FieldSpec::gf(2));
    CHECK(mod.algebra().dim() == 14);
    CHECK(mod.algebra().validate().ok());
    CHECK(mod.validate_grading().ok());
    auto cls = classify(mod);
    CHECK(cls.is_epsilon_strong);
    CHECK(!cls.is_strong);

    GradedRing orig = dade_original(FieldSpec::gf(2));
    CHECK(orig.algebra().dim() == 18);
    auto cls2 = classify(orig);
    CHECK(cls2.is_strong);
}

TEST_CASE("morita contexts validate and reject broken pairings") {
    MoritaContext ctx = trivial_context(Q);
    validate_context(ctx);
    // breaking strictness: zero out phi
    MoritaContext broken = ctx;
    broken.phi[0][0] = zero_vec(Q, 1);
    CHECK_THROWS_AS(validate_context(broken), ValidationError);
    // breaking the pairing compatibility: scale psi only
    MoritaContext skew = ctx;
    skew.psi[0][0] = scaled(skew.psi[0][0], Scalar(Q, 2));
    CHECK_THROWS_AS(validate_context(skew), ValidationError);
}

TEST_CASE("morita ring of the column-row context") {
    GradedRing s = morita_ring(column_row_context(Q, 2));
    CHECK(s.algebra().dim() == 9);  // M_2 + columns + rows + k
    CHECK(s.algebra().validate().ok());
    auto cls = classify(s);
    CHECK(cls.is_epsilon_strong);
    CHECK(!cls.is_strong);
    EpsilonData eps = compute_epsilon(s);
    CHECK(std::holds_alternative<SeparabilityCertificate>(decide_separability(s, eps, nullptr)));
}

TEST_CASE("morita ring from a strongly graded ring") {
    GradedRing base = dade_original(FieldSpec::gf(3));
    GradedRing s = morita_from_strong(base, GroupElt(1));
    CHECK(s.algebra().dim() == 36);  // 10 + 8 + 8 + 10
    CHECK(!s.group().is_finite());
    auto supp = s.support();
    CHECK(supp.size() == 3);
    EpsilonData eps = compute_epsilon(s);
    CHECK(std::holds_alternative<SeparabilityCertificate>(decide_separability(s, eps, nullptr)));

    // requires surjective pairings at the chosen degree
    GradedRing not_strong = dade_modified(FieldSpec::gf(3));
    CHECK_THROWS_AS(morita_from_strong(not_strong, GroupElt(1)), Error);

    GradedRing small = morita_from_strong(group_algebra(GradingGroup::cyclic(2), Q), GroupElt(1));
    CHECK(small.algebra().dim() == 4);
}

TEST_CASE("every corpus instance validates and is epsilon-strong") {
    auto corpus = make_corpus(7, 60);
    CHECK(corpus.size() >= 60);
    for (const auto& inst : corpus) {
        CAPTURE(inst.name);
        CHECK(inst.ring.algebra().validate().ok());
        CHECK(inst.ring.validate_grading().ok());
        CHECK(std::holds_alternative<EpsilonData>(try_compute_epsilon(inst.ring)));
    }
}

TEST_CASE("negative instances validate but are not epsilon-strong") {
    for (const auto& inst : negative_instances()) {
        CAPTURE(inst.name);
        CHECK(inst.ring.algebra().validate().ok());
        CHECK(inst.ring.validate_grading().ok());
        CHECK(std::holds_alternative<EpsilonFailure>(try_compute_epsilon(inst.ring)));
    }
}

TEST_CASE("corpus generation is deterministic per seed") {
    auto a = make_corpus(3, 30);
    auto b = make_corpus(3, 30);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].name == b[i].name);
        CHECK(a[i].ring.algebra().dim() == b[i].ring.algebra().dim());
        CHECK(a[i].ring.degrees() == b[i].ring.degrees());
    }
}

TEST_CASE("group algebras and twisted variants") {
    GradedRing klein = group_algebra(
        GradingGroup::direct_product(GradingGroup::cyclic(2), GradingGroup::cyclic(2)), Q);
    CHECK(klein.algebra().dim() == 4);
    CHECK(classify(klein).is_strong);

    GradedRing tw = twisted_z2_group_algebra(Q, Scalar(Q, 2));
    CHECK(tw.algebra().validate().ok());
    CHECK(classify(tw).is_strong);
    CHECK_THROWS_AS(twisted_z2_group_algebra(Q, Scalar::zero(Q)), Error);
}
