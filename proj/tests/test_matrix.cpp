#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "epsring/matrix.hpp"

using namespace epsring;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Matrix mat(const FieldSpec& spec, std::vector<std::vector<long long>> rows) {
    std::vector<Vec> vecs;
    for (const auto& r : rows) {
        Vec v;
        for (long long x : r) v.emplace_back(spec, x);
        vecs.push_back(std::move(v));
    }
    return Matrix::from_rows(spec, rows.empty() ? 0 : rows[0].size(), vecs);
}

Vec vec(const FieldSpec& spec, std::vector<long long> xs) {
    Vec v;
    for (long long x : xs) v.emplace_back(spec, x);
    return v;
}

Subspace random_subspace(std::mt19937_64& rng, const FieldSpec& spec, std::size_t ambient,
                         std::size_t generators) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < generators; ++i) {
        Vec v = zero_vec(spec, ambient);
        for (auto& x : v) x = Scalar(spec, static_cast<long long>(rng() % 5) - 2);
        rows.push_back(std::move(v));
    }
    return Subspace::span(spec, ambient, rows);
}

}  // namespace

TEST_CASE("rref basics") {
    CHECK(rref(mat(Q, {{2, 4}, {1, 2}})) == mat(Q, {{1, 2}}));
    Matrix id = Matrix::identity(Q, 3);
    CHECK(rref(id) == id);
    Matrix zero(Q, 2, 2);
    CHECK(rref(zero).rows() == 0);
}

TEST_CASE("rref is idempotent on random matrices") {
    std::mt19937_64 rng(5);
    for (const auto& spec : {Q, FieldSpec::gf(2), FieldSpec::gf(5)}) {
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Vec> rows;
            for (int i = 0; i < 4; ++i) {
                Vec v;
                for (int j = 0; j < 5; ++j)
                    v.emplace_back(spec, static_cast<long long>(rng() % 7) - 3);
                rows.push_back(std::move(v));
            }
            Matrix m = Matrix::from_rows(spec, 5, rows);
            CHECK(rref(rref(m)) == rref(m));
        }
    }
}

TEST_CASE("solve_affine examples") {
    // 2x = 1 has no solution over GF(2)
    FieldSpec f2 = FieldSpec::gf(2);
    CHECK(!solve_affine(mat(f2, {{2}}), vec(f2, {1})));
    // 2x = 1 over the rationals
    auto sol = solve_affine(mat(Q, {{2}}), vec(Q, {1}));
    REQUIRE(sol);
    CHECK(sol->particular[0] == Scalar::rational(1, 2));
    CHECK(sol->kernel.dim() == 0);
    // 0 x = 0: everything solves
    auto sol0 = solve_affine(mat(Q, {{0}}), vec(Q, {0}));
    REQUIRE(sol0);
    CHECK(sol0->particular[0].is_zero());
    CHECK(sol0->kernel.dim() == 1);
}

TEST_CASE("solve_affine solutions solve exactly on random systems") {
    std::mt19937_64 rng(11);
    for (const auto& spec : {Q, FieldSpec::gf(3)}) {
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<Vec> rows;
            for (int i = 0; i < 3; ++i) {
                Vec v;
                for (int j = 0; j < 4; ++j)
                    v.emplace_back(spec, static_cast<long long>(rng() % 5) - 2);
                rows.push_back(std::move(v));
            }
            Matrix a = Matrix::from_rows(spec, 4, rows);
            Vec x0;
            for (int j = 0; j < 4; ++j) x0.emplace_back(spec, static_cast<long long>(rng() % 5));
            Vec b = a.apply(x0);
            auto sol = solve_affine(a, b);
            REQUIRE(sol);
            CHECK(a.apply(sol->particular) == b);
            for (const auto& k : sol->kernel.basis())
                CHECK(a.apply(add(sol->particular, k)) == b);
        }
    }
}

TEST_CASE("subspace operations") {
    Vec x = unit_vec(Q, 3, 0), y = unit_vec(Q, 3, 1), z = unit_vec(Q, 3, 2);
    Subspace xa = Subspace::span(Q, 3, {x});
    Subspace ya = Subspace::span(Q, 3, {y});
    Subspace xy = Subspace::span(Q, 3, {x, y});
    Subspace yz = Subspace::span(Q, 3, {y, z});
    CHECK(xa.sum(ya) == xy);
    CHECK(xy.intersect(yz) == ya);
    CHECK(xy.contains(add(x, y)));
    CHECK(!xy.contains(z));
}

TEST_CASE("dimension formula on random pairs") {
    std::mt19937_64 rng(23);
    for (const auto& spec : {Q, FieldSpec::gf(2)}) {
        for (int trial = 0; trial < 25; ++trial) {
            Subspace v = random_subspace(rng, spec, 6, 3);
            Subspace w = random_subspace(rng, spec, 6, 3);
            CHECK(v.sum(w).dim() + v.intersect(w).dim() == v.dim() + w.dim());
            CHECK(v == v);  // reflexivity of canonical equality
            CHECK(v.sum(v) == v);
        }
    }
}

TEST_CASE("quotient sections") {
    Subspace plane = Subspace::span(Q, 3, {unit_vec(Q, 3, 0), unit_vec(Q, 3, 1)});
    Subspace line = Subspace::span(Q, 3, {unit_vec(Q, 3, 0)});
    QuotientSection qs(plane, line);
    CHECK(qs.dim() == 1);
    CHECK(is_zero_vec(qs.project(unit_vec(Q, 3, 0))));  // kernel is exactly w

    QuotientSection degenerate(plane, plane);
    CHECK(degenerate.dim() == 0);

    Subspace full2 = Subspace::full(Q, 2);
    QuotientSection identity_like(full2, Subspace(Q, 2));
    CHECK(identity_like.dim() == 2);
    Vec v = vec(Q, {3, -4});
    CHECK(identity_like.lift(identity_like.project(v)) == v);

    CHECK_THROWS_AS(QuotientSection(line, plane), Error);  // w not inside v
}

TEST_CASE("quotient projection kills exactly w on random data") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        Subspace w = random_subspace(rng, Q, 5, 2);
        Subspace v = w.sum(random_subspace(rng, Q, 5, 2));
        QuotientSection qs(v, w);
        CHECK(qs.dim() == v.dim() - w.dim());
        for (const auto& b : w.basis()) CHECK(is_zero_vec(qs.project(b)));
        for (const auto& b : v.basis()) {
            Vec back = qs.lift(qs.project(b));
            CHECK(w.contains(sub(back, b)));
        }
    }
}

TEST_CASE("infeasibility certificates witness unsolvable systems") {
    Matrix a = mat(Q, {{1, 1}, {2, 2}});
    Vec b = vec(Q, {1, 3});
    CHECK(!solve_affine(a, b));
    auto lambda = infeasibility_certificate(a, b);
    REQUIRE(lambda);
    // lambda^T a = 0 and lambda^T b = 1
    Matrix at = a.transpose();
    CHECK(is_zero_vec(at.apply(*lambda)));
    Scalar dot = Scalar::zero(Q);
    for (std::size_t i = 0; i < b.size(); ++i) dot += (*lambda)[i] * b[i];
    CHECK(dot.is_one());
    // feasible systems admit no certificate
    CHECK(!infeasibility_certificate(a, vec(Q, {1, 2})));
}
