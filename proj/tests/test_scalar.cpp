#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "epsring/scalar.hpp"

using namespace epsring;

TEST_CASE("rational arithmetic is exact and canonical") {
    FieldSpec q = FieldSpec::rationals();
    Scalar half = Scalar::rational(1, 2);
    Scalar third = Scalar::rational(1, 3);
    CHECK((half + third).str() == "5/6");
    CHECK(Scalar::rational(2, 4) == half);
    CHECK(Scalar::rational(-1, -2) == half);
    CHECK(Scalar::rational(1, -2).str() == "-1/2");
    CHECK(Scalar(q, 7) + Scalar::zero(q) == Scalar(q, 7));
    CHECK(Scalar(q, 2).inv().str() == "1/2");
}

TEST_CASE("prime field arithmetic") {
    FieldSpec f3 = FieldSpec::gf(3);
    CHECK(Scalar(f3, 2) * Scalar(f3, 2) == Scalar(f3, 1));
    CHECK(Scalar(f3, 2).inv() == Scalar(f3, 2));
    CHECK(Scalar(f3, -1) == Scalar(f3, 2));
    CHECK_THROWS_AS(Scalar::zero(f3).inv(), Error);
    CHECK_THROWS_AS(FieldSpec::gf(4), Error);
    CHECK_THROWS_AS(FieldSpec::gf(1), Error);
    CHECK(is_prime(2));
    CHECK(is_prime(101));
    CHECK(!is_prime(91));
}

TEST_CASE("mixed-field operations are rejected") {
    Scalar a = Scalar(FieldSpec::gf(3), 1);
    Scalar b = Scalar(FieldSpec::gf(5), 1);
    CHECK_THROWS_AS(a + b, Error);
    CHECK_THROWS_AS(a * Scalar::one(FieldSpec::rationals()), Error);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(42);
    auto random_scalar = [&](const FieldSpec& spec) {
        if (spec.is_rationals()) {
            long long n = static_cast<long long>(rng() % 2001) - 1000;
            long long d = 1 + static_cast<long long>(rng() % 50);
            return Scalar::rational(n, d);
        }
        return Scalar(spec, static_cast<long long>(rng() % 1000));
    };
    for (const auto& spec : {FieldSpec::rationals(), FieldSpec::gf(2), FieldSpec::gf(7)}) {
        for (int trial = 0; trial < 50; ++trial) {
            Scalar a = random_scalar(spec), b = random_scalar(spec), c = random_scalar(spec);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == Scalar::zero(spec));
            if (!a.is_zero()) CHECK(a * a.inv() == Scalar::one(spec));
        }
    }
}

TEST_CASE("big products never overflow") {
    std::mt19937_64 rng(7);
    Scalar acc = Scalar::one(FieldSpec::rationals());
    Scalar inv_acc = Scalar::one(FieldSpec::rationals());
    for (int i = 0; i < 100; ++i) {
        long long n = static_cast<long long>(rng()) | 1;  // odd, so nonzero
        long long d = static_cast<long long>(rng() % 1000000) + 1;
        Scalar x = Scalar::rational(n, d);
        acc *= x;
        inv_acc *= x.inv();
    }
    CHECK(acc * inv_acc == Scalar::one(FieldSpec::rationals()));
}

TEST_CASE("serialization round trip") {
    FieldSpec q = FieldSpec::rationals();
    for (const char* text : {"0", "-3", "5/6", "-22/7"})
        CHECK(Scalar::parse(q, text).str() == text);
    FieldSpec f5 = FieldSpec::gf(5);
    CHECK(Scalar::parse(f5, "3").residue() == 3);
    CHECK(FieldSpec::parse("gf:5") == f5);
    CHECK(FieldSpec::parse("q") == q);
    CHECK_THROWS_AS(FieldSpec::parse("gf:six"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(q, "x"), ParseError);
}
