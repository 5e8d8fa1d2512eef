#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "epsring/errors.hpp"

namespace epsring {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

bool is_prime(std::int64_t n);

enum class FieldKind { Rationals, PrimeField };

/// Runtime description of the coefficient field: the rationals or GF(p)
/// with p prime. Extension fields are deliberately unsupported.
class FieldSpec {
public:
    FieldSpec() = default;  // rationals

    static FieldSpec rationals() { return FieldSpec{}; }
    static FieldSpec gf(std::int64_t p);

    FieldKind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == FieldKind::Rationals; }
    // 0 for the rationals, p for GF(p).
    std::int64_t characteristic() const { return p_; }

    bool operator==(const FieldSpec&) const = default;

    std::string str() const;     // "q" or "gf:p"
    static FieldSpec parse(const std::string& text);

private:
    FieldKind kind_ = FieldKind::Rationals;
    std::int64_t p_ = 0;
};

/// An exact field element. Rationals are kept as reduced fractions with
/// positive denominator, prime-field values as residues in [0, p), so
/// equality is plain structural comparison.
class Scalar {
public:
    Scalar() : Scalar(FieldSpec::rationals(), 0) {}
    Scalar(const FieldSpec& spec, long long value);

    static Scalar zero(const FieldSpec& spec) { return Scalar(spec, 0); }
    static Scalar one(const FieldSpec& spec) { return Scalar(spec, 1); }
    static Scalar rational(const BigInt& num, const BigInt& den);

    const FieldSpec& spec() const { return spec_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inv() const;  // throws Error on zero
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Rationals print as "n" or "n/d", prime-field values as the residue.
    std::string str() const;
    static Scalar parse(const FieldSpec& spec, const std::string& text);

    const BigRat& rational_value() const { return q_; }
    std::int64_t residue() const { return r_; }

private:
    void require_same(const Scalar& o) const;

    FieldSpec spec_;
    BigRat q_;             // rationals payload
    std::int64_t r_ = 0;   // prime-field payload
};

}  // namespace epsring
