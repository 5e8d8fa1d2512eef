#include "epsring/scalar.hpp"

#include <cstdlib>

namespace epsring {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

FieldSpec FieldSpec::gf(std::int64_t p) {
    if (p < 2 || p > (std::int64_t{1} << 31) || !is_prime(p))
        throw Error("field characteristic must be a prime below 2^31, got " + std::to_string(p));
    FieldSpec f;
    f.kind_ = FieldKind::PrimeField;
    f.p_ = p;
    return f;
}

std::string FieldSpec::str() const {
    return is_rationals() ? "q" : "gf:" + std::to_string(p_);
}

FieldSpec FieldSpec::parse(const std::string& text) {
    if (text == "q" || text == "Q") return rationals();
    if (text.rfind("gf:", 0) == 0) {
        char* end = nullptr;
        long long p = std::strtoll(text.c_str() + 3, &end, 10);
        if (end && *end == '\0') return gf(p);
    }
    throw ParseError("unknown field '" + text + "' (expected 'q' or 'gf:p')");
}

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
    v %= p;
    return v < 0 ? v + p : v;
}

// Modular inverse via extended Euclid.
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    return mod_reduce(t, p);
}

}  // namespace

Scalar::Scalar(const FieldSpec& spec, long long value) : spec_(spec) {
    if (spec_.is_rationals()) {
        q_ = value;
    } else {
        r_ = mod_reduce(value, spec_.characteristic());
    }
}

Scalar Scalar::rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error("zero denominator");
    Scalar s;
    // cpp_rational reduces by the gcd but requires a positive denominator
    if (den < 0)
        s.q_ = BigRat(-num, -den);
    else
        s.q_ = BigRat(num, den);
    return s;
}

bool Scalar::is_zero() const {
    return spec_.is_rationals() ? q_.is_zero() : r_ == 0;
}

bool Scalar::is_one() const {
    return spec_.is_rationals() ? q_ == 1 : r_ == 1;
}

void Scalar::require_same(const Scalar& o) const {
    if (spec_ != o.spec_)
        throw Error("field mismatch: " + spec_.str() + " vs " + o.spec_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same(o);
    Scalar out(spec_, 0);
    if (spec_.is_rationals())
        out.q_ = q_ + o.q_;
    else
        out.r_ = mod_reduce(r_ + o.r_, spec_.characteristic());
    return out;
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same(o);
    Scalar out(spec_, 0);
    if (spec_.is_rationals())
        out.q_ = q_ - o.q_;
    else
        out.r_ = mod_reduce(r_ - o.r_, spec_.characteristic());
    return out;
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same(o);
    Scalar out(spec_, 0);
    if (spec_.is_rationals())
        out.q_ = q_ * o.q_;
    else
        out.r_ = mod_reduce(r_ * o.r_, spec_.characteristic());
    return out;
}

Scalar Scalar::operator-() const {
    Scalar out(spec_, 0);
    if (spec_.is_rationals())
        out.q_ = -q_;
    else
        out.r_ = mod_reduce(-r_, spec_.characteristic());
    return out;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw Error("division by zero");
    Scalar out(spec_, 0);
    if (spec_.is_rationals())
        out.q_ = 1 / q_;
    else
        out.r_ = mod_inverse(r_, spec_.characteristic());
    return out;
}

bool Scalar::operator==(const Scalar& o) const {
    if (spec_ != o.spec_) return false;
    return spec_.is_rationals() ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
    if (!spec_.is_rationals()) return std::to_string(r_);
    std::string s = numerator(q_).str();
    if (denominator(q_) != 1) s += "/" + denominator(q_).str();
    return s;
}

Scalar Scalar::parse(const FieldSpec& spec, const std::string& text) {
    try {
        if (spec.is_rationals()) {
            auto slash = text.find('/');
            if (slash == std::string::npos) return rational(BigInt(text), 1);
            return rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
        }
        return Scalar(spec, std::stoll(text));
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("bad scalar '" + text + "' for field " + spec.str());
    }
}

}  // namespace epsring
